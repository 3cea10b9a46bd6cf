#include "koszul/io.hpp"

#include <fstream>
#include <sstream>

namespace koszul {

Json algebra_to_json(const QuadraticAlgebra& a) {
    Json j;
    j["p"] = a.modulus();
    j["generators"] = a.generator_labels();
    Json relators = Json::array();
    size_t d = a.generator_count();
    for (size_t r = 0; r < a.relators().dim(); ++r) {
        Json combo = Json::array();
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) {
                uint32_t c = a.relators().basis().at(r, i * d + k);
                if (!c) continue;
                Json term;
                term["monomial"] = {a.generator_labels()[i], a.generator_labels()[k]};
                term["coeff"] = c;
                combo.push_back(std::move(term));
            }
        relators.push_back(std::move(combo));
    }
    j["relators"] = std::move(relators);
    if (a.distinguished_t()) j["t"] = a.generator_labels()[*a.distinguished_t()];
    return j;
}

QuadraticAlgebra algebra_from_json(const Json& j) {
    try {
        uint32_t p = j.at("p").get<uint32_t>();
        std::vector<std::string> labels = j.at("generators").get<std::vector<std::string>>();
        size_t d = labels.size();
        auto index_of = [&](const std::string& name) -> size_t {
            for (size_t i = 0; i < d; ++i)
                if (labels[i] == name) return i;
            fail(ErrorKind::FormatError, "unknown generator '" + name + "' in algebra file");
        };
        const Json& rel = j.at("relators");
        FpMatrix rows(p, rel.size(), d * d);
        size_t r = 0;
        for (const auto& combo : rel) {
            for (const auto& term : combo) {
                const Json& mon = term.at("monomial");
                if (mon.size() != 2)
                    fail(ErrorKind::FormatError, "relator monomials must have two factors");
                size_t i = index_of(mon[0].get<std::string>());
                size_t k = index_of(mon[1].get<std::string>());
                int64_t c = term.at("coeff").get<int64_t>();
                rows.set(r, i * d + k, Fp(p).reduce(c));
            }
            ++r;
        }
        std::optional<size_t> t;
        if (j.contains("t")) t = index_of(j.at("t").get<std::string>());
        return QuadraticAlgebra(p, std::move(labels), Subspace::span(rows), t);
    } catch (const Json::exception& e) {
        fail(ErrorKind::FormatError, std::string("bad algebra document: ") + e.what());
    }
}

Json presentation_to_json(const GroupPresentation& g) {
    Json j;
    j["p"] = g.p;
    j["generators"] = g.generator_labels;
    Json rel = Json::array();
    for (const auto& w : g.relators) rel.push_back(render_word(w, g.generator_labels));
    j["relators"] = std::move(rel);
    return j;
}

GroupPresentation presentation_from_json(const Json& j) {
    try {
        GroupPresentation g;
        g.p = j.at("p").get<uint32_t>();
        g.generator_labels = j.at("generators").get<std::vector<std::string>>();
        for (const auto& w : j.at("relators"))
            g.relators.push_back(
                parse_word(w.get<std::string>(), g.generator_labels.size(), g.generator_labels));
        return g;
    } catch (const Json::exception& e) {
        fail(ErrorKind::FormatError, std::string("bad presentation document: ") + e.what());
    }
}

Json table_to_json(const BigradedTable& t) {
    Json entries = Json::array();
    for (const auto& [ij, v] : t.entries)
        entries.push_back(Json::array({ij.first, ij.second, v}));
    Json j;
    j["i_max"] = t.i_max;
    j["j_max"] = t.j_max;
    j["entries"] = std::move(entries);
    return j;
}

Json certificate_to_json(const PbwCertificate& cert, const std::vector<std::string>& labels) {
    Json j;
    Json order = Json::array();
    for (uint8_t g : cert.order.permutation())
        order.push_back(g < labels.size() ? labels[g] : "X" + std::to_string(g + 1));
    j["order"] = std::move(order);
    Json rules = Json::array();
    for (const auto& lead : cert.system.leads_sorted()) {
        Json rule;
        rule["lead"] = render_poly(
            NcPoly::monomial(cert.system.p, cert.system.d, MultiIndex{lead.first, lead.second}),
            labels);
        rule["tail"] = render_poly(cert.system.rules.at(lead), labels);
        rules.push_back(std::move(rule));
    }
    j["rules"] = std::move(rules);
    Json crits = Json::array();
    for (const auto& cr : cert.criticals) {
        Json c;
        c["monomial"] =
            render_poly(NcPoly::monomial(cert.system.p, cert.system.d, cr.monomial), labels);
        Json verts = Json::array();
        for (const auto& v : cr.graph.vertices) verts.push_back(render_poly(v, labels));
        c["vertices"] = std::move(verts);
        Json edges = Json::array();
        for (const auto& [a, b] : cr.graph.edges) edges.push_back(Json::array({a, b}));
        c["edges"] = std::move(edges);
        c["terminal"] = cr.graph.terminals.front();
        crits.push_back(std::move(c));
    }
    j["criticals"] = std::move(crits);
    return j;
}

Json report_to_json(const VerificationReport& rep) {
    Json j;
    j["schema_version"] = 1;
    j["kind"] = "verification_report";
    j["theorem"] = theorem_name(rep.theorem);
    j["recipe"] = rep.recipe;
    j["p"] = rep.p;
    j["degree"] = rep.degree;
    j["verdict"] = rep.pass ? "PASS" : "FAIL";
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (rep.cohomology) j["cohomology"] = algebra_to_json(*rep.cohomology);
    if (rep.group_side) {
        const char* key = (rep.theorem == Theorem::B || rep.theorem == Theorem::C)
                              ? "group_side"
                              : "quadratic_dual";
        j[key] = algebra_to_json(*rep.group_side);
    }
    Json pbw;
    if (rep.cert_cohomology) {
        Json order = Json::array();
        for (uint8_t g : rep.cert_cohomology->order.permutation())
            order.push_back(rep.cohomology->generator_labels()[g]);
        pbw["cohomology_order"] = std::move(order);
        pbw["cohomology_criticals"] = rep.cert_cohomology->criticals.size();
    }
    if (rep.cert_group) {
        Json order = Json::array();
        for (uint8_t g : rep.cert_group->order.permutation())
            order.push_back(rep.group_side->generator_labels()[g]);
        pbw["group_order"] = std::move(order);
        pbw["group_criticals"] = rep.cert_group->criticals.size();
    }
    j["pbw"] = std::move(pbw);
    j["cobar"] = table_to_json(rep.cobar);
    return j;
}

Json report_from_json(const Json& j) {
    try {
        if (j.at("schema_version").get<int>() != 1)
            fail(ErrorKind::FormatError, "unsupported report schema version");
        if (j.at("kind").get<std::string>() != "verification_report")
            fail(ErrorKind::FormatError, "not a verification report");
        Json out = j;
        // validate the algebra blocks round-trip
        if (j.contains("cohomology")) algebra_from_json(j.at("cohomology"));
        if (j.contains("group_side")) algebra_from_json(j.at("group_side"));
        if (j.contains("quadratic_dual")) algebra_from_json(j.at("quadratic_dual"));
        for (const auto& c : j.at("checks")) {
            (void)c.at("name").get<std::string>();
            (void)c.at("pass").get<bool>();
        }
        return out;
    } catch (const Json::exception& e) {
        fail(ErrorKind::FormatError, std::string("bad report document: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::FormatError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::FormatError, "cannot write '" + path + "'");
    out << content;
}

std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "theorem " << theorem_name(rep.theorem) << "  recipe " << rep.recipe << "  p=" << rep.p
       << "  degree=" << rep.degree << "\n";
    for (const auto& c : rep.checks) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (rep.pass ? "PASS" : "FAIL") << "  (" << rep.timing_ms << " ms)\n";
    return os.str();
}

}  // namespace koszul
