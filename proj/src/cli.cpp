#include "koszul/cli.hpp"

#include <CLI11.hpp>

#include "koszul/cobar.hpp"
#include "koszul/graded.hpp"
#include "koszul/grouptable.hpp"
#include "koszul/io.hpp"
#include "koszul/pbw.hpp"

namespace koszul {

namespace {

constexpr const char* kGrammarHelp = R"(word grammar:
  w := x1 | x1^-1 | x1^3 | [w,w] | (w) | w*w  (juxtaposition with *)

recipe s-expression grammar:
  r := (free d)
     | (demushkin d i q=<p-power or 0>)
     | (demushkin d ii f=<2,3,..>|f=inf)
     | (demushkin d iii f=<2,3,..>|f=inf)
     | (demushkin d iv f=<2,3,..>)
     | (freeprod r r) | (semidirect m r)
     | euclid | (pfr-freeprod r r) | (pfr-semidirect m r)

algebra files: JSON with fields p, generators, relators
  (list of [{"monomial": [g, g], "coeff": n}, ..]), optional t.
presentation files: JSON with fields p, generators, relators (word strings).
group tables: CSV, first line 'identity,<index>', then |G| rows of products.)";

DeglexOrder order_from_flag(const std::string& flag, const std::vector<std::string>& labels) {
    std::vector<uint8_t> perm;
    std::string cur;
    std::istringstream in(flag);
    while (std::getline(in, cur, ',')) {
        auto it = std::find(labels.begin(), labels.end(), cur);
        if (it == labels.end()) fail(ErrorKind::FormatError, "unknown generator '" + cur + "' in --order");
        perm.push_back(static_cast<uint8_t>(it - labels.begin()));
    }
    if (perm.size() != labels.size())
        fail(ErrorKind::FormatError, "--order must list every generator exactly once");
    return DeglexOrder::from_permutation(perm);
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

struct Options {
    std::string file_a, file_b, mode, order, recipe, theorem, side = "both";
    size_t degree = 5;
    size_t imax = 3, jmax = 6;
    long budget = kDefaultMonomialBudget;
    size_t pbw_budget = kDefaultPbwBudget;
    uint64_t seed = 0;
    bool seed_set = false;
    uint32_t p = 2;
    bool json = false;
    bool emit_certificate = false;
};

int cmd_algebra_dual(const Options& o, std::ostream& out) {
    auto a = algebra_from_json(Json::parse(read_text_file(o.file_a)));
    out << algebra_to_json(quadratic_dual(a)).dump(2) << "\n";
    return 0;
}

int cmd_algebra_combine(const Options& o, std::ostream& out) {
    auto a = algebra_from_json(Json::parse(read_text_file(o.file_a)));
    auto b = algebra_from_json(Json::parse(read_text_file(o.file_b)));
    CombineMode mode;
    if (o.mode == "direct-sum") mode = CombineMode::DirectSum;
    else if (o.mode == "free-product") mode = CombineMode::FreeProduct;
    else if (o.mode == "sym-tensor") mode = CombineMode::SymTensor;
    else if (o.mode == "skew-tensor") mode = CombineMode::SkewTensor;
    else fail(ErrorKind::FormatError, "unknown combine mode '" + o.mode + "'");
    out << algebra_to_json(combine(a, b, mode)).dump(2) << "\n";
    return 0;
}

int cmd_algebra_hilbert(const Options& o, std::ostream& out) {
    auto a = algebra_from_json(Json::parse(read_text_file(o.file_a)));
    auto h = hilbert_prefix(a, o.degree, o.budget);
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "hilbert_prefix";
        j["dims"] = h;
        out << j.dump(2) << "\n";
    } else {
        out << join_longs(h) << "\n";
    }
    return 0;
}

int cmd_algebra_ext(const Options& o, std::ostream& out) {
    auto a = algebra_from_json(Json::parse(read_text_file(o.file_a)));
    auto table = cobar_ext_dims(a, o.imax, o.jmax, o.budget);
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "ext_table";
        j["table"] = table_to_json(table);
        out << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i <= table.i_max; ++i) {
            for (size_t j = 0; j <= table.j_max; ++j) out << (j ? " " : "") << table.at(i, j);
            out << "\n";
        }
    }
    return 0;
}

int cmd_algebra_pbw(const Options& o, std::ostream& out) {
    auto a = algebra_from_json(Json::parse(read_text_file(o.file_a)));
    std::optional<PbwCertificate> cert;
    std::optional<ConfluenceCounterexample> cex;
    if (!o.order.empty()) {
        auto sys = normalize_basis(a.relators(), order_from_flag(o.order, a.generator_labels()));
        auto res = is_confluent(sys);
        if (res.confluent) cert = std::move(res.certificate);
        else cex = std::move(res.counterexample);
    } else {
        cert = pbw_search(a, o.pbw_budget, o.seed_set ? std::optional<uint64_t>(o.seed) : std::nullopt);
    }
    if (!cert) {
        if (cex) {
            out << "not confluent: critical monomial "
                << render_poly(NcPoly::monomial(a.modulus(), a.generator_count(), cex->monomial),
                               a.generator_labels())
                << " has " << cex->normal_forms.size() << " normal forms:\n";
            for (const auto& nf : cex->normal_forms)
                out << "  " << render_poly(nf, a.generator_labels()) << "\n";
        } else {
            out << "no confluent deglex order found within budget\n";
        }
        return 1;
    }
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "pbw_certificate";
        j["certificate"] = certificate_to_json(*cert, a.generator_labels());
        out << j.dump(2) << "\n";
    } else if (o.emit_certificate) {
        out << render_certificate(*cert, a.generator_labels());
    } else {
        out << "PBW: confluent under order";
        for (uint8_t g : cert->order.permutation()) out << ' ' << a.generator_labels()[g];
        out << " (" << cert->criticals.size() << " critical monomials)\n";
    }
    return 0;
}

int cmd_group_initial_forms(const Options& o, std::ostream& out) {
    auto g = presentation_from_json(Json::parse(read_text_file(o.file_a)));
    Json forms = Json::array();
    for (const auto& w : g.relators) {
        InitialForm f = initial_form(w, g.p, g.generator_count(), o.degree, o.budget);
        if (o.json) {
            Json jf;
            jf["degree"] = f.degree;
            jf["poly"] = render_poly(f.poly, g.generator_labels);
            forms.push_back(std::move(jf));
        } else {
            out << "degree " << f.degree << ": " << render_poly(f.poly, g.generator_labels) << "\n";
        }
    }
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "initial_forms";
        j["forms"] = std::move(forms);
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_group_grade(const Options& o, std::ostream& out) {
    auto g = presentation_from_json(Json::parse(read_text_file(o.file_a)));
    auto cand = graded_algebra_candidate(g, std::max<size_t>(o.degree, kDefaultMagnusTruncation),
                                         o.budget);
    std::vector<long> dims;
    for (size_t n = 0; n <= o.degree; ++n) dims.push_back(cand.quotient.dim(n));
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "graded_candidate";
        j["quadratic"] = cand.quadratic.has_value();
        j["dims"] = dims;
        if (cand.quadratic) j["algebra"] = algebra_to_json(*cand.quadratic);
        out << j.dump(2) << "\n";
    } else {
        out << "initial form degrees:";
        for (const auto& f : cand.forms) out << ' ' << f.degree;
        out << "\nquadratic presentation: " << (cand.quadratic ? "yes" : "no") << "\n";
        out << "dims: " << join_longs(dims) << "\n";
    }
    return 0;
}

int cmd_group_pair(const Options& o, std::ostream& out) {
    auto g = presentation_from_json(Json::parse(read_text_file(o.file_a)));
    size_t d = g.generator_count();
    Json rels = Json::array();
    for (const auto& w : g.relators) {
        Json rows = Json::array();
        for (size_t k = 0; k < d; ++k) {
            Json row = Json::array();
            for (size_t l = 0; l < d; ++l) row.push_back(pairing_value(w, k, l, g.p, d).value);
            rows.push_back(std::move(row));
        }
        if (!o.json) {
            out << "relator " << render_word(w, g.generator_labels) << ":\n";
            for (const auto& row : rows) {
                out << " ";
                for (const auto& v : row) out << ' ' << v.get<uint32_t>();
                out << "\n";
            }
        }
        rels.push_back(std::move(rows));
    }
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "pairing_values";
        j["relators"] = std::move(rels);
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_group_mild_check(const Options& o, std::ostream& out) {
    auto g = presentation_from_json(Json::parse(read_text_file(o.file_a)));
    size_t d = g.generator_count();
    std::vector<InitialForm> forms;
    for (const auto& w : g.relators)
        forms.push_back(initial_form(w, g.p, d, kDefaultMagnusTruncation, o.budget));
    bool ok = strongly_free_check(forms, g.p, d, o.degree, o.budget);
    std::vector<NcPoly> polys;
    for (const auto& f : forms) polys.push_back(f.poly);
    GradedQuotient q(g.p, d, polys, o.budget);
    auto dims = q.hilbert_prefix(o.degree);
    if (o.json) {
        Json j;
        j["schema_version"] = 1;
        j["kind"] = "mild_check";
        j["strongly_free"] = ok;
        j["dims"] = dims;
        out << j.dump(2) << "\n";
    } else {
        out << "strongly free: " << (ok ? "yes" : "no") << "\n";
        out << "dims: " << join_longs(dims) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_oracle(const Options& o, bool jennings, std::ostream& out) {
    FiniteGroupTable t = FiniteGroupTable::parse_csv(read_text_file(o.file_a));
    if (jennings) {
        auto res = jennings_oracle(t, o.p, o.degree);
        std::vector<long> dims;
        for (long v : res.gr_dims) {
            dims.push_back(v);
            if (v == 0) break;  // the algebra is finite; later layers stay 0
        }
        if (o.json) {
            Json j;
            j["schema_version"] = 1;
            j["kind"] = "jennings";
            j["gr_dims"] = dims;
            Json subs = Json::array();
            for (const auto& s : res.dimension_subgroups)
                subs.push_back(std::vector<size_t>(s.begin(), s.end()));
            j["dimension_subgroups"] = std::move(subs);
            out << j.dump(2) << "\n";
        } else {
            out << "gr dims: " << join_longs(dims) << "\n";
            for (size_t n = 0; n < res.dimension_subgroups.size(); ++n) {
                out << "G_(" << n + 1 << "): {";
                bool first = true;
                for (size_t g : res.dimension_subgroups[n]) {
                    out << (first ? "" : ",") << g;
                    first = false;
                }
                out << "}\n";
            }
        }
    } else {
        auto chain = lazard_oracle(t, o.p, o.degree);
        if (o.json) {
            Json j;
            j["schema_version"] = 1;
            j["kind"] = "lazard";
            Json subs = Json::array();
            for (const auto& s : chain) subs.push_back(std::vector<size_t>(s.begin(), s.end()));
            j["dimension_subgroups"] = std::move(subs);
            out << j.dump(2) << "\n";
        } else {
            for (size_t nidx = 0; nidx < chain.size(); ++nidx) {
                out << "G_(" << nidx + 1 << "): {";
                bool first = true;
                for (size_t g : chain[nidx]) {
                    out << (first ? "" : ",") << g;
                    first = false;
                }
                out << "}\n";
            }
        }
    }
    return 0;
}

int cmd_et_build(const Options& o, std::ostream& out) {
    EtRecipe r = parse_recipe(o.recipe);
    Json j;
    j["schema_version"] = 1;
    j["kind"] = "et_build";
    j["recipe"] = render_recipe(r);
    if (o.side == "cohomology" || o.side == "both")
        j["cohomology"] = algebra_to_json(build_cohomology(r, o.p));
    if (o.side == "group" || o.side == "both")
        j["group_side"] = algebra_to_json(build_group_side(r, o.p));
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_et_verify(const Options& o, std::ostream& out) {
    EtRecipe r = parse_recipe(o.recipe);
    Theorem which;
    if (o.theorem == "A") which = Theorem::A;
    else if (o.theorem == "B") which = Theorem::B;
    else if (o.theorem == "C") which = Theorem::C;
    else if (o.theorem == "D") which = Theorem::D;
    else fail(ErrorKind::FormatError, "unknown theorem '" + o.theorem + "'");
    VerificationReport rep = verify_theorem(r, which, o.p, o.degree, o.budget, o.pbw_budget);
    if (o.json) {
        Json j = report_to_json(rep);
        if (o.emit_certificate && rep.cert_cohomology)
            j["certificate_cohomology"] =
                certificate_to_json(*rep.cert_cohomology, rep.cohomology->generator_labels());
        if (o.emit_certificate && rep.cert_group)
            j["certificate_group"] =
                certificate_to_json(*rep.cert_group, rep.group_side->generator_labels());
        out << j.dump(2) << "\n";
    } else {
        out << render_report_text(rep);
        if (o.emit_certificate && rep.cert_cohomology)
            out << render_certificate(*rep.cert_cohomology, rep.cohomology->generator_labels());
        if (o.emit_certificate && rep.cert_group)
            out << render_certificate(*rep.cert_group, rep.group_side->generator_labels());
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quadratic algebras, duals and PBW checks over F_p"};
    app.footer(kGrammarHelp);
    app.require_subcommand(1);

    Options o;
    int which = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "emit a machine-readable JSON document");
        cmd->add_option("--budget", o.budget, "monomial budget per degree");
        cmd->add_option("--pbw-budget", o.pbw_budget, "order search budget");
        cmd->add_option("--seed", o.seed, "seed for randomized searches")
            ->each([&](const std::string&) { o.seed_set = true; });
    };

    CLI::App* algebra = app.add_subcommand("algebra", "quadratic algebra operations");
    algebra->require_subcommand(1);
    {
        CLI::App* c = algebra->add_subcommand("dual", "quadratic dual of an algebra file");
        c->add_option("file", o.file_a, "algebra file")->required();
        add_common(c);
        c->callback([&] { which = 1; });

        c = algebra->add_subcommand("combine", "direct sum, free or (skew-)symmetric tensor product");
        c->add_option("--mode", o.mode, "direct-sum|free-product|sym-tensor|skew-tensor")->required();
        c->add_option("a", o.file_a, "left algebra file")->required();
        c->add_option("b", o.file_b, "right algebra file")->required();
        add_common(c);
        c->callback([&] { which = 2; });

        c = algebra->add_subcommand("hilbert", "graded dimensions through a degree");
        c->add_option("file", o.file_a)->required();
        c->add_option("--degree", o.degree, "largest degree");
        add_common(c);
        c->callback([&] { which = 3; });

        c = algebra->add_subcommand("ext", "bigraded cobar Ext dimension table");
        c->add_option("file", o.file_a)->required();
        c->add_option("--imax", o.imax, "largest homological degree");
        c->add_option("--jmax", o.jmax, "largest internal degree");
        add_common(c);
        c->callback([&] { which = 4; });

        c = algebra->add_subcommand("pbw", "confluence check / order search");
        c->add_option("file", o.file_a)->required();
        c->add_option("--order", o.order, "comma-separated generators, smallest first");
        c->add_flag("--emit-certificate", o.emit_certificate, "print the full certificate");
        add_common(c);
        c->callback([&] { which = 5; });
    }

    CLI::App* group = app.add_subcommand("group", "pro-p presentations via the Magnus expansion");
    group->require_subcommand(1);
    {
        CLI::App* c = group->add_subcommand("initial-forms", "initial forms of the relators");
        c->add_option("file", o.file_a)->required();
        c->add_option("--degree", o.degree, "Magnus truncation degree");
        add_common(c);
        c->callback([&] { which = 6; });

        c = group->add_subcommand("grade", "graded algebra candidate dims");
        c->add_option("file", o.file_a)->required();
        c->add_option("--degree", o.degree, "largest degree");
        add_common(c);
        c->callback([&] { which = 7; });

        c = group->add_subcommand("pair", "cohomological pairing values of the relators");
        c->add_option("file", o.file_a)->required();
        add_common(c);
        c->callback([&] { which = 8; });

        c = group->add_subcommand("mild-check", "strong freeness of the relator initial forms");
        c->add_option("file", o.file_a)->required();
        c->add_option("--degree", o.degree, "Hilbert comparison degree");
        add_common(c);
        c->callback([&] { which = 9; });
    }

    CLI::App* oracle = app.add_subcommand("oracle", "finite p-group oracles");
    oracle->require_subcommand(1);
    {
        CLI::App* c = oracle->add_subcommand("jennings", "augmentation-ideal filtration");
        c->add_option("file", o.file_a, "group table CSV")->required();
        c->add_option("--p", o.p, "prime")->required();
        c->add_option("--degree", o.degree, "largest layer");
        add_common(c);
        c->callback([&] { which = 10; });

        c = oracle->add_subcommand("lazard", "dimension subgroups from the lower central series");
        c->add_option("file", o.file_a, "group table CSV")->required();
        c->add_option("--p", o.p, "prime")->required();
        c->add_option("--degree", o.degree, "largest layer");
        add_common(c);
        c->callback([&] { which = 11; });
    }

    CLI::App* et = app.add_subcommand("et", "elementary-type catalog");
    et->require_subcommand(1);
    {
        CLI::App* c = et->add_subcommand("build", "build both sides of the duality");
        c->add_option("--recipe", o.recipe, "recipe s-expression")->required();
        c->add_option("--p", o.p, "prime")->required();
        c->add_option("--side", o.side, "cohomology|group|both");
        add_common(c);
        c->callback([&] { which = 12; });

        c = et->add_subcommand("verify", "verify a theorem for a recipe");
        c->add_option("--theorem", o.theorem, "A|B|C|D")->required();
        c->add_option("--recipe", o.recipe, "recipe s-expression")->required();
        c->add_option("--p", o.p, "prime")->required();
        c->add_option("--degree", o.degree, "degree bound for the corroborating checks");
        c->add_flag("--emit-certificate", o.emit_certificate, "include the PBW certificates");
        add_common(c);
        c->callback([&] { which = 13; });
    }

    std::vector<const char*> argv;
    argv.push_back("koszul");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        switch (which) {
            case 1: return cmd_algebra_dual(o, out);
            case 2: return cmd_algebra_combine(o, out);
            case 3: return cmd_algebra_hilbert(o, out);
            case 4: return cmd_algebra_ext(o, out);
            case 5: return cmd_algebra_pbw(o, out);
            case 6: return cmd_group_initial_forms(o, out);
            case 7: return cmd_group_grade(o, out);
            case 8: return cmd_group_pair(o, out);
            case 9: return cmd_group_mild_check(o, out);
            case 10: return cmd_oracle(o, true, out);
            case 11: return cmd_oracle(o, false, out);
            case 12: return cmd_et_build(o, out);
            case 13: return cmd_et_verify(o, out);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "FormatError: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no command selected\n";
    return 2;
}

}  // namespace koszul
