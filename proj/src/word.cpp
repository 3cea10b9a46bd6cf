#include "koszul/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace koszul {

GroupWord GroupWord::gen(size_t index) {
    GroupWord w;
    w.kind_ = Kind::Gen;
    w.gen_ = index;
    return w;
}

GroupWord GroupWord::inverse(GroupWord inner) {
    GroupWord w;
    w.kind_ = Kind::Inverse;
    w.children_.push_back(std::move(inner));
    return w;
}

GroupWord GroupWord::power(GroupWord inner, long long e) {
    GroupWord w;
    w.kind_ = Kind::Power;
    w.exp_ = e;
    w.children_.push_back(std::move(inner));
    return w;
}

GroupWord GroupWord::commutator(GroupWord a, GroupWord b) {
    GroupWord w;
    w.kind_ = Kind::Commutator;
    w.children_.push_back(std::move(a));
    w.children_.push_back(std::move(b));
    return w;
}

GroupWord GroupWord::product(std::vector<GroupWord> ws) {
    GroupWord w;
    w.kind_ = Kind::Product;
    w.children_ = std::move(ws);
    return w;
}

namespace {

struct WordParser {
    const std::string& text;
    size_t d;
    const std::vector<std::string>& labels;
    size_t i = 0;

    void skip() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }

    [[noreturn]] void err(const std::string& msg) {
        fail(ErrorKind::FormatError, msg + " at offset " + std::to_string(i));
    }

    long long parse_int() {
        skip();
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) err("expected integer");
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    }

    GroupWord parse_atom() {
        skip();
        if (i >= text.size()) err("unexpected end of word");
        GroupWord base = [&] {
            if (text[i] == '(') {
                ++i;
                GroupWord w = parse_product(')');
                if (i >= text.size() || text[i] != ')') err("expected ')'");
                ++i;
                return w;
            }
            if (text[i] == '[') {
                ++i;
                GroupWord a = parse_product(',');
                if (i >= text.size() || text[i] != ',') err("expected ',' in commutator");
                ++i;
                GroupWord b = parse_product(']');
                if (i >= text.size() || text[i] != ']') err("expected ']'");
                ++i;
                return GroupWord::commutator(std::move(a), std::move(b));
            }
            // generator token, longest label match first
            long best = -1;
            size_t best_len = 0;
            for (size_t g = 0; g < d; ++g) {
                std::string l = g < labels.size() ? labels[g] : "x" + std::to_string(g + 1);
                if (l.size() > best_len && text.compare(i, l.size(), l) == 0) {
                    best = static_cast<long>(g);
                    best_len = l.size();
                }
            }
            if (best < 0) err("expected generator");
            i += best_len;
            return GroupWord::gen(static_cast<size_t>(best));
        }();
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            long long e = parse_int();
            if (e == -1) return GroupWord::inverse(std::move(base));
            return GroupWord::power(std::move(base), e);
        }
        return base;
    }

    GroupWord parse_product(char stop) {
        std::vector<GroupWord> parts;
        for (;;) {
            skip();
            if (i >= text.size() || text[i] == stop || text[i] == ')' || text[i] == ']' ||
                text[i] == ',')
                break;
            if (text[i] == '*') {
                ++i;
                continue;
            }
            parts.push_back(parse_atom());
        }
        if (parts.empty()) err("empty word");
        if (parts.size() == 1) return std::move(parts.front());
        return GroupWord::product(std::move(parts));
    }
};

}  // namespace

GroupWord parse_word(const std::string& text, size_t d, const std::vector<std::string>& labels) {
    WordParser p{text, d, labels};
    GroupWord w = p.parse_product('\0');
    p.skip();
    if (p.i != text.size()) p.err("trailing input in word");
    return w;
}

std::string render_word(const GroupWord& w, const std::vector<std::string>& labels) {
    auto label = [&](size_t g) {
        return g < labels.size() ? labels[g] : "x" + std::to_string(g + 1);
    };
    std::ostringstream os;
    switch (w.kind()) {
        case GroupWord::Kind::Gen:
            os << label(w.gen_index());
            break;
        case GroupWord::Kind::Inverse:
            os << "(" << render_word(w.children()[0], labels) << ")^-1";
            break;
        case GroupWord::Kind::Power:
            os << "(" << render_word(w.children()[0], labels) << ")^" << w.exponent();
            break;
        case GroupWord::Kind::Commutator:
            os << "[" << render_word(w.children()[0], labels) << ","
               << render_word(w.children()[1], labels) << "]";
            break;
        case GroupWord::Kind::Product: {
            bool first = true;
            for (const auto& c : w.children()) {
                if (!first) os << "*";
                first = false;
                os << render_word(c, labels);
            }
            break;
        }
    }
    return os.str();
}

}  // namespace koszul
