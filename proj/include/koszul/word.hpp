#ifndef KOSZUL_WORD_HPP
#define KOSZUL_WORD_HPP

#include <memory>
#include <string>
#include <vector>

#include "koszul/error.hpp"

namespace koszul {

/// Word in a free pro-p group: Gen(i) | Inverse | Power | Commutator | Product.
/// Commutator(a, b) denotes a^-1 b^-1 a b.
class GroupWord {
public:
    enum class Kind { Gen, Inverse, Power, Commutator, Product };

    static GroupWord gen(size_t index);
    static GroupWord inverse(GroupWord w);
    static GroupWord power(GroupWord w, long long exponent);
    static GroupWord commutator(GroupWord a, GroupWord b);
    static GroupWord product(std::vector<GroupWord> ws);

    Kind kind() const { return kind_; }
    size_t gen_index() const { return gen_; }
    long long exponent() const { return exp_; }
    const std::vector<GroupWord>& children() const { return children_; }

private:
    GroupWord() = default;
    Kind kind_ = Kind::Gen;
    size_t gen_ = 0;
    long long exp_ = 1;
    std::vector<GroupWord> children_;
};

/// Grammar: `x1`, `x1^-1`, `x1^3`, `[w1,w2]`, `(w)`, juxtaposition with `*`.
/// Generators are x1..xd by default, or the given labels.
GroupWord parse_word(const std::string& text, size_t d, const std::vector<std::string>& labels = {});
std::string render_word(const GroupWord& w, const std::vector<std::string>& labels = {});

}  // namespace koszul

#endif
