#include "koszul/grouptable.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace koszul {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<size_t>> table, size_t identity)
    : table_(std::move(table)), identity_(identity) {
    size_t n = table_.size();
    if (n == 0) fail(ErrorKind::InvalidArgument, "empty group table");
    if (identity_ >= n) fail(ErrorKind::InvalidArgument, "identity index out of range");
    for (const auto& row : table_) {
        if (row.size() != n) fail(ErrorKind::InvalidArgument, "group table not square");
        for (size_t v : row)
            if (v >= n) fail(ErrorKind::InvalidArgument, "group table entry out of range");
    }
    for (size_t g = 0; g < n; ++g)
        if (table_[g][identity_] != g || table_[identity_][g] != g)
            fail(ErrorKind::InvalidArgument, "identity axiom fails");
    inverse_.assign(n, n);
    for (size_t g = 0; g < n; ++g) {
        for (size_t h = 0; h < n; ++h)
            if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
        if (inverse_[g] == n) fail(ErrorKind::InvalidArgument, "inverse axiom fails");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail(ErrorKind::InvalidArgument, "associativity fails");
}

size_t FiniteGroupTable::pow(size_t g, uint64_t e) const {
    size_t r = identity_, base = g;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FiniteGroupTable FiniteGroupTable::cyclic(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
    size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            t[g][h] = a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb);
    return FiniteGroupTable(std::move(t), a.identity() * nb + b.identity());
}

FiniteGroupTable FiniteGroupTable::dihedral8() {
    // elements r^a s^e, a in 0..3, e in 0..1, index a*2+e; s r = r^-1 s
    auto idx = [](size_t a, size_t e) { return a * 2 + e; };
    std::vector<std::vector<size_t>> t(8, std::vector<size_t>(8));
    for (size_t a1 = 0; a1 < 4; ++a1)
        for (size_t e1 = 0; e1 < 2; ++e1)
            for (size_t a2 = 0; a2 < 4; ++a2)
                for (size_t e2 = 0; e2 < 2; ++e2) {
                    size_t a = e1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
                    t[idx(a1, e1)][idx(a2, e2)] = idx(a, (e1 + e2) % 2);
                }
    return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
    // 1,-1,i,-i,j,-j,k,-k as 0..7; sign bit in the low position
    auto mulq = [](size_t x, size_t y) -> size_t {
        size_t bx = x >> 1, by = y >> 1;  // 0:1, 1:i, 2:j, 3:k
        int sign = ((x & 1) ^ (y & 1)) ? 1 : 0;
        static const size_t base[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        size_t b = base[bx][by];
        int s = sign ^ neg[bx][by];
        return (b << 1) | static_cast<size_t>(s);
    };
    std::vector<std::vector<size_t>> t(8, std::vector<size_t>(8));
    for (size_t x = 0; x < 8; ++x)
        for (size_t y = 0; y < 8; ++y) t[x][y] = mulq(x, y);
    return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::heisenberg(size_t p) {
    // upper unitriangular 3x3 over F_p: (a,b,c) with
    // (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2)
    size_t n = p * p * p;
    auto idx = [&](size_t a, size_t b, size_t c) { return (a * p + b) * p + c; };
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t a1 = 0; a1 < p; ++a1)
        for (size_t b1 = 0; b1 < p; ++b1)
            for (size_t c1 = 0; c1 < p; ++c1)
                for (size_t a2 = 0; a2 < p; ++a2)
                    for (size_t b2 = 0; b2 < p; ++b2)
                        for (size_t c2 = 0; c2 < p; ++c2)
                            t[idx(a1, b1, c1)][idx(a2, b2, c2)] =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
    return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<size_t>> rows;
    long identity = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (identity < 0) {
            if (cells.size() != 2 || cells[0] != "identity")
                fail(ErrorKind::FormatError, "group table must start with 'identity,<index>'");
            identity = std::stol(cells[1]);
            continue;
        }
        std::vector<size_t> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                row.push_back(static_cast<size_t>(std::stoul(c)));
            } catch (const std::exception&) {
                fail(ErrorKind::FormatError, "bad table entry '" + c + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (identity < 0) fail(ErrorKind::FormatError, "missing identity header");
    return FiniteGroupTable(std::move(rows), static_cast<size_t>(identity));
}

std::string FiniteGroupTable::to_csv() const {
    std::ostringstream os;
    os << "identity," << identity_ << "\n";
    for (const auto& row : table_) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

namespace {

void check_p_power(size_t order, uint32_t p) {
    size_t n = order;
    while (n % p == 0) n /= p;
    if (n != 1)
        fail(ErrorKind::NotAPGroup,
             "group order " + std::to_string(order) + " is not a power of " + std::to_string(p));
}

// Subgroup generated by a set of elements, as a sorted element set.
std::set<size_t> generated_subgroup(const FiniteGroupTable& t, std::set<size_t> gens) {
    gens.insert(t.identity());
    std::set<size_t> sub = gens;
    std::deque<size_t> queue(sub.begin(), sub.end());
    while (!queue.empty()) {
        size_t g = queue.front();
        queue.pop_front();
        for (size_t h : gens) {
            for (size_t prod : {t.mul(g, h), t.mul(h, g), t.inv(g)}) {
                if (sub.insert(prod).second) queue.push_back(prod);
            }
        }
    }
    return sub;
}

std::set<size_t> commutator_subgroup(const FiniteGroupTable& t, const std::set<size_t>& a,
                                     const std::set<size_t>& b) {
    std::set<size_t> gens;
    for (size_t g : a)
        for (size_t h : b) gens.insert(t.commutator(g, h));
    return generated_subgroup(t, std::move(gens));
}

std::set<size_t> power_subgroup(const FiniteGroupTable& t, const std::set<size_t>& a, uint64_t e) {
    std::set<size_t> gens;
    for (size_t g : a) gens.insert(t.pow(g, e));
    return generated_subgroup(t, std::move(gens));
}

std::set<size_t> product_subgroup(const FiniteGroupTable& t, const std::set<size_t>& a,
                                  const std::set<size_t>& b) {
    std::set<size_t> gens = a;
    gens.insert(b.begin(), b.end());
    return generated_subgroup(t, std::move(gens));
}

}  // namespace

JenningsResult jennings_oracle(const FiniteGroupTable& t, uint32_t p, size_t n_max) {
    check_p_power(t.order(), p);
    size_t n = t.order();

    // I^k as subspaces of F_p[G]; I spanned by g - e
    std::vector<Subspace> powers;
    FpMatrix aug(p, n - (n ? 1 : 0), n);
    {
        size_t r = 0;
        Fp fp(p);
        for (size_t g = 0; g < n; ++g) {
            if (g == t.identity()) continue;
            aug.set(r, g, 1);
            aug.set(r, t.identity(), fp.neg(1));
            ++r;
        }
    }
    powers.push_back(Subspace::full(p, n));  // I^0 = F_p[G]
    powers.push_back(Subspace::span(aug));

    // I^k = I^{k-1} . I via products of basis vectors
    Fp fp(p);
    for (size_t k = 2; k <= n_max + 1; ++k) {
        const Subspace& prev = powers[k - 1];
        if (prev.dim() == 0) {
            powers.push_back(prev);
            continue;
        }
        FpMatrix rows(p, prev.dim() * powers[1].dim(), n);
        size_t r = 0;
        for (size_t i = 0; i < prev.dim(); ++i) {
            auto u = prev.basis().row_vec(i);
            for (size_t j = 0; j < powers[1].dim(); ++j, ++r) {
                auto v = powers[1].basis().row_vec(j);
                // convolution product in F_p[G]
                for (size_t g = 0; g < n; ++g) {
                    if (!u[g]) continue;
                    for (size_t h = 0; h < n; ++h)
                        if (v[h]) {
                            size_t gh = t.mul(g, h);
                            rows.set(r, gh, fp.add(rows.at(r, gh), fp.mul(u[g], v[h])));
                        }
                }
            }
        }
        powers.push_back(Subspace::span(rows));
    }

    JenningsResult out;
    for (size_t k = 0; k <= n_max; ++k)
        out.gr_dims.push_back(static_cast<long>(powers[k].dim()) -
                              static_cast<long>(powers[k + 1].dim()));

    for (size_t k = 1; k <= n_max; ++k) {
        std::set<size_t> members;
        for (size_t g = 0; g < n; ++g) {
            std::vector<uint32_t> v(n, 0);
            v[g] = fp.add(v[g], 1);
            v[t.identity()] = fp.sub(v[t.identity()], 1);
            if (powers[k].contains(v)) members.insert(g);
        }
        out.dimension_subgroups.push_back(std::move(members));
    }
    return out;
}

std::vector<std::set<size_t>> lazard_oracle(const FiniteGroupTable& t, uint32_t p, size_t n_max) {
    check_p_power(t.order(), p);
    std::set<size_t> whole;
    for (size_t g = 0; g < t.order(); ++g) whole.insert(g);

    // lower central series until stable
    std::vector<std::set<size_t>> gamma{whole};
    while (true) {
        auto next = commutator_subgroup(t, whole, gamma.back());
        if (next == gamma.back()) break;
        gamma.push_back(std::move(next));
        if (gamma.size() > t.order()) break;
    }
    auto gamma_at = [&](size_t i) -> const std::set<size_t>& {
        return i - 1 < gamma.size() ? gamma[i - 1] : gamma.back();
    };

    std::vector<std::set<size_t>> out;
    for (size_t n = 1; n <= n_max; ++n) {
        std::set<size_t> acc{t.identity()};
        for (size_t i = 1; i <= n; ++i) {
            uint64_t ph = 1;
            size_t h = 0;
            while (i * ph < n) {
                ph *= p;
                ++h;
            }
            // smallest p^h with i p^h >= n; all larger powers give subgroups of it
            acc = product_subgroup(t, acc, power_subgroup(t, gamma_at(i), ph));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<std::set<size_t>> zassenhaus_recursion(const FiniteGroupTable& t, uint32_t p,
                                                   size_t n_max) {
    check_p_power(t.order(), p);
    std::set<size_t> whole;
    for (size_t g = 0; g < t.order(); ++g) whole.insert(g);
    std::vector<std::set<size_t>> chain{whole};  // chain[n-1] = G_(n)
    for (size_t n = 2; n <= n_max; ++n) {
        size_t ceil_np = (n + p - 1) / p;
        std::set<size_t> acc = power_subgroup(t, chain[ceil_np - 1], p);
        for (size_t i = 1; i < n; ++i)
            acc = product_subgroup(t, acc, commutator_subgroup(t, chain[i - 1], chain[n - i - 1]));
        chain.push_back(std::move(acc));
    }
    return chain;
}

}  // namespace koszul
