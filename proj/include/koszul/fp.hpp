#ifndef KOSZUL_FP_HPP
#define KOSZUL_FP_HPP

#include <cstdint>
#include <vector>

#include "koszul/error.hpp"

namespace koszul {

bool is_prime(uint32_t n);

/// Arithmetic context for the prime field F_p. Values are residues in [0, p).
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (p < 2 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "modulus must be prime, got " + std::to_string(p));
    }

    uint32_t modulus() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p_, base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) fail(ErrorKind::InvalidArgument, "division by zero in F_p");
        return pow(a, p_ - 2);
    }

    bool operator==(const Fp& other) const { return p_ == other.p_; }

private:
    uint32_t p_;
};

/// A single residue tied to its modulus.
struct FpScalar {
    uint32_t value = 0;
    uint32_t p = 2;

    FpScalar() = default;
    FpScalar(int64_t v, uint32_t modulus) : p(modulus) { value = Fp(modulus).reduce(v); }

    bool operator==(const FpScalar& o) const { return value == o.value && p == o.p; }
};

}  // namespace koszul

#endif
