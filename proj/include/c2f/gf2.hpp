#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2f {

/// Element of GF(2^k), k <= 16, packed as a bit-vector in the power basis
/// of the modulus (bit i = coefficient of g^i).
using gfelem = std::uint32_t;

namespace gf2x {

// Polynomials over GF(2) packed into uint64_t, bit i = coefficient of x^i.

inline int degree(std::uint64_t f) {
    if (f == 0) return -1;
    return 63 - __builtin_clzll(f);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod(std::uint64_t a, std::uint64_t f);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Rabin irreducibility test over GF(2).
bool irreducible(std::uint64_t f);

} // namespace gf2x

/// Arithmetic context for GF(2^k) with a user-supplied irreducible modulus.
///
/// Elements are gfelem values of bit-length <= k. The modulus is checked for
/// irreducibility at construction. All operations are exact.
class Gf2m {
public:
    Gf2m(unsigned k, std::uint64_t modulus);

    /// Context with the built-in modulus for this k (k <= 16).
    static Gf2m standard(unsigned k);
    static std::uint64_t default_modulus(unsigned k);

    unsigned k() const { return k_; }
    std::uint64_t modulus() const { return mod_; }

    gfelem add(gfelem a, gfelem b) const { return a ^ b; }
    gfelem mul(gfelem a, gfelem b) const;
    gfelem sqr(gfelem a) const { return mul(a, a); }
    gfelem inv(gfelem a) const;
    gfelem pow(gfelem a, std::uint64_t e) const;

    /// Frobenius inverse; every element of a finite field of char 2 has a
    /// unique square root.
    gfelem sqrt(gfelem a) const;

    /// Absolute trace to GF(2), returned as 0 or 1.
    int trace(gfelem a) const;

    /// Least y with y^2 + y = c, or nullopt encoded as -1 via has/value pair.
    /// Solvable iff trace(c) == 0.
    bool wp_solve(gfelem c, gfelem& out) const;

    /// Lexicographically least element with trace 1.
    gfelem least_trace_one() const;

    bool operator==(const Gf2m& o) const { return k_ == o.k_ && mod_ == o.mod_; }
    bool operator!=(const Gf2m& o) const { return !(*this == o); }

private:
    unsigned k_;
    std::uint64_t mod_;
};

} // namespace c2f
