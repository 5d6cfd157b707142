#pragma once

#include "c2f/gf2.hpp"

#include <optional>

namespace c2f {

/// Dense polynomial in t over GF(2^k); coeff[i] is the coefficient of t^i.
/// Invariant: trimmed (empty vector is the zero polynomial).
struct Poly {
    std::vector<gfelem> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    gfelem leading() const { return c.empty() ? 0 : c.back(); }
    gfelem at(int i) const {
        return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : 0;
    }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    static Poly zero() { return {}; }
    static Poly one() { return Poly{{1}}; }
    static Poly scalar(gfelem a) { return a ? Poly{{a}} : Poly{}; }
    /// a * t^n
    static Poly monomial(gfelem a, unsigned n);
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Gf2m& K, const Poly& a, const Poly& b);
Poly poly_scale(const Gf2m& K, const Poly& a, gfelem s);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Gf2m& K, const Poly& a, const Poly& b);
Poly poly_gcd(const Gf2m& K, Poly a, Poly b);
Poly poly_monic(const Gf2m& K, const Poly& a);
/// Formal t-derivative (char 2: only odd-degree terms survive).
Poly poly_derivative(const Poly& a);
gfelem poly_eval0(const Poly& a);
/// t-adic valuation; -1 for the zero polynomial by convention of callers
/// (callers must handle zero separately).
int poly_valuation(const Poly& a);
/// Exact square root if the polynomial is a square (only even exponents,
/// coefficient-wise square roots), else nullopt.
std::optional<Poly> poly_sqrt(const Gf2m& K, const Poly& a);
/// Split a = even(t) + odd(t) with even = A(t)^2 and odd = t*B(t)^2;
/// returns (A, B). Always possible over a perfect coefficient field.
std::pair<Poly, Poly> poly_frobenius_split(const Gf2m& K, const Poly& a);
/// p(t) -> p(t)^2 (coefficient-wise squares at doubled exponents).
Poly poly_sqr(const Gf2m& K, const Poly& a);

} // namespace c2f
