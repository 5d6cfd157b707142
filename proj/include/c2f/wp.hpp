#pragma once

#include "c2f/field.hpp"

namespace c2f {

/// Canonical representative of a class in F/wp(F), wp(y) = y^2 + y.
///
/// principal: odd negative exponents with nonzero coefficients, exponents
/// strictly decreasing (-1 before -3, ...). const_bit: absolute trace of the
/// exponent-0 coefficient. Two classes are equal iff the fields agree
/// componentwise. Classes form a group under +.
struct WpClass {
    std::vector<std::pair<int, gfelem>> principal;
    int const_bit = 0;

    bool trivial() const { return principal.empty() && const_bit == 0; }

    bool operator==(const WpClass& o) const {
        return const_bit == o.const_bit && principal == o.principal;
    }
    bool operator!=(const WpClass& o) const { return !(*this == o); }
    WpClass operator+(const WpClass& o) const;
};

/// Canonical class of c in F/wp(F).
///
/// Local kind: the valuation >= 1 tail always lies in wp(F) and is discarded
/// exactly. RatFunc kind: the tail must have a rational wp-preimage (decided
/// exactly); otherwise the class is not determined by local data at t = 0 and
/// a domain_error is thrown. Finite kind: the class is the trace bit.
WpClass wp_class(const FieldElem& c);

/// Truncated Laurent-series solution of wp(x) = c.
struct WpSolution {
    int start = 0;               // exponent of coeffs[0]
    std::vector<gfelem> coeffs;  // coefficient of t^(start+i)
    int precision = 0;           // wp(x) == c mod t^precision
    bool exact = false;          // wp(x) == c exactly as rational functions

    /// The terms as a rational function (exact value of the truncated x).
    FieldElem as_rational(const Field& f) const;
};

/// Solve wp(x) = c over GF(2^k)((t)) to the given precision; nullopt when
/// wp_class(c) is nontrivial.
std::optional<WpSolution> wp_solve(const FieldElem& c, int precision);

/// Exact rational solution x of wp(x) = tail for a valuation >= 1 element,
/// if one exists in GF(2^k)(t). Decided by a bounded GF(2)-linear solve.
std::optional<FieldElem> wp_preimage_rational_tail(const FieldElem& tail);

/// Least scalar representative with trace 1 (the nontrivial constant class).
gfelem nontrivial_const_rep(const Gf2m& K);

} // namespace c2f
