#pragma once

#include "c2f/poly.hpp"

#include <memory>

namespace c2f {

enum class FieldKind { Finite, RatFunc, Local };

/// One of the three supported characteristic-2 base fields:
/// GF(2^k), GF(2^k)(t), GF(2^k)((t)).
///
/// The modulus is checked for irreducibility at construction. The derived
/// degree [F:F^2] is 1 for the finite kind and 2 otherwise.
struct FieldDescriptor {
    FieldKind kind;
    Gf2m coeffs;
    int default_precision;

    FieldDescriptor(FieldKind kind_, Gf2m coeffs_, int precision)
        : kind(kind_), coeffs(std::move(coeffs_)), default_precision(precision) {
        if (precision <= 0) throw std::invalid_argument("default_precision must be positive");
    }

    unsigned k() const { return coeffs.k(); }
    int f_over_f2_degree() const { return kind == FieldKind::Finite ? 1 : 2; }

    /// Identity ignores default_precision (an operational parameter).
    bool same(const FieldDescriptor& o) const {
        return kind == o.kind && coeffs == o.coeffs;
    }
};

using Field = std::shared_ptr<const FieldDescriptor>;

Field make_finite(unsigned k);
Field make_finite(unsigned k, std::uint64_t modulus);
Field make_ratfunc(unsigned k);
Field make_ratfunc(unsigned k, std::uint64_t modulus);
Field make_local(unsigned k, int precision = 64);
Field make_local(unsigned k, std::uint64_t modulus, int precision);

inline bool same_field(const Field& a, const Field& b) { return a->same(*b); }

/// Exact element of the base field, stored as a reduced fraction of
/// polynomials in t (denominator monic, gcd(num, den) = 1, zero is 0/1).
/// Structural equality equals field equality. For the finite kind the
/// numerator has degree <= 0 and the denominator is 1.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(Field f, Poly num, Poly den);

    static FieldElem zero(const Field& f) { return FieldElem(f, Poly::zero(), Poly::one()); }
    static FieldElem one(const Field& f) { return FieldElem(f, Poly::one(), Poly::one()); }
    static FieldElem scalar(const Field& f, gfelem a) {
        return FieldElem(f, Poly::scalar(a), Poly::one());
    }
    static FieldElem t(const Field& f) { return FieldElem(f, Poly::monomial(1, 1), Poly::one()); }
    static FieldElem from_poly(const Field& f, Poly p) {
        return FieldElem(f, std::move(p), Poly::one());
    }

    const Field& field() const { return field_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly::one() && den_ == Poly::one(); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inv() const;
    FieldElem frobenius() const; // x^2
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// t-adic valuation; throws on zero.
    int valuation() const;

    /// Is this element a scalar from GF(2^k)? If so return it.
    std::optional<gfelem> as_scalar() const;

private:
    Field field_;
    Poly num_ = Poly::zero();
    Poly den_ = Poly::one();

    void reduce();
    void check_same(const FieldElem& o) const;
};

/// y with y^2 = x, if x is a square.
std::optional<FieldElem> is_square_sqrt(const FieldElem& x);

/// x = alpha^2 + t*beta^2 over the 2-basis {1, t}; unique.
/// Rejects the finite kind (F perfect; beta would always be 0).
std::pair<FieldElem, FieldElem> square_decompose(const FieldElem& x);

struct Expansion {
    bool infinite = false; // x == 0
    int valuation = 0;
    std::vector<gfelem> coeffs; // Laurent coefficients starting at exponent `valuation`
};

/// First n Laurent coefficients of x at t = 0, starting at the valuation.
Expansion valuation_expand(const FieldElem& x, int n);

/// Single Laurent coefficient of x at exponent e.
gfelem laurent_coeff(const FieldElem& x, int e);

/// Res_{t=0}(a * b'/b) with b' the formal t-derivative; b nonzero.
gfelem residue_dlog(const FieldElem& a, const FieldElem& b);

/// Absolute trace of c viewed in GF(2^k) to GF(2); x^2+x = c solvable in
/// GF(2^k) iff the result is 0.
int abs_trace(const Gf2m& K, gfelem c);

/// Square class of a nonzero element; equality iff the ratio is a square.
struct SquareClass {
    FieldElem rep;

    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
};

SquareClass square_class(const FieldElem& x);
bool square_class_eq(const FieldElem& x, const FieldElem& y);

} // namespace c2f
