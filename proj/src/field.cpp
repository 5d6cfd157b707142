#include "c2f/field.hpp"

namespace c2f {

Field make_finite(unsigned k) { return make_finite(k, Gf2m::default_modulus(k)); }
Field make_finite(unsigned k, std::uint64_t modulus) {
    return std::make_shared<const FieldDescriptor>(FieldKind::Finite, Gf2m(k, modulus), 64);
}
Field make_ratfunc(unsigned k) { return make_ratfunc(k, Gf2m::default_modulus(k)); }
Field make_ratfunc(unsigned k, std::uint64_t modulus) {
    return std::make_shared<const FieldDescriptor>(FieldKind::RatFunc, Gf2m(k, modulus), 64);
}
Field make_local(unsigned k, int precision) {
    return make_local(k, Gf2m::default_modulus(k), precision);
}
Field make_local(unsigned k, std::uint64_t modulus, int precision) {
    return std::make_shared<const FieldDescriptor>(FieldKind::Local, Gf2m(k, modulus), precision);
}

FieldElem::FieldElem(Field f, Poly num, Poly den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    if (!field_) throw std::invalid_argument("FieldElem: null descriptor");
    if (den_.is_zero()) throw std::domain_error("FieldElem: zero denominator");
    reduce();
    if (field_->kind == FieldKind::Finite &&
        (num_.deg() > 0 || den_ != Poly::one()))
        throw std::invalid_argument("FieldElem: t is not an element of GF(2^k)");
}

void FieldElem::reduce() {
    const Gf2m& K = field_->coeffs;
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(K, num_, den_);
    if (g.deg() > 0 || g.leading() != 1) {
        num_ = poly_divmod(K, num_, g).first;
        den_ = poly_divmod(K, den_, g).first;
    }
    if (den_.leading() != 1) {
        gfelem li = K.inv(den_.leading());
        num_ = poly_scale(K, num_, li);
        den_ = poly_scale(K, den_, li);
    }
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw std::invalid_argument("FieldElem: descriptor mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    const Gf2m& K = field_->coeffs;
    Poly n = poly_add(poly_mul(K, num_, o.den_), poly_mul(K, o.num_, den_));
    Poly d = poly_mul(K, den_, o.den_);
    return FieldElem(field_, std::move(n), std::move(d));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    const Gf2m& K = field_->coeffs;
    return FieldElem(field_, poly_mul(K, num_, o.num_), poly_mul(K, den_, o.den_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::inv() const {
    if (num_.is_zero()) throw std::domain_error("FieldElem: division by zero");
    return FieldElem(field_, den_, num_);
}

FieldElem FieldElem::frobenius() const {
    const Gf2m& K = field_->coeffs;
    return FieldElem(field_, poly_sqr(K, num_), poly_sqr(K, den_));
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o);
    return num_ == o.num_ && den_ == o.den_;
}

int FieldElem::valuation() const {
    if (num_.is_zero()) throw std::domain_error("valuation of zero");
    return poly_valuation(num_) - poly_valuation(den_);
}

std::optional<gfelem> FieldElem::as_scalar() const {
    if (num_.is_zero()) return gfelem(0);
    if (num_.deg() == 0 && den_ == Poly::one()) return num_.at(0);
    return std::nullopt;
}

std::optional<FieldElem> is_square_sqrt(const FieldElem& x) {
    const Gf2m& K = x.field()->coeffs;
    auto sn = poly_sqrt(K, x.num());
    if (!sn) return std::nullopt;
    auto sd = poly_sqrt(K, x.den());
    if (!sd) return std::nullopt;
    return FieldElem(x.field(), std::move(*sn), std::move(*sd));
}

std::pair<FieldElem, FieldElem> square_decompose(const FieldElem& x) {
    const Field& f = x.field();
    if (f->kind == FieldKind::Finite)
        throw std::domain_error("square_decompose: GF(2^k) is perfect, decomposition degenerate");
    const Gf2m& K = f->coeffs;
    // x = p/q = p*q / q^2; split p*q = A^2 + t*B^2, then x = (A/q)^2 + t*(B/q)^2.
    Poly pq = poly_mul(K, x.num(), x.den());
    auto [A, B] = poly_frobenius_split(K, pq);
    FieldElem alpha(f, std::move(A), x.den());
    FieldElem beta(f, std::move(B), x.den());
    return {alpha, beta};
}

Expansion valuation_expand(const FieldElem& x, int n) {
    if (n < 1) throw std::invalid_argument("valuation_expand: need n >= 1");
    Expansion e;
    if (x.is_zero()) {
        e.infinite = true;
        return e;
    }
    const Gf2m& K = x.field()->coeffs;
    int vn = poly_valuation(x.num());
    int vd = poly_valuation(x.den());
    e.valuation = vn - vd;
    // Unit parts u/v with u(0), v(0) != 0; long division of power series.
    std::vector<gfelem> u(size_t(n), 0), v(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        u[size_t(i)] = x.num().at(vn + i);
        v[size_t(i)] = x.den().at(vd + i);
    }
    gfelem v0i = K.inv(v[0]);
    e.coeffs.assign(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        gfelem acc = u[size_t(i)];
        for (int j = 0; j < i; ++j)
            acc ^= K.mul(e.coeffs[size_t(j)], v[size_t(i - j)]);
        e.coeffs[size_t(i)] = K.mul(acc, v0i);
    }
    return e;
}

gfelem laurent_coeff(const FieldElem& x, int e) {
    if (x.is_zero()) return 0;
    int v = x.valuation();
    if (e < v) return 0;
    Expansion ex = valuation_expand(x, e - v + 1);
    return ex.coeffs[size_t(e - v)];
}

gfelem residue_dlog(const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw std::domain_error("residue_dlog: b must be nonzero");
    const Field& f = b.field();
    if (f->kind == FieldKind::Finite)
        throw std::domain_error("residue_dlog: requires a t-adic field");
    const Gf2m& K = f->coeffs;
    // b = p/q: b'/b = (p'q + pq')/(pq).
    Poly p = b.num(), q = b.den();
    Poly nump = poly_add(poly_mul(K, poly_derivative(p), q), poly_mul(K, p, poly_derivative(q)));
    FieldElem dlog(f, std::move(nump), poly_mul(K, p, q));
    return laurent_coeff(a * dlog, -1);
}

int abs_trace(const Gf2m& K, gfelem c) { return K.trace(c); }

bool SquareClass::operator==(const SquareClass& o) const {
    return square_class_eq(rep, o.rep);
}

SquareClass square_class(const FieldElem& x) {
    if (x.is_zero()) throw std::domain_error("square_class of zero");
    // Partial canonicalisation: clear the denominator (same class) and strip
    // the square part of the t-power.
    const Gf2m& K = x.field()->coeffs;
    Poly n = poly_mul(K, x.num(), x.den());
    int v = poly_valuation(n);
    if (v >= 2) {
        Poly shifted;
        shifted.c.assign(n.c.begin() + (v - (v % 2)), n.c.end());
        n = shifted;
    }
    return SquareClass{FieldElem(x.field(), std::move(n), Poly::one())};
}

bool square_class_eq(const FieldElem& x, const FieldElem& y) {
    if (x.is_zero() || y.is_zero()) throw std::domain_error("square class of zero");
    return is_square_sqrt(x * y).has_value();
}

} // namespace c2f
