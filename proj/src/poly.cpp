#include "c2f/poly.hpp"

namespace c2f {

Poly Poly::monomial(gfelem a, unsigned n) {
    if (a == 0) return {};
    Poly p;
    p.c.assign(n + 1, 0);
    p.c[n] = a;
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] ^= a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] ^= b.c[i];
    r.trim();
    return r;
}

Poly poly_mul(const Gf2m& K, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r.c[i + j] ^= K.mul(a.c[i], b.c[j]);
    }
    r.trim();
    return r;
}

Poly poly_scale(const Gf2m& K, const Poly& a, gfelem s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = K.mul(x, s);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Gf2m& K, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a, quot;
    int db = b.deg();
    gfelem lead_inv = K.inv(b.leading());
    if (rem.deg() >= db) quot.c.assign(size_t(rem.deg() - db) + 1, 0);
    while (!rem.is_zero() && rem.deg() >= db) {
        int shift = rem.deg() - db;
        gfelem q = K.mul(rem.leading(), lead_inv);
        quot.c[size_t(shift)] = q;
        for (int i = 0; i <= db; ++i)
            rem.c[size_t(i + shift)] ^= K.mul(q, b.at(i));
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly poly_gcd(const Gf2m& K, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(K, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(K, a);
}

Poly poly_monic(const Gf2m& K, const Poly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return poly_scale(K, a, K.inv(a.leading()));
}

Poly poly_derivative(const Poly& a) {
    Poly r;
    if (a.c.size() <= 1) return r;
    r.c.assign(a.c.size() - 1, 0);
    for (size_t i = 1; i < a.c.size(); i += 2) r.c[i - 1] = a.c[i];
    r.trim();
    return r;
}

gfelem poly_eval0(const Poly& a) { return a.at(0); }

int poly_valuation(const Poly& a) {
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) return int(i);
    return -1;
}

std::optional<Poly> poly_sqrt(const Gf2m& K, const Poly& a) {
    if (a.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() / 2 + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (i % 2 != 0) return std::nullopt;
        r.c[i / 2] = K.sqrt(a.c[i]);
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> poly_frobenius_split(const Gf2m& K, const Poly& a) {
    Poly A, B;
    A.c.assign(a.c.size() / 2 + 1, 0);
    B.c.assign(a.c.size() / 2 + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (i % 2 == 0)
            A.c[i / 2] = K.sqrt(a.c[i]);
        else
            B.c[i / 2] = K.sqrt(a.c[i]);
    }
    A.trim();
    B.trim();
    return {A, B};
}

Poly poly_sqr(const Gf2m& K, const Poly& a) {
    if (a.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() * 2 - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) r.c[2 * i] = K.sqr(a.c[i]);
    return r;
}

} // namespace c2f
