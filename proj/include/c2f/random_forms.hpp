#pragma once

#include "c2f/forms.hpp"

#include <random>

namespace c2f {

/// Seeded generators for test corpora; all draws are deterministic in the
/// seed and the call sequence.
class FormGen {
public:
    FormGen(Field f, std::uint64_t seed) : field_(std::move(f)), g_(seed) {}

    std::mt19937_64& rng() { return g_; }
    const Field& field() const { return field_; }

    gfelem scalar() {
        std::uniform_int_distribution<gfelem> d(0, (gfelem(1) << field_->k()) - 1);
        return d(g_);
    }

    Poly poly(int max_deg) {
        std::uniform_int_distribution<int> dd(0, max_deg);
        int d = dd(g_);
        Poly p;
        p.c.assign(size_t(d) + 1, 0);
        for (auto& c : p.c) c = scalar();
        p.trim();
        return p;
    }

    FieldElem elem(int max_deg = 2, int max_den_deg = 1) {
        Poly den = poly(max_den_deg);
        if (den.is_zero()) den = Poly::one();
        return FieldElem(field_, poly(max_deg), std::move(den));
    }

    FieldElem nonzero_elem(int max_deg = 2, int max_den_deg = 1) {
        for (;;) {
            FieldElem x = elem(max_deg, max_den_deg);
            if (!x.is_zero()) return x;
        }
    }

    Quaternion quat(const QAlg& A, int max_deg = 1) {
        return Quaternion(A, {elem(max_deg), elem(max_deg), elem(max_deg), elem(max_deg)});
    }

    Quaternion nonzero_quat(const QAlg& A, int max_deg = 1) {
        for (;;) {
            Quaternion q = quat(A, max_deg);
            if (!q.is_zero()) return q;
        }
    }

    /// Entry outside Sym (a nonsingular diagonal slot): Trd != 0.
    Quaternion nonsingular_entry(const QAlg& A, int max_deg = 1) {
        for (;;) {
            Quaternion q = quat(A, max_deg);
            if (!trd(q).is_zero()) return q;
        }
    }

    /// Entry in Sym \ Alt: Trd = 0, (j,k)-part nonzero.
    Quaternion sym_not_alt_entry(const QAlg& A, int max_deg = 1) {
        for (;;) {
            FieldElem x0 = elem(max_deg), x2 = elem(max_deg), x3 = elem(max_deg);
            if (x2.is_zero() && x3.is_zero()) continue;
            return Quaternion(A, {x0, FieldElem::zero(field_), x2, x3});
        }
    }

    QuadFormQ nonsingular_diagonal(const QAlg& A, size_t dim, int max_deg = 1) {
        std::vector<Quaternion> ents;
        for (size_t i = 0; i < dim; ++i) ents.push_back(nonsingular_entry(A, max_deg));
        return QuadFormQ::diagonal(canonical_base(A), std::move(ents));
    }

    QuadFormQ totally_singular_diagonal(const QAlg& A, size_t dim, int max_deg = 1) {
        std::vector<Quaternion> ents;
        for (size_t i = 0; i < dim; ++i) ents.push_back(sym_not_alt_entry(A, max_deg));
        return QuadFormQ::diagonal(canonical_base(A), std::move(ents));
    }

    /// A Gram lift of a given diagonal form: diag + (S + S^*) for random S.
    QuadFormQ gram_lift(const QuadFormQ& diag_form, int max_deg = 1) {
        const QuatBase& base = diag_form.base();
        size_t n = diag_form.dim();
        std::vector<Quaternion> M(n * n, Quaternion::zero(base.alg));
        for (size_t i = 0; i < n; ++i) M[i * n + i] = diag_form.diag()[i];
        std::vector<Quaternion> S(n * n, Quaternion::zero(base.alg));
        for (auto& s : S) s = quat(base.alg, max_deg);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                M[i * n + j] = M[i * n + j] + S[i * n + j] + apply(base.invol, S[j * n + i]);
        return QuadFormQ::gram(base, std::move(M), n);
    }

    QuadFormF f_blocks(size_t nblocks, int max_deg = 2) {
        QuadFormF r;
        r.field = field_;
        for (size_t i = 0; i < nblocks; ++i)
            r.blocks.emplace_back(nonzero_elem(max_deg), nonzero_elem(max_deg));
        return r;
    }

    std::vector<FieldElem> f_diag(size_t n, int max_deg = 2) {
        std::vector<FieldElem> d;
        for (size_t i = 0; i < n; ++i) d.push_back(nonzero_elem(max_deg));
        return d;
    }
};

} // namespace c2f
