#include "c2f/invariants.hpp"

namespace c2f {

namespace {

void require_nonsingular_diag(const QuadFormQ& rho) {
    for (auto& e : rho.diag())
        if (classify_sym_alt(rho.base().invol, e) != SymAltClass::Neither)
            throw std::invalid_argument("arf: singular input (entry in Sym)");
}

} // namespace

ArfValue arf_diagonal(const QuadFormQ& rho) {
    if (!rho.is_diagonal()) throw std::invalid_argument("arf_diagonal: diagonal representation required");
    if (!rho.base().invol.symplectic)
        throw std::invalid_argument("arf_diagonal: transport to the canonical involution first");
    require_nonsingular_diag(rho);
    const Field& f = rho.base().alg->field;
    FieldElem acc = FieldElem::zero(f);
    for (auto& e : rho.diag()) {
        FieldElem s = trd(e);
        acc += nrd(e) / (s * s);
    }
    ArfValue v;
    v.cls = wp_class(acc);
    v.source_dim = rho.dim();
    return v;
}

ArfValue arf_gram(const QuadFormQ& rho) {
    if (rho.is_diagonal()) {
        // Lift to the Gram representation of the same form.
        std::vector<Quaternion> M(rho.dim() * rho.dim(), Quaternion::zero(rho.base().alg));
        for (size_t i = 0; i < rho.dim(); ++i) M[i * rho.dim() + i] = rho.diag()[i];
        return arf_gram(QuadFormQ::gram(rho.base(), std::move(M), rho.dim()));
    }
    const QuatBase& base = rho.base();
    const QAlg& A = base.alg;
    const Field& f = A->field;
    size_t n = rho.dim();
    std::vector<Quaternion> N = rho.polar_matrix();
    std::vector<Quaternion> Ninv;
    try {
        Ninv = quat_matrix_inverse(A, N, n);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("arf_gram: singular polar matrix (form is singular)");
    }
    FieldElem srd = matrix_srd(A, quat_matrix_mul(A, Ninv, rho.gram_entries(), n), n);
    // 2m = deg(Q)*dim = 2n, so the integer term is n(n-1)/2 read in GF(2).
    if ((n * (n - 1) / 2) % 2 == 1) srd += FieldElem::one(f);
    ArfValue v;
    v.cls = wp_class(srd);
    v.source_dim = n;
    return v;
}

ArfValue arf_of(const QuadFormQ& rho) {
    if (rho.base().invol.symplectic) {
        if (rho.is_diagonal()) return arf_diagonal(rho);
        return arf_gram(rho);
    }
    Quaternion u = rho.base().invol.u;
    QuadFormQ at_gamma = quad_transport(rho, canonical_involution_desc(rho.base().alg));
    ArfValue v = at_gamma.is_diagonal() ? arf_diagonal(at_gamma) : arf_gram(at_gamma);
    v.transport = u.inv();
    return v;
}

ArfValue arf_F(const QuadFormF& rho) {
    if (!rho.nonsingular()) throw std::invalid_argument("arf_F: singular input");
    FieldElem acc = FieldElem::zero(rho.field);
    for (auto& [b, c] : rho.blocks) acc += b * c;
    ArfValue v;
    v.cls = wp_class(acc);
    v.source_dim = rho.dim();
    return v;
}

} // namespace c2f
