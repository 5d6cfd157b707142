#include "c2f/forms.hpp"

#include <sstream>

namespace c2f {

QuatBase canonical_base(const QAlg& A) { return QuatBase{A, canonical_involution_desc(A)}; }

// --- HermForm ----------------------------------------------------------------

HermForm HermForm::over_quat(QuatBase base, std::vector<Quaternion> entries, bool allow_zero) {
    if (entries.empty()) throw std::invalid_argument("hermitian form: no entries");
    HermForm h;
    h.field_ = base.alg->field;
    for (auto& e : entries) {
        if (!e.algebra()->same(*base.alg))
            throw std::invalid_argument("hermitian form: entry algebra mismatch");
        if (e.is_zero()) {
            if (!allow_zero) throw std::invalid_argument("hermitian form: zero entry");
            continue;
        }
        if (apply(base.invol, e) != e)
            throw std::invalid_argument("hermitian form: entry not symmetric under theta");
    }
    h.base_ = std::move(base);
    h.qents_ = std::move(entries);
    return h;
}

HermForm HermForm::bilinear(const Field& f, std::vector<FieldElem> entries, bool allow_zero) {
    if (entries.empty()) throw std::invalid_argument("bilinear form: no entries");
    HermForm h;
    h.field_ = f;
    for (auto& e : entries) {
        if (!same_field(e.field(), f)) throw std::invalid_argument("bilinear form: field mismatch");
        if (e.is_zero() && !allow_zero) throw std::invalid_argument("bilinear form: zero entry");
    }
    h.fents_ = std::move(entries);
    return h;
}

bool HermForm::alternating() const {
    if (is_bilinear()) {
        // Alt(F, id) = {0}: alternating only if every entry is a zero marker.
        for (auto& e : fents_)
            if (!e.is_zero()) return false;
        return true;
    }
    for (auto& e : qents_) {
        if (e.is_zero()) continue;
        if (classify_sym_alt(base_->invol, e) != SymAltClass::Alt) return false;
    }
    return true;
}

bool HermForm::contains_direct_candidate() const {
    if (is_bilinear()) {
        for (auto& e : fents_)
            if (!e.is_zero()) return true; // Sym \ Alt = F^x over (F, id)
        return false;
    }
    for (auto& e : qents_)
        if (!e.is_zero() && classify_sym_alt(base_->invol, e) == SymAltClass::SymNotAlt) return true;
    return false;
}

bool HermForm::degenerate() const {
    if (is_bilinear()) {
        for (auto& e : fents_)
            if (e.is_zero()) return true;
        return false;
    }
    for (auto& e : qents_)
        if (e.is_zero()) return true;
    return false;
}

Quaternion HermForm::value_at(std::span<const Quaternion> x) const {
    if (is_bilinear()) throw std::invalid_argument("value_at: form is bilinear over F");
    if (x.size() != qents_.size()) throw std::invalid_argument("value_at: dimension mismatch");
    Quaternion acc = Quaternion::zero(base_->alg);
    for (size_t i = 0; i < qents_.size(); ++i)
        acc = acc + apply(base_->invol, x[i]) * qents_[i] * x[i];
    return acc;
}

FieldElem HermForm::value_at_f(std::span<const FieldElem> x) const {
    if (!is_bilinear()) throw std::invalid_argument("value_at_f: form is over (Q,theta)");
    if (x.size() != fents_.size()) throw std::invalid_argument("value_at_f: dimension mismatch");
    FieldElem acc = FieldElem::zero(field_);
    for (size_t i = 0; i < fents_.size(); ++i) acc += fents_[i] * x[i] * x[i];
    return acc;
}

bool HermForm::operator==(const HermForm& o) const {
    if (is_bilinear() != o.is_bilinear()) return false;
    if (is_bilinear()) return fents_ == o.fents_;
    return base_->same(*o.base_) && qents_ == o.qents_;
}

// --- QuadFormQ ----------------------------------------------------------------

QuadFormQ QuadFormQ::diagonal(QuatBase base, std::vector<Quaternion> entries) {
    if (entries.empty()) throw std::invalid_argument("quadratic form: no entries");
    for (auto& e : entries) {
        if (!e.algebra()->same(*base.alg))
            throw std::invalid_argument("quadratic form: entry algebra mismatch");
        if (e.is_zero() || classify_sym_alt(base.invol, e) == SymAltClass::Alt)
            throw std::invalid_argument("quadratic form: entry in Alt(Q,theta)");
    }
    size_t n = entries.size();
    return QuadFormQ(std::move(base), true, std::move(entries), n);
}

QuadFormQ QuadFormQ::gram(QuatBase base, std::vector<Quaternion> entries, size_t n) {
    if (n == 0 || entries.size() != n * n)
        throw std::invalid_argument("gram form: bad dimensions");
    for (auto& e : entries)
        if (!e.algebra()->same(*base.alg))
            throw std::invalid_argument("gram form: entry algebra mismatch");
    // Upper-triangular canonicalisation: M_ij <- M_ij + theta(M_ji) for i < j.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            entries[i * n + j] = entries[i * n + j] + apply(base.invol, entries[j * n + i]);
            entries[j * n + i] = Quaternion::zero(base.alg);
        }
    return QuadFormQ(std::move(base), false, std::move(entries), n);
}

const std::vector<Quaternion>& QuadFormQ::diag() const {
    if (!diagonal_) throw std::invalid_argument("diag(): Gram representation");
    return ents_;
}

const std::vector<Quaternion>& QuadFormQ::gram_entries() const {
    if (diagonal_) throw std::invalid_argument("gram_entries(): diagonal representation");
    return ents_;
}

const Quaternion& QuadFormQ::gram_at(size_t i, size_t j) const {
    if (diagonal_) throw std::invalid_argument("gram_at(): diagonal representation");
    return ents_[i * n_ + j];
}

std::pair<size_t, size_t> QuadFormQ::type() const {
    if (!diagonal_)
        throw std::invalid_argument("type(): diagonalise the Gram representation first");
    size_t ns = 0, ts = 0;
    for (auto& e : ents_) {
        if (classify_sym_alt(base_.invol, e) == SymAltClass::Neither)
            ++ns;
        else
            ++ts;
    }
    return {ns, ts};
}

Quaternion QuadFormQ::value_at(std::span<const Quaternion> x) const {
    if (x.size() != n_) throw std::invalid_argument("value_at: dimension mismatch");
    Quaternion acc = Quaternion::zero(base_.alg);
    if (diagonal_) {
        for (size_t i = 0; i < n_; ++i)
            acc = acc + apply(base_.invol, x[i]) * ents_[i] * x[i];
        return acc;
    }
    for (size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        Quaternion xi = apply(base_.invol, x[i]);
        for (size_t j = 0; j < n_; ++j) {
            if (ents_[i * n_ + j].is_zero() || x[j].is_zero()) continue;
            acc = acc + xi * ents_[i * n_ + j] * x[j];
        }
    }
    return acc;
}

std::vector<Quaternion> QuadFormQ::polar_matrix() const {
    std::vector<Quaternion> M;
    if (diagonal_) {
        M.assign(n_ * n_, Quaternion::zero(base_.alg));
        for (size_t i = 0; i < n_; ++i)
            M[i * n_ + i] = ents_[i] + apply(base_.invol, ents_[i]);
        return M;
    }
    M = ents_;
    std::vector<Quaternion> N(n_ * n_, Quaternion::zero(base_.alg));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            N[i * n_ + j] = M[i * n_ + j] + apply(base_.invol, M[j * n_ + i]);
    return N;
}

bool QuadFormQ::operator==(const QuadFormQ& o) const {
    return diagonal_ == o.diagonal_ && n_ == o.n_ && base_.same(o.base_) && ents_ == o.ents_;
}

// --- QuadFormF ----------------------------------------------------------------

QuadFormF make_quadform_f(const Field& f, std::vector<std::pair<FieldElem, FieldElem>> blocks,
                          std::vector<FieldElem> diag) {
    if (blocks.empty() && diag.empty()) throw std::invalid_argument("F-form: empty");
    for (auto& d : diag)
        if (d.is_zero()) throw std::invalid_argument("F-form: zero totally singular entry");
    return QuadFormF{f, std::move(blocks), std::move(diag)};
}

FieldElem QuadFormF::value_at(std::span<const FieldElem> x) const {
    if (x.size() != dim()) throw std::invalid_argument("value_at: dimension mismatch");
    FieldElem acc = FieldElem::zero(field);
    size_t idx = 0;
    for (auto& [b, c] : blocks) {
        const FieldElem& u = x[idx];
        const FieldElem& v = x[idx + 1];
        acc += b * u * u + u * v + c * v * v;
        idx += 2;
    }
    for (auto& d : diag) {
        acc += d * x[idx] * x[idx];
        ++idx;
    }
    return acc;
}

bool QuadFormF::operator==(const QuadFormF& o) const {
    return blocks == o.blocks && diag == o.diag;
}

// --- operations ----------------------------------------------------------------

HermForm polar_form(const QuadFormQ& rho) {
    if (!rho.is_diagonal()) throw std::invalid_argument("polar_form: diagonal representation required");
    std::vector<Quaternion> ents;
    ents.reserve(rho.dim());
    for (auto& b : rho.diag()) ents.push_back(b + apply(rho.base().invol, b));
    return HermForm::over_quat(rho.base(), std::move(ents), /*allow_zero=*/true);
}

TypeDecomposition type_decompose(const QuadFormQ& rho) {
    const QuadFormQ* d = &rho;
    QuadFormQ tmp = rho;
    if (!rho.is_diagonal()) {
        tmp = diagonalize_gram(rho);
        d = &tmp;
    }
    TypeDecomposition td;
    for (auto& e : d->diag()) {
        if (classify_sym_alt(d->base().invol, e) == SymAltClass::Neither)
            td.nonsingular.push_back(e);
        else
            td.totally_singular.push_back(e);
    }
    td.type = {td.nonsingular.size(), td.totally_singular.size()};
    return td;
}

HermForm herm_sum(const HermForm& a, const HermForm& b) {
    if (a.is_bilinear() != b.is_bilinear())
        throw std::invalid_argument("herm_sum: base mismatch");
    if (a.is_bilinear()) {
        auto ents = a.f_entries();
        ents.insert(ents.end(), b.f_entries().begin(), b.f_entries().end());
        return HermForm::bilinear(a.field(), std::move(ents), true);
    }
    if (!a.base().same(b.base())) throw std::invalid_argument("herm_sum: base mismatch");
    auto ents = a.q_entries();
    ents.insert(ents.end(), b.q_entries().begin(), b.q_entries().end());
    return HermForm::over_quat(a.base(), std::move(ents), true);
}

QuadFormQ quad_sum(const QuadFormQ& a, const QuadFormQ& b) {
    if (!a.base().same(b.base())) throw std::invalid_argument("quad_sum: base mismatch");
    if (!a.is_diagonal() || !b.is_diagonal())
        throw std::invalid_argument("quad_sum: diagonal representations required");
    auto ents = a.diag();
    ents.insert(ents.end(), b.diag().begin(), b.diag().end());
    return QuadFormQ::diagonal(a.base(), std::move(ents));
}

QuadFormF quadf_sum(const QuadFormF& a, const QuadFormF& b) {
    if (!same_field(a.field, b.field)) throw std::invalid_argument("quadf_sum: field mismatch");
    auto blocks = a.blocks;
    blocks.insert(blocks.end(), b.blocks.begin(), b.blocks.end());
    auto diag = a.diag;
    diag.insert(diag.end(), b.diag.begin(), b.diag.end());
    return QuadFormF{a.field, std::move(blocks), std::move(diag)};
}

namespace {
void check_scalar(const FieldElem& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("scale: lambda must be nonzero");
}
} // namespace

HermForm herm_scale(const HermForm& a, const FieldElem& lambda) {
    check_scalar(lambda);
    if (a.is_bilinear()) {
        std::vector<FieldElem> ents;
        for (auto& e : a.f_entries()) ents.push_back(e * lambda);
        return HermForm::bilinear(a.field(), std::move(ents), true);
    }
    std::vector<Quaternion> ents;
    for (auto& e : a.q_entries()) ents.push_back(e * lambda);
    return HermForm::over_quat(a.base(), std::move(ents), true);
}

QuadFormQ quad_scale(const QuadFormQ& a, const FieldElem& lambda) {
    check_scalar(lambda);
    std::vector<Quaternion> ents;
    for (auto& e : a.is_diagonal() ? a.diag() : a.gram_entries()) ents.push_back(e * lambda);
    if (a.is_diagonal()) return QuadFormQ::diagonal(a.base(), std::move(ents));
    return QuadFormQ::gram(a.base(), std::move(ents), a.dim());
}

QuadFormF quadf_scale(const QuadFormF& a, const FieldElem& lambda) {
    check_scalar(lambda);
    QuadFormF r;
    r.field = a.field;
    for (auto& [b, c] : a.blocks) r.blocks.emplace_back(b * lambda, c / lambda);
    for (auto& d : a.diag) r.diag.push_back(d * lambda);
    return r;
}

namespace {
Quaternion transport_unit(const Involution& from, const Involution& to) {
    if (!from.alg->same(*to.alg)) throw std::invalid_argument("transport: algebra mismatch");
    return to.u * from.u.inv();
}
} // namespace

QuadFormQ quad_transport(const QuadFormQ& a, const Involution& target) {
    Quaternion u = transport_unit(a.base().invol, target);
    QuatBase nb{a.base().alg, target};
    std::vector<Quaternion> ents;
    for (auto& e : a.is_diagonal() ? a.diag() : a.gram_entries()) ents.push_back(u * e);
    if (a.is_diagonal()) return QuadFormQ::diagonal(std::move(nb), std::move(ents));
    return QuadFormQ::gram(std::move(nb), std::move(ents), a.dim());
}

HermForm herm_transport(const HermForm& a, const Involution& target) {
    if (a.is_bilinear()) throw std::invalid_argument("transport: bilinear form");
    Quaternion u = transport_unit(a.base().invol, target);
    QuatBase nb{a.base().alg, target};
    std::vector<Quaternion> ents;
    for (auto& e : a.q_entries()) ents.push_back(u * e);
    return HermForm::over_quat(std::move(nb), std::move(ents), true);
}

HermForm tensor_bilinear(const HermForm& phi, const HermForm& psi) {
    if (!phi.is_bilinear())
        throw std::invalid_argument("tensor_bilinear: left factor must be bilinear over F");
    if (psi.is_bilinear()) {
        std::vector<FieldElem> ents;
        for (auto& c : phi.f_entries())
            for (auto& a : psi.f_entries()) ents.push_back(c * a);
        return HermForm::bilinear(psi.field(), std::move(ents), true);
    }
    std::vector<Quaternion> ents;
    for (auto& c : phi.f_entries())
        for (auto& a : psi.q_entries()) ents.push_back(a * c);
    return HermForm::over_quat(psi.base(), std::move(ents), true);
}

AssociatedTotallySingular associated_totally_singular(const HermForm& phi) {
    if (phi.is_bilinear())
        throw std::invalid_argument("associated_totally_singular: form over (Q,theta) required");
    AssociatedTotallySingular r;
    for (size_t idx = 0; idx < phi.q_entries().size(); ++idx) {
        const Quaternion& e = phi.q_entries()[idx];
        if (e.is_zero() || classify_sym_alt(phi.base().invol, e) == SymAltClass::Alt) {
            if (!r.isotropic_at) r.isotropic_at = idx;
            continue;
        }
        r.entries.push_back(e);
    }
    return r;
}

// --- Gram diagonalisation -------------------------------------------------------

namespace {

struct WorkingSpace {
    const QuatBase& base;
    std::vector<Quaternion> G;      // current upper Gram, s x s
    std::vector<Quaternion> basis;  // s rows, original coordinates (n each)
    size_t s, n;

    Quaternion theta(const Quaternion& x) const { return apply(base.invol, x); }

    Quaternion q_of(const std::vector<Quaternion>& v) const {
        Quaternion acc = Quaternion::zero(base.alg);
        for (size_t i = 0; i < s; ++i) {
            if (v[i].is_zero()) continue;
            Quaternion ti = theta(v[i]);
            for (size_t j = i; j < s; ++j) {
                if (G[i * s + j].is_zero() || v[j].is_zero()) continue;
                acc = acc + ti * G[i * s + j] * v[j];
            }
        }
        return acc;
    }

    Quaternion h_of(const std::vector<Quaternion>& v, size_t m) const {
        // polar value h(v, e_m) = v^* (G + G^*) e_m
        Quaternion acc = Quaternion::zero(base.alg);
        for (size_t i = 0; i < s; ++i) {
            if (v[i].is_zero()) continue;
            Quaternion Nim = (i <= m ? G[i * s + m] : Quaternion::zero(base.alg)) +
                             theta(m <= i ? G[m * s + i] : Quaternion::zero(base.alg));
            if (!Nim.is_zero()) acc = acc + theta(v[i]) * Nim;
        }
        return acc;
    }

    std::vector<Quaternion> to_original(const std::vector<Quaternion>& v) const {
        std::vector<Quaternion> out(n, Quaternion::zero(base.alg));
        for (size_t m = 0; m < s; ++m) {
            if (v[m].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                out[j] = out[j] + basis[m * n + j] * v[m];
        }
        return out;
    }
};

std::vector<std::vector<Quaternion>> probe_schedule(const QuatBase& base, size_t s) {
    const QAlg& A = base.alg;
    std::vector<std::vector<Quaternion>> probes;
    auto unit = [&](size_t r) {
        std::vector<Quaternion> v(s, Quaternion::zero(A));
        v[r] = Quaternion::one(A);
        return v;
    };
    for (size_t r = 0; r < s; ++r) probes.push_back(unit(r));
    for (size_t r = 0; r < s; ++r)
        for (size_t t = r + 1; t < s; ++t) {
            auto v = unit(r);
            v[t] = Quaternion::one(A);
            probes.push_back(v);
        }
    std::vector<Quaternion> mults = {
        Quaternion::basis(A, 1), Quaternion::basis(A, 2), Quaternion::basis(A, 3),
        Quaternion::one(A) + Quaternion::basis(A, 1)};
    for (size_t r = 0; r < s; ++r)
        for (size_t t = 0; t < s; ++t) {
            if (r == t) continue;
            for (auto& w : mults) {
                auto v = unit(r);
                v[t] = w;
                probes.push_back(v);
            }
        }
    return probes;
}

} // namespace

QuadFormQ diagonalize_gram(const QuadFormQ& rho) {
    const QuatBase& base = rho.base();
    {
        DivisionCheck dc = is_division(base.alg);
        if (dc.status == DivisionStatus::Split)
            throw std::domain_error("diagonalize_gram: split base algebra");
        if (dc.status == DivisionStatus::Undecided)
            throw std::domain_error("diagonalize_gram: division status of the base algebra undecided");
    }
    if (rho.is_diagonal()) return rho;

    size_t n = rho.dim();
    WorkingSpace ws{base, rho.gram_entries(), {}, n, n};
    ws.basis.assign(n * n, Quaternion::zero(base.alg));
    for (size_t i = 0; i < n; ++i) ws.basis[i * n + i] = Quaternion::one(base.alg);

    std::vector<Quaternion> out_diag;
    std::vector<std::string> log;

    while (ws.s > 0) {
        auto probes = probe_schedule(base, ws.s);
        std::vector<Quaternion> pivot;
        Quaternion alpha = Quaternion::zero(base.alg);
        bool found = false;
        std::optional<std::vector<Quaternion>> alt_witness;
        for (auto& v : probes) {
            Quaternion val = ws.q_of(v);
            SymAltClass cls = val.is_zero() ? SymAltClass::Alt : classify_sym_alt(base.invol, val);
            if (cls == SymAltClass::Neither) {
                pivot = v;
                alpha = val;
                found = true;
                break;
            }
            if (cls == SymAltClass::Alt && !alt_witness) alt_witness = v;
            log.push_back("probe value in Sym");
        }
        if (!found) {
            // No nonsingular slot reachable: the residual polar form must vanish.
            bool polar_zero = true;
            for (size_t i = 0; i < ws.s && polar_zero; ++i)
                for (size_t j = 0; j < ws.s; ++j) {
                    Quaternion Nij = (i <= j ? ws.G[i * ws.s + j] : Quaternion::zero(base.alg)) +
                                     ws.theta(j <= i ? ws.G[j * ws.s + i] : Quaternion::zero(base.alg));
                    if (i == j) continue;
                    if (!Nij.is_zero()) { polar_zero = false; break; }
                }
            if (!polar_zero) {
                std::vector<Quaternion> w;
                if (alt_witness) w = ws.to_original(*alt_witness);
                throw ProbeExhaustedError(
                    "diagonalize_gram: probe schedule exhausted on a residual with nonzero polar form",
                    std::move(w), std::move(log));
            }
            // Totally singular residual: already diagonal mod Alt.
            for (size_t m = 0; m < ws.s; ++m) {
                Quaternion e = ws.G[m * ws.s + m];
                SymAltClass cls = e.is_zero() ? SymAltClass::Alt : classify_sym_alt(base.invol, e);
                if (cls == SymAltClass::Alt) {
                    std::vector<Quaternion> unit(ws.s, Quaternion::zero(base.alg));
                    unit[m] = Quaternion::one(base.alg);
                    throw ProbeExhaustedError(
                        "diagonalize_gram: zero slot (diagonal value in Alt) is not representable "
                        "by a diagonal form",
                        ws.to_original(unit), std::move(log));
                }
                out_diag.push_back(e);
            }
            break;
        }

        out_diag.push_back(alpha);
        if (ws.s == 1) break;

        // Split off pivot: h(pivot, pivot) = alpha + theta(alpha) is invertible.
        Quaternion d = alpha + ws.theta(alpha);
        Quaternion dinv = d.inv();
        size_t lead = ws.s;
        for (size_t m = 0; m < ws.s; ++m)
            if (!pivot[m].is_zero() && !nrd(pivot[m]).is_zero()) { lead = m; break; }
        if (lead == ws.s)
            throw std::logic_error("diagonalize_gram: probe vector without invertible coordinate");

        std::vector<std::vector<Quaternion>> new_vectors;
        for (size_t m = 0; m < ws.s; ++m) {
            if (m == lead) continue;
            std::vector<Quaternion> em(ws.s, Quaternion::zero(base.alg));
            em[m] = Quaternion::one(base.alg);
            Quaternion c = dinv * ws.h_of(pivot, m);
            // y_m = e_m + pivot * c
            for (size_t idx = 0; idx < ws.s; ++idx) em[idx] = em[idx] + pivot[idx] * c;
            new_vectors.push_back(std::move(em));
        }

        size_t s2 = ws.s - 1;
        std::vector<Quaternion> G2(s2 * s2, Quaternion::zero(base.alg));
        for (size_t i = 0; i < s2; ++i) {
            G2[i * s2 + i] = ws.q_of(new_vectors[i]);
            for (size_t j = i + 1; j < s2; ++j) {
                // h(y_i, y_j)
                Quaternion acc = Quaternion::zero(base.alg);
                for (size_t m = 0; m < ws.s; ++m) {
                    if (new_vectors[j][m].is_zero()) continue;
                    acc = acc + ws.h_of(new_vectors[i], m) * new_vectors[j][m];
                }
                G2[i * s2 + j] = acc;
            }
        }
        std::vector<Quaternion> basis2(s2 * n, Quaternion::zero(base.alg));
        for (size_t i = 0; i < s2; ++i) {
            auto orig = ws.to_original(new_vectors[i]);
            for (size_t j = 0; j < n; ++j) basis2[i * n + j] = orig[j];
        }
        ws.G = std::move(G2);
        ws.basis = std::move(basis2);
        ws.s = s2;
    }
    return QuadFormQ::diagonal(base, std::move(out_diag));
}

// --- trace form and constructors -------------------------------------------------

QuadFormF trace_form_F(const HermForm& phi) {
    if (phi.is_bilinear() || !phi.alternating())
        throw std::invalid_argument("trace_form_F: alternating hermitian form over (Q,gamma) required");
    if (!phi.base().invol.symplectic)
        throw std::invalid_argument("trace_form_F: transport to the canonical involution first");
    const QAlg& A = phi.base().alg;
    const Field& f = A->field;
    QuadFormF r;
    r.field = f;
    for (auto& e : phi.q_entries()) {
        if (e.is_zero()) throw std::invalid_argument("trace_form_F: degenerate form");
        FieldElem c = e[0];
        r.blocks.emplace_back(c, A->a / c);
        FieldElem cb = c * A->b;
        r.blocks.emplace_back(cb, A->a / cb);
    }
    return r;
}

std::vector<FieldElem> trace_form_coords(const Quaternion& x, const FieldElem& c) {
    const FieldElem& b = x.algebra()->b;
    return {x[0], x[1] * c, x[2], x[3] * (c * b)};
}

QuadFormF norm_form(const QAlg& A) {
    const Field& f = A->field;
    QuadFormF r;
    r.field = f;
    r.blocks.emplace_back(FieldElem::one(f), A->a);
    r.blocks.emplace_back(A->b, A->a / A->b);
    return r;
}

HermForm pfister_bilinear(const Field& f, const std::vector<FieldElem>& bs) {
    std::vector<FieldElem> ents{FieldElem::one(f)};
    for (auto& b : bs) {
        if (b.is_zero()) throw std::invalid_argument("pfister_bilinear: zero parameter");
        std::vector<FieldElem> next;
        next.reserve(ents.size() * 2);
        for (auto& c : ents) {
            next.push_back(c);
            next.push_back(c * b);
        }
        ents = std::move(next);
    }
    return HermForm::bilinear(f, std::move(ents));
}

QuadFormF pfister_quadratic(const Field& f, const std::vector<FieldElem>& bs, const FieldElem& c) {
    if (c.is_zero()) throw std::invalid_argument("pfister_quadratic: zero parameter");
    HermForm bil = pfister_bilinear(f, bs);
    QuadFormF r;
    r.field = f;
    for (auto& e : bil.f_entries()) r.blocks.emplace_back(e, c / e);
    return r;
}

} // namespace c2f
