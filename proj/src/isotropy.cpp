#include "c2f/isotropy.hpp"

namespace c2f {

// --- certificate/verdict helpers ------------------------------------------------

Certificate Certificate::dim_bound(std::string thm, std::string note) {
    Certificate c;
    c.tag = Tag::DimBound;
    c.theorem = std::move(thm);
    c.note = std::move(note);
    return c;
}
Certificate Certificate::arf_rule(std::string thm, ArfValue v, std::string note) {
    Certificate c;
    c.tag = Tag::ArfRule;
    c.theorem = std::move(thm);
    c.arf = std::move(v);
    c.note = std::move(note);
    return c;
}
Certificate Certificate::symbol_rule(int bit, std::string note) {
    Certificate c;
    c.tag = Tag::SymbolRule;
    c.theorem = "norm-group-symbol";
    c.bit = bit;
    c.note = std::move(note);
    return c;
}
Certificate Certificate::f2_rank(std::vector<FieldElem> kernel, std::string note) {
    Certificate c;
    c.tag = Tag::F2Rank;
    c.theorem = "square-independence-rank";
    c.kernel = std::move(kernel);
    c.note = std::move(note);
    return c;
}
Certificate Certificate::norm_form_rule(std::string note) {
    Certificate c;
    c.tag = Tag::NormFormRule;
    c.theorem = "division-norm-argument";
    c.note = std::move(note);
    return c;
}
Certificate Certificate::direct_sum(std::vector<Certificate> parts, std::string thm) {
    Certificate c;
    c.tag = Tag::DirectSum;
    c.theorem = std::move(thm);
    c.parts = std::move(parts);
    return c;
}
Certificate Certificate::search_witness(int bound) {
    Certificate c;
    c.tag = Tag::SearchWitness;
    c.theorem = "exhibited-witness";
    c.bound = bound;
    return c;
}
Certificate Certificate::search_exhausted(int bound) {
    Certificate c;
    c.tag = Tag::SearchExhausted;
    c.theorem = "bounded-search-exhausted";
    c.bound = bound;
    return c;
}

IsotropyVerdict IsotropyVerdict::isotropic(Certificate c, std::optional<Witness> w) {
    return IsotropyVerdict{IsoStatus::Isotropic, std::move(w), std::move(c)};
}
IsotropyVerdict IsotropyVerdict::anisotropic(Certificate c) {
    return IsotropyVerdict{IsoStatus::Anisotropic, std::nullopt, std::move(c)};
}
IsotropyVerdict IsotropyVerdict::undecided(Certificate c) {
    return IsotropyVerdict{IsoStatus::Undecided, std::nullopt, std::move(c)};
}

// --- search oracle ---------------------------------------------------------------

namespace {

// Atoms of each cost, cost = deg(num) + deg(den), ordered within a cost by
// denominator index then numerator coefficient tuple.
struct AtomSet {
    std::vector<std::vector<FieldElem>> by_cost;
};

void enumerate_polys_of_degree(const Gf2m& K, int d, const std::function<void(const Poly&)>& cb) {
    // all polynomials of exact degree d (leading coefficient nonzero)
    gfelem full = gfelem((std::uint64_t(1) << K.k()) - 1);
    Poly p;
    p.c.assign(size_t(d) + 1, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == d) {
            for (gfelem lead = 1; lead <= full; ++lead) {
                p.c[size_t(d)] = lead;
                cb(p);
            }
            return;
        }
        for (gfelem c = 0; c <= full; ++c) {
            p.c[size_t(pos)] = c;
            rec(pos + 1);
        }
    };
    rec(0);
}

AtomSet make_atoms(const Field& f, int max_cost, bool with_dens) {
    const Gf2m& K = f->coeffs;
    AtomSet s;
    s.by_cost.assign(size_t(max_cost) + 1, {});
    s.by_cost[0].push_back(FieldElem::zero(f));
    std::vector<Poly> dens{Poly::one()};
    if (with_dens) {
        dens.push_back(Poly::monomial(1, 1));                       // t
        dens.push_back(poly_add(Poly::one(), Poly::monomial(1, 1))); // 1+t
        dens.push_back(Poly::monomial(1, 2));                       // t^2
    }
    for (size_t di = 0; di < dens.size(); ++di) {
        int dcost = dens[di].deg();
        for (int nd = 0; nd + dcost <= max_cost; ++nd) {
            enumerate_polys_of_degree(K, nd, [&](const Poly& num) {
                if (num.is_zero()) return;
                if (dcost > 0 && poly_gcd(K, num, dens[di]).deg() > 0) return;
                s.by_cost[size_t(nd + dcost)].push_back(FieldElem(f, num, dens[di]));
            });
        }
    }
    return s;
}

/// Enumerate nonzero coordinate vectors with total cost <= bound, cost-major
/// then lexicographic; cb returns true to stop.
bool enumerate_vectors(const AtomSet& atoms, size_t n, int bound,
                       const std::function<bool(const std::vector<FieldElem>&)>& cb) {
    std::vector<FieldElem> cur(n);
    std::function<bool(size_t, int, bool)> rec = [&](size_t pos, int left, bool all_zero) -> bool {
        if (pos == n) {
            if (left != 0 || all_zero) return false;
            return cb(cur);
        }
        for (int c = 0; c <= left; ++c) {
            for (const FieldElem& a : atoms.by_cost[size_t(c)]) {
                cur[pos] = a;
                if (rec(pos + 1, left - c, all_zero && a.is_zero())) return true;
            }
        }
        return false;
    };
    for (int total = 0; total <= bound; ++total)
        if (rec(0, total, true)) return true;
    return false;
}

/// Quaternion-coordinate enumeration: first nonzero coordinate normalised to
/// one, remaining coordinates have polynomial entries with total degree
/// budget; pivot-position-major within a total cost.
bool enumerate_quat_vectors(const QAlg& A, size_t n, int bound,
                            const std::function<bool(const std::vector<Quaternion>&)>& cb) {
    AtomSet atoms = make_atoms(A->field, bound, /*with_dens=*/false);
    std::vector<Quaternion> vec(n, Quaternion::zero(A));
    for (int total = 0; total <= bound; ++total) {
        for (size_t pivot = 0; pivot < n; ++pivot) {
            size_t free_slots = 4 * (n - pivot - 1);
            if (free_slots == 0 && total > 0) continue;
            for (size_t i = 0; i < n; ++i) vec[i] = Quaternion::zero(A);
            vec[pivot] = Quaternion::one(A);
            if (free_slots == 0) {
                if (cb(vec)) return true;
                continue;
            }
            std::vector<FieldElem> flat(free_slots, FieldElem::zero(A->field));
            std::function<bool(size_t, int)> rec = [&](size_t pos, int left) -> bool {
                if (pos == free_slots) {
                    if (left != 0) return false;
                    for (size_t q = 0; q < n - pivot - 1; ++q)
                        vec[pivot + 1 + q] = Quaternion(
                            A, {flat[4 * q], flat[4 * q + 1], flat[4 * q + 2], flat[4 * q + 3]});
                    return cb(vec);
                }
                for (int c = 0; c <= left; ++c)
                    for (const FieldElem& a : atoms.by_cost[size_t(c)]) {
                        flat[pos] = a;
                        if (rec(pos + 1, left - c)) return true;
                    }
                return false;
            };
            if (rec(0, total)) return true;
        }
    }
    return false;
}

bool in_alt(const Involution& th, const Quaternion& v) {
    return v.is_zero() || classify_sym_alt(th, v) == SymAltClass::Alt;
}

} // namespace

std::optional<std::vector<FieldElem>> search_zero_f(const QuadFormF& rho, int bound) {
    AtomSet atoms = make_atoms(rho.field, bound, /*with_dens=*/true);
    std::optional<std::vector<FieldElem>> found;
    enumerate_vectors(atoms, rho.dim(), bound, [&](const std::vector<FieldElem>& v) {
        if (rho.value_at(v).is_zero()) {
            found = v;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<FieldElem>> search_zero_bilinear(const HermForm& phi, int bound) {
    if (!phi.is_bilinear()) throw std::invalid_argument("search_zero_bilinear: bilinear form required");
    AtomSet atoms = make_atoms(phi.field(), bound, /*with_dens=*/true);
    std::optional<std::vector<FieldElem>> found;
    enumerate_vectors(atoms, phi.dim(), bound, [&](const std::vector<FieldElem>& v) {
        if (phi.value_at_f(v).is_zero()) {
            found = v;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<Quaternion>> search_zero_quad_q(const QuadFormQ& rho, int bound) {
    std::optional<std::vector<Quaternion>> found;
    enumerate_quat_vectors(rho.base().alg, rho.dim(), bound, [&](const std::vector<Quaternion>& v) {
        if (in_alt(rho.base().invol, rho.value_at(v))) {
            found = v;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<Quaternion>> search_zero_herm(const HermForm& phi, int bound) {
    if (phi.is_bilinear()) throw std::invalid_argument("search_zero_herm: form over (Q,theta) required");
    std::optional<std::vector<Quaternion>> found;
    enumerate_quat_vectors(phi.base().alg, phi.dim(), bound, [&](const std::vector<Quaternion>& v) {
        if (phi.value_at(v).is_zero()) {
            found = v;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::array<FieldElem, 4>> search_norm_form_zero(const QAlg& A, int bound) {
    auto w = search_zero_f(norm_form(A), bound);
    if (!w) return std::nullopt;
    return std::array<FieldElem, 4>{(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
}

// --- witness verification ---------------------------------------------------------

namespace {

bool value_zero_mod(const FieldElem& v, int precision) {
    if (v.is_zero()) return true;
    if (precision < 0) return false;
    return v.valuation() >= precision;
}

bool quat_zero_mod(const Quaternion& v, int precision) {
    for (int i = 0; i < 4; ++i)
        if (!value_zero_mod(v[i], precision)) return false;
    return true;
}

bool quat_in_alt_mod(const Involution& th, const Quaternion& v, int precision) {
    Quaternion m = th.symplectic ? v : th.u.inv() * v;
    // membership of u^-1 v in F*1, modulo t^precision on the i,j,k parts
    return value_zero_mod(m[1], precision) && value_zero_mod(m[2], precision) &&
           value_zero_mod(m[3], precision);
}

bool witness_nonzero_f(const std::vector<FieldElem>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return true;
    return false;
}

bool witness_nonzero_q(const std::vector<Quaternion>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return true;
    return false;
}

} // namespace

bool verify_witness(const QuadFormF& rho, const Witness& w) {
    if (w.fcoords.size() != rho.dim()) throw std::invalid_argument("verify_witness: dimension mismatch");
    if (!witness_nonzero_f(w.fcoords)) return false;
    return value_zero_mod(rho.value_at(w.fcoords), w.precision);
}

bool verify_witness(const QuadFormQ& rho, const Witness& w) {
    if (w.qcoords.size() != rho.dim()) throw std::invalid_argument("verify_witness: dimension mismatch");
    if (!witness_nonzero_q(w.qcoords)) return false;
    return quat_in_alt_mod(rho.base().invol, rho.value_at(w.qcoords), w.precision);
}

bool verify_witness(const HermForm& phi, const Witness& w) {
    if (phi.is_bilinear()) {
        if (w.fcoords.size() != phi.dim())
            throw std::invalid_argument("verify_witness: dimension mismatch");
        if (!witness_nonzero_f(w.fcoords)) return false;
        return value_zero_mod(phi.value_at_f(w.fcoords), w.precision);
    }
    if (w.qcoords.size() != phi.dim()) throw std::invalid_argument("verify_witness: dimension mismatch");
    if (!witness_nonzero_q(w.qcoords)) return false;
    return quat_zero_mod(phi.value_at(w.qcoords), w.precision);
}

// --- F-form deciders ---------------------------------------------------------------

namespace {

// Kernel vector of the 2 x n matrix [alphas; betas] over F, or nullopt.
std::optional<std::vector<FieldElem>> kernel_2xn(const Field& f,
                                                 const std::vector<FieldElem>& alphas,
                                                 const std::vector<FieldElem>& betas) {
    size_t n = alphas.size();
    std::vector<std::vector<FieldElem>> rows{alphas, betas};
    std::vector<int> pivot_of_row(2, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < 2; ++col) {
        size_t sel = 2;
        for (size_t r = rank; r < 2; ++r)
            if (!rows[r][col].is_zero()) { sel = r; break; }
        if (sel == 2) continue;
        std::swap(rows[rank], rows[sel]);
        FieldElem inv = rows[rank][col].inv();
        for (size_t c = 0; c < n; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (size_t r = 0; r < 2; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElem factor = rows[r][col];
            for (size_t c = 0; c < n; ++c) rows[r][c] = rows[r][c] + factor * rows[rank][c];
        }
        pivot_of_row[rank] = int(col);
        ++rank;
    }
    if (rank == n) return std::nullopt;
    // first non-pivot column -> kernel vector
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < rank; ++r) is_pivot[size_t(pivot_of_row[r])] = true;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<FieldElem> ker(n, FieldElem::zero(f));
    ker[free_col] = FieldElem::one(f);
    for (size_t r = 0; r < rank; ++r)
        ker[size_t(pivot_of_row[r])] = rows[r][free_col];
    return ker;
}

struct BlockData {
    FieldElem scale;  // c (block = c[1,d] up to isometry)
    FieldElem dclass; // d = b*c from [b,c]
    WpClass cls;
};

// Witness inside block `idx` of rho for [b,c] with wp_class(bc) trivial
// (or a zero coefficient), embedded into the full coordinate vector.
Witness block_witness(const QuadFormF& rho, size_t idx, int precision) {
    const auto& [b, c] = rho.blocks[idx];
    const Field& f = rho.field;
    Witness w;
    w.fcoords.assign(rho.dim(), FieldElem::zero(f));
    if (b.is_zero()) {
        w.fcoords[2 * idx] = FieldElem::one(f);
        return w;
    }
    if (c.is_zero()) {
        w.fcoords[2 * idx + 1] = FieldElem::one(f);
        return w;
    }
    auto sol = wp_solve(b * c, precision);
    if (!sol) throw std::logic_error("block_witness: class not trivial");
    FieldElem z = sol->as_rational(f);
    w.fcoords[2 * idx] = z / b;
    w.fcoords[2 * idx + 1] = FieldElem::one(f);
    w.precision = sol->exact ? -1 : sol->precision;
    return w;
}

} // namespace

IsotropyVerdict iso_F_totally_singular(const QuadFormF& rho) {
    if (!rho.blocks.empty())
        throw std::invalid_argument("iso_F_totally_singular: blocks must be empty");
    if (rho.field->kind == FieldKind::Finite)
        throw std::domain_error("iso_F_totally_singular: t-adic field required");
    const Field& f = rho.field;
    std::vector<FieldElem> alphas, betas;
    for (auto& d : rho.diag) {
        auto [al, be] = square_decompose(d);
        alphas.push_back(al);
        betas.push_back(be);
    }
    auto ker = kernel_2xn(f, alphas, betas);
    if (ker) {
        Witness w;
        w.fcoords = *ker;
        return IsotropyVerdict::isotropic(
            Certificate::f2_rank(*ker, "kernel of the square-decomposition matrix"), std::move(w));
    }
    return IsotropyVerdict::anisotropic(
        Certificate::f2_rank({}, "entries independent over F^2 (full rank)"));
}

IsotropyVerdict iso_F_nonsingular(const QuadFormF& rho, const EngineOptions& opts) {
    if (!rho.diag.empty())
        throw std::invalid_argument("iso_F_nonsingular: totally singular part must be empty");
    const Field& f = rho.field;
    if (f->kind != FieldKind::Local) {
        auto wv = search_zero_f(rho, opts.search_bound);
        if (wv) {
            Witness w;
            w.fcoords = *wv;
            return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                              std::move(w));
        }
        return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
    }

    // immediate hyperbolic-slot witnesses, then per-block wp-classes
    std::vector<BlockData> data;
    for (size_t i = 0; i < rho.blocks.size(); ++i) {
        const auto& [b, c] = rho.blocks[i];
        if (b.is_zero() || c.is_zero())
            return IsotropyVerdict::isotropic(
                Certificate::arf_rule("binary-block-hyperbolic", ArfValue{WpClass{}, 2},
                                      "block with a zero coefficient"),
                block_witness(rho, i, opts.precision));
        BlockData bd{b, b * c, wp_class(b * c)};
        if (bd.cls.trivial())
            return IsotropyVerdict::isotropic(
                Certificate::arf_rule("binary-block-hyperbolic", ArfValue{bd.cls, 2},
                                      "block wp-class trivial"),
                block_witness(rho, i, opts.precision));
        data.push_back(std::move(bd));
    }
    if (rho.blocks.size() == 1)
        return IsotropyVerdict::anisotropic(Certificate::arf_rule(
            "binary-anisotropy-wp-class", ArfValue{data[0].cls, 2}, "nontrivial block class"));

    auto pair_verdict = [&](size_t i, size_t j) -> std::optional<IsotropyVerdict> {
        if (data[i].cls != data[j].cls) {
            ArfValue v{data[i].cls + data[j].cls, 4};
            IsotropyVerdict verdict = IsotropyVerdict::isotropic(Certificate::arf_rule(
                "distinct-quadratic-extensions", v, "block classes differ; common value exists"));
            return verdict;
        }
        int s = hilbert_symbol(data[i].dclass, data[j].scale / data[i].scale);
        if (s == 0)
            return IsotropyVerdict::isotropic(
                Certificate::symbol_rule(0, "scale ratio is a norm of the common extension"));
        return std::nullopt; // this pair alone is anisotropic
    };

    if (rho.blocks.size() == 2) {
        auto v = pair_verdict(0, 1);
        if (v) {
            if (!v->witness) {
                auto wv = search_zero_f(rho, opts.search_bound);
                if (wv) {
                    Witness w;
                    w.fcoords = *wv;
                    v->witness = std::move(w);
                }
            }
            return *v;
        }
        return IsotropyVerdict::anisotropic(
            Certificate::symbol_rule(1, "equal nontrivial classes, non-norm scale ratio"));
    }

    // dim >= 6: some pair decides isotropy (u~(F) = 4)
    for (size_t i = 0; i < data.size(); ++i)
        for (size_t j = i + 1; j < data.size(); ++j) {
            auto v = pair_verdict(i, j);
            if (v) {
                Certificate c = Certificate::dim_bound("u_tilde_F_eq_4");
                c.parts.push_back(v->cert);
                return IsotropyVerdict::isotropic(std::move(c));
            }
        }
    throw std::logic_error("iso_F_nonsingular: no deciding pair among >= 3 blocks");
}

IsotropyVerdict iso_F(const QuadFormF& rho, const EngineOptions& opts) {
    if (rho.blocks.empty()) return iso_F_totally_singular(rho);
    if (rho.diag.empty()) return iso_F_nonsingular(rho, opts);

    const Field& f = rho.field;
    // totally singular subform alone
    QuadFormF ts{f, {}, rho.diag};
    IsotropyVerdict tsv = iso_F_totally_singular(ts);
    if (tsv.status == IsoStatus::Isotropic) {
        Witness w;
        w.fcoords.assign(rho.dim(), FieldElem::zero(f));
        for (size_t i = 0; i < rho.diag.size(); ++i)
            w.fcoords[2 * rho.blocks.size() + i] = tsv.witness->fcoords[i];
        tsv.witness = std::move(w);
        return tsv;
    }
    // nonsingular subform alone
    if (f->kind == FieldKind::Local) {
        QuadFormF ns{f, rho.blocks, {}};
        IsotropyVerdict nsv = iso_F_nonsingular(ns, opts);
        if (nsv.status == IsoStatus::Isotropic) {
            if (nsv.witness) {
                Witness w;
                w.fcoords = nsv.witness->fcoords;
                w.precision = nsv.witness->precision;
                w.fcoords.resize(rho.dim(), FieldElem::zero(f));
                nsv.witness = std::move(w);
            }
            return nsv;
        }
        if (rho.blocks.size() >= 2)
            return IsotropyVerdict::isotropic(
                Certificate::dim_bound("type-(4,1)-isotropy", "nonsingular part of dimension >= 4 "
                                                              "with a singular slot"));
    }
    auto wv = search_zero_f(rho, opts.search_bound);
    if (wv) {
        Witness w;
        w.fcoords = *wv;
        return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                          std::move(w));
    }
    return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
}

// --- bilinear forms over F ----------------------------------------------------------

IsotropyVerdict iso_bilinear(const HermForm& phi, const EngineOptions& opts) {
    if (!phi.is_bilinear()) throw std::invalid_argument("iso_bilinear: bilinear form required");
    const Field& f = phi.field();
    for (size_t i = 0; i < phi.f_entries().size(); ++i) {
        if (phi.f_entries()[i].is_zero()) {
            Witness w;
            w.fcoords.assign(phi.dim(), FieldElem::zero(f));
            w.fcoords[i] = FieldElem::one(f);
            return IsotropyVerdict::isotropic(
                Certificate::f2_rank(w.fcoords, "radical (zero) entry"), std::move(w));
        }
    }
    if (f->kind == FieldKind::Finite) {
        auto wv = search_zero_bilinear(phi, opts.search_bound);
        if (wv) {
            Witness w;
            w.fcoords = *wv;
            return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                              std::move(w));
        }
        return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
    }
    QuadFormF ts{f, {}, phi.f_entries()};
    return iso_F_totally_singular(ts);
}

// --- deciders over (Q,theta) ----------------------------------------------------------

namespace {

enum class BaseClass { LocalDivision, SearchOnly };

BaseClass classify_base(const QAlg& A) {
    if (A->field->kind != FieldKind::Local) return BaseClass::SearchOnly;
    DivisionCheck dc = is_division(A, 0);
    if (dc.status == DivisionStatus::Split)
        throw std::domain_error("isotropy engine: the base quaternion algebra is split "
                                "(division algebra required for the form-level deciders)");
    return BaseClass::LocalDivision;
}

IsotropyVerdict search_layer_quad(const QuadFormQ& rho, const EngineOptions& opts) {
    auto wv = search_zero_quad_q(rho, opts.search_bound);
    if (wv) {
        Witness w;
        w.qcoords = *wv;
        return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                          std::move(w));
    }
    return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
}

std::optional<Witness> escalate_quad_witness(const QuadFormQ& rho, int max_bound) {
    for (int b = 0; b <= max_bound; ++b) {
        auto wv = search_zero_quad_q(rho, b);
        if (wv) {
            Witness w;
            w.qcoords = *wv;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

IsotropyVerdict iso_Q_nonsingular(const QuadFormQ& rho, const EngineOptions& opts) {
    QuadFormQ d = rho.is_diagonal() ? rho : diagonalize_gram(rho);
    for (auto& e : d.diag())
        if (classify_sym_alt(d.base().invol, e) != SymAltClass::Neither)
            throw std::invalid_argument("iso_Q_nonsingular: form is not nonsingular");
    if (classify_base(d.base().alg) == BaseClass::SearchOnly) return search_layer_quad(d, opts);

    size_t n = d.dim();
    ArfValue arf = arf_of(d);
    if (n == 1) {
        if (arf.cls.trivial())
            throw std::logic_error("iso_Q_nonsingular: trivial Arf on a 1-dim nonsingular form "
                                   "over a division algebra");
        return IsotropyVerdict::anisotropic(Certificate::arf_rule(
            "one-dim-nonsingular-anisotropy", arf,
            "gamma(d) x d in F forces x central; also the Arf class is nontrivial"));
    }
    if (n == 2) {
        if (arf.cls.trivial()) {
            auto w = escalate_quad_witness(d, opts.witness_effort);
            return IsotropyVerdict::isotropic(
                Certificate::arf_rule("dim2-arf-classification", arf,
                                      "trivial Arf: isometric to <y,y>"),
                std::move(w));
        }
        return IsotropyVerdict::anisotropic(
            Certificate::arf_rule("dim2-arf-classification", arf, "nontrivial Arf"));
    }
    if (n == 3) {
        if (arf.cls.trivial())
            return IsotropyVerdict::anisotropic(
                Certificate::arf_rule("three-dim-trivial-arf-anisotropy", arf,
                                      "trivial Arf in dimension 3"));
        auto w = escalate_quad_witness(d, opts.witness_effort);
        return IsotropyVerdict::isotropic(
            Certificate::arf_rule("three-dim-nontrivial-arf-classification", arf), std::move(w));
    }
    auto w = escalate_quad_witness(d, opts.witness_effort);
    return IsotropyVerdict::isotropic(Certificate::dim_bound("u_tilde_Q_eq_3"), std::move(w));
}

IsotropyVerdict iso_Q_totally_singular(const QuadFormQ& rho, const EngineOptions& opts) {
    if (!rho.is_diagonal())
        throw std::invalid_argument("iso_Q_totally_singular: diagonal representation required");
    for (auto& e : rho.diag())
        if (classify_sym_alt(rho.base().invol, e) != SymAltClass::SymNotAlt)
            throw std::invalid_argument("iso_Q_totally_singular: entries must lie in Sym \\ Alt");
    if (classify_base(rho.base().alg) == BaseClass::SearchOnly)
        return search_layer_quad(rho, opts);

    if (rho.dim() == 1)
        return IsotropyVerdict::anisotropic(Certificate::norm_form_rule(
            "conjugation identity: gamma(y) s y = Nrd(y) y^-1 s y lies in F only for y = 0"));
    auto w = escalate_quad_witness(rho, opts.escalate_max);
    return IsotropyVerdict::isotropic(Certificate::dim_bound("u_d_plus_Q_eq_1"), std::move(w));
}

IsotropyVerdict iso_quad_q(const QuadFormQ& rho, const EngineOptions& opts) {
    QuadFormQ d = rho;
    if (!rho.is_diagonal()) {
        try {
            d = diagonalize_gram(rho);
        } catch (const ProbeExhaustedError& e) {
            if (!e.witness.empty()) {
                Witness w;
                w.qcoords = e.witness;
                Certificate c = Certificate::search_witness(0);
                c.note = "zero-valued slot found during Gram diagonalisation";
                return IsotropyVerdict::isotropic(std::move(c), std::move(w));
            }
            throw;
        }
    }
    TypeDecomposition td = type_decompose(d);
    auto [n, m] = td.type;
    if (m == 0) return iso_Q_nonsingular(d, opts);
    if (n == 0) return iso_Q_totally_singular(d, opts);

    if (classify_base(d.base().alg) == BaseClass::SearchOnly) return search_layer_quad(d, opts);

    // positions of totally singular slots inside the diagonal
    std::vector<size_t> ts_pos;
    for (size_t i = 0; i < d.dim(); ++i)
        if (classify_sym_alt(d.base().invol, d.diag()[i]) == SymAltClass::SymNotAlt)
            ts_pos.push_back(i);

    auto ts_subform_witness = [&]() -> std::optional<Witness> {
        if (ts_pos.size() < 2) return std::nullopt;
        QuadFormQ ts = QuadFormQ::diagonal(d.base(), td.totally_singular);
        auto w = escalate_quad_witness(ts, opts.escalate_max);
        if (!w) return std::nullopt;
        Witness full;
        full.qcoords.assign(d.dim(), Quaternion::zero(d.base().alg));
        for (size_t i = 0; i < ts_pos.size(); ++i) full.qcoords[ts_pos[i]] = w->qcoords[i];
        full.precision = w->precision;
        return full;
    };

    if (n + m >= 4) {
        auto w = ts_subform_witness();
        if (!w) {
            auto ws = escalate_quad_witness(d, opts.witness_effort);
            if (ws) w = ws;
        }
        return IsotropyVerdict::isotropic(Certificate::dim_bound("u_Q_eq_3"), std::move(w));
    }
    if (m >= 2) { // type (1,2)
        auto w = ts_subform_witness();
        return IsotropyVerdict::isotropic(Certificate::dim_bound("u_d_plus_Q_eq_1"), std::move(w));
    }
    if (n == 2) { // type (2,1): always isotropic over a Kaplansky local field
        auto w = escalate_quad_witness(d, opts.witness_effort);
        return IsotropyVerdict::isotropic(
            Certificate::dim_bound("type-(2,m)-reduction",
                                   "u-(Q)=1 makes the polar form isotropic; the represented "
                                   "symmetric element merges into the singular part (u_d+(Q)=1)"),
            std::move(w));
    }
    // type (1,1): no complete paper-backed rule; bounded search, else undecided
    auto wv = search_zero_quad_q(d, opts.search_bound);
    if (wv) {
        Witness w;
        w.qcoords = *wv;
        return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                          std::move(w));
    }
    return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
}

// --- hermitian forms -------------------------------------------------------------------

namespace {

Witness trace_form_witness_to_quat(const HermForm& phi, const Witness& fw) {
    // invert the block normalisation of trace_form_F per entry
    const QAlg& A = phi.base().alg;
    const FieldElem& a_b = A->b;
    Witness w;
    w.precision = fw.precision;
    for (size_t i = 0; i < phi.dim(); ++i) {
        FieldElem c = phi.q_entries()[i][0];
        FieldElem x0 = fw.fcoords[4 * i];
        FieldElem x1 = fw.fcoords[4 * i + 1] / c;
        FieldElem x2 = fw.fcoords[4 * i + 2];
        FieldElem x3 = fw.fcoords[4 * i + 3] / (c * a_b);
        w.qcoords.push_back(Quaternion(A, {x0, x1, x2, x3}));
    }
    return w;
}

} // namespace

IsotropyVerdict iso_hermitian(const HermForm& phi_in, const EngineOptions& opts) {
    if (phi_in.is_bilinear()) return iso_bilinear(phi_in, opts);

    // transport to the canonical involution first (same witnesses)
    HermForm phi = phi_in.base().invol.symplectic
                       ? phi_in
                       : herm_transport(phi_in, canonical_involution_desc(phi_in.base().alg));
    const QAlg& A = phi.base().alg;
    const Field& f = A->field;

    for (size_t i = 0; i < phi.dim(); ++i) {
        if (phi.q_entries()[i].is_zero()) {
            Witness w;
            w.qcoords.assign(phi.dim(), Quaternion::zero(A));
            w.qcoords[i] = Quaternion::one(A);
            Certificate c = Certificate::norm_form_rule("radical (zero) entry");
            return IsotropyVerdict::isotropic(std::move(c), std::move(w));
        }
    }

    if (f->kind != FieldKind::Local || classify_base(A) == BaseClass::SearchOnly) {
        auto wv = search_zero_herm(phi, opts.search_bound);
        if (wv) {
            Witness w;
            w.qcoords = *wv;
            return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                              std::move(w));
        }
        return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
    }

    std::vector<size_t> alt_pos, sym_pos;
    for (size_t i = 0; i < phi.dim(); ++i) {
        if (classify_sym_alt(phi.base().invol, phi.q_entries()[i]) == SymAltClass::Alt)
            alt_pos.push_back(i);
        else
            sym_pos.push_back(i);
    }

    // wholly alternating: exact via the trace form over F
    if (sym_pos.empty()) {
        QuadFormF tf = trace_form_F(phi);
        IsotropyVerdict fv = iso_F_nonsingular(tf, opts);
        if (fv.status == IsoStatus::Anisotropic) {
            Certificate c = Certificate::norm_form_rule("trace form (scaled norm forms) anisotropic");
            c.parts.push_back(fv.cert);
            return IsotropyVerdict::anisotropic(std::move(c));
        }
        Certificate c = Certificate::norm_form_rule("trace form (scaled norm forms) isotropic");
        c.parts.push_back(fv.cert);
        std::optional<Witness> w;
        if (fv.witness) w = trace_form_witness_to_quat(phi, *fv.witness);
        if (!w) {
            auto wv = search_zero_f(tf, opts.search_bound);
            if (wv) {
                Witness fw;
                fw.fcoords = *wv;
                w = trace_form_witness_to_quat(phi, fw);
            }
        }
        return IsotropyVerdict::isotropic(std::move(c), std::move(w));
    }

    if (phi.dim() == 1)
        return IsotropyVerdict::anisotropic(
            Certificate::norm_form_rule("one-dimensional form over a division algebra"));

    if (phi.dim() >= 3) {
        std::optional<Witness> w;
        if (alt_pos.size() >= 2) {
            // exact witness from the alternating 2-entry subform's trace form
            HermForm sub = HermForm::over_quat(
                phi.base(), {phi.q_entries()[alt_pos[0]], phi.q_entries()[alt_pos[1]]});
            QuadFormF tf = trace_form_F(sub);
            IsotropyVerdict fv = iso_F_nonsingular(tf, opts);
            std::optional<Witness> sw;
            if (fv.witness)
                sw = trace_form_witness_to_quat(sub, *fv.witness);
            else {
                auto wv = search_zero_f(tf, opts.search_bound);
                if (wv) {
                    Witness fw;
                    fw.fcoords = *wv;
                    sw = trace_form_witness_to_quat(sub, fw);
                }
            }
            if (sw) {
                Witness full;
                full.precision = sw->precision;
                full.qcoords.assign(phi.dim(), Quaternion::zero(A));
                full.qcoords[alt_pos[0]] = sw->qcoords[0];
                full.qcoords[alt_pos[1]] = sw->qcoords[1];
                w = std::move(full);
            }
        }
        if (!w) {
            auto wv = search_zero_herm(phi, opts.witness_effort);
            if (wv) {
                Witness ww;
                ww.qcoords = *wv;
                w = std::move(ww);
            }
        }
        return IsotropyVerdict::isotropic(Certificate::dim_bound("u_plus_Q_eq_2"), std::move(w));
    }

    // dimension 2
    if (alt_pos.size() == 1) {
        std::vector<Certificate> parts;
        parts.push_back(Certificate::norm_form_rule("alternating slot: scaled norm form anisotropic"));
        parts.push_back(Certificate::norm_form_rule(
            "direct slot: associated 1-dim totally singular form anisotropic"));
        return IsotropyVerdict::anisotropic(
            Certificate::direct_sum(std::move(parts), "direct-plus-alternating-anisotropy"));
    }
    // both entries in Sym \ Alt: no paper-backed rule; honest bounded search
    auto wv = search_zero_herm(phi, opts.search_bound);
    if (wv) {
        Witness w;
        w.qcoords = *wv;
        return IsotropyVerdict::isotropic(Certificate::search_witness(opts.search_bound),
                                          std::move(w));
    }
    return IsotropyVerdict::undecided(Certificate::search_exhausted(opts.search_bound));
}

DirectnessReport directness(const HermForm& phi_in, const EngineOptions& opts) {
    DirectnessReport r;
    if (phi_in.is_bilinear()) {
        r.associated_verdict = iso_bilinear(phi_in, opts);
        r.direct = r.associated_verdict.status == IsoStatus::Anisotropic;
        return r;
    }
    HermForm phi = phi_in.base().invol.symplectic
                       ? phi_in
                       : herm_transport(phi_in, canonical_involution_desc(phi_in.base().alg));
    AssociatedTotallySingular assoc = associated_totally_singular(phi);
    if (assoc.isotropic_at) {
        Witness w;
        w.qcoords.assign(phi.dim(), Quaternion::zero(phi.base().alg));
        w.qcoords[*assoc.isotropic_at] = Quaternion::one(phi.base().alg);
        r.associated_verdict = IsotropyVerdict::isotropic(
            Certificate::norm_form_rule("entry lies in Alt: basis vector is isotropic"),
            std::move(w));
        r.direct = false;
        return r;
    }
    QuadFormQ ts = QuadFormQ::diagonal(phi.base(), assoc.entries);
    r.associated_verdict = iso_Q_totally_singular(ts, opts);
    r.direct = r.associated_verdict.status == IsoStatus::Anisotropic;
    return r;
}

} // namespace c2f
