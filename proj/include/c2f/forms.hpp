#pragma once

#include "c2f/quaternion.hpp"

#include <span>

namespace c2f {

struct QuatBase {
    QAlg alg;
    Involution invol;

    bool same(const QuatBase& o) const {
        return alg->same(*o.alg) && invol.u == o.invol.u;
    }
};

QuatBase canonical_base(const QAlg& A);

/// Diagonal hermitian form <a_1,...,a_n>^h over (Q,theta), or a symmetric
/// bilinear form over (F, id) when no quaternion base is present.
///
/// Entries satisfy theta(e) = e and e != 0, except in degenerate polar forms
/// where zero entries are kept as explicit radical markers.
class HermForm {
public:
    static HermForm over_quat(QuatBase base, std::vector<Quaternion> entries,
                              bool allow_zero = false);
    static HermForm bilinear(const Field& f, std::vector<FieldElem> entries,
                             bool allow_zero = false);

    bool is_bilinear() const { return !base_.has_value(); }
    const QuatBase& base() const { return *base_; }
    const Field& field() const { return field_; }
    size_t dim() const { return is_bilinear() ? fents_.size() : qents_.size(); }
    const std::vector<Quaternion>& q_entries() const { return qents_; }
    const std::vector<FieldElem>& f_entries() const { return fents_; }

    /// Every entry lies in Alt (or is a zero marker).
    bool alternating() const;
    /// Some entry lies in Sym \ Alt.
    bool contains_direct_candidate() const;
    /// Any zero (radical) entry present.
    bool degenerate() const;

    Quaternion value_at(std::span<const Quaternion> x) const;
    FieldElem value_at_f(std::span<const FieldElem> x) const;

    bool operator==(const HermForm& o) const;

private:
    Field field_;
    std::optional<QuatBase> base_;
    std::vector<Quaternion> qents_;
    std::vector<FieldElem> fents_;
};

/// Generalised quadratic form over (Q,theta): diagonal entries (each outside
/// Alt) or an upper-triangular Gram matrix of quaternions.
class QuadFormQ {
public:
    static QuadFormQ diagonal(QuatBase base, std::vector<Quaternion> entries);
    /// Row-major n x n Gram; canonicalised to upper-triangular (same form).
    static QuadFormQ gram(QuatBase base, std::vector<Quaternion> entries, size_t n);

    const QuatBase& base() const { return base_; }
    bool is_diagonal() const { return diagonal_; }
    size_t dim() const { return n_; }
    const std::vector<Quaternion>& diag() const;
    const std::vector<Quaternion>& gram_entries() const;
    const Quaternion& gram_at(size_t i, size_t j) const;

    /// Type (n, m): counts of nonsingular and totally singular diagonal
    /// slots (diagonal representation only).
    std::pair<size_t, size_t> type() const;

    Quaternion value_at(std::span<const Quaternion> x) const;
    /// Polar Gram N = M + M^* (Gram representation).
    std::vector<Quaternion> polar_matrix() const;

    bool operator==(const QuadFormQ& o) const;

private:
    QuatBase base_;
    bool diagonal_ = true;
    std::vector<Quaternion> ents_;
    size_t n_ = 0;

    QuadFormQ(QuatBase b, bool diag, std::vector<Quaternion> e, size_t n)
        : base_(std::move(b)), diagonal_(diag), ents_(std::move(e)), n_(n) {}
};

/// Quadratic form over F in block shape: nonsingular blocks [b,c] with
/// q(x,y) = b x^2 + xy + c y^2, plus a totally singular diagonal <d_1,...>.
struct QuadFormF {
    Field field;
    std::vector<std::pair<FieldElem, FieldElem>> blocks;
    std::vector<FieldElem> diag;

    size_t dim() const { return 2 * blocks.size() + diag.size(); }
    bool nonsingular() const { return diag.empty(); }
    bool totally_singular() const { return blocks.empty(); }

    FieldElem value_at(std::span<const FieldElem> x) const;
    bool operator==(const QuadFormF& o) const;
};

QuadFormF make_quadform_f(const Field& f, std::vector<std::pair<FieldElem, FieldElem>> blocks,
                          std::vector<FieldElem> diag);

// --- operations --------------------------------------------------------------

/// Polar form of a diagonal quadratic form: <b_i + theta(b_i)>^h with zero
/// entries retained; alternating (or degenerate-alternating) by construction.
HermForm polar_form(const QuadFormQ& rho);

struct TypeDecomposition {
    std::vector<Quaternion> nonsingular;
    std::vector<Quaternion> totally_singular;
    std::pair<size_t, size_t> type;
};
TypeDecomposition type_decompose(const QuadFormQ& rho);

HermForm herm_sum(const HermForm& a, const HermForm& b);
QuadFormQ quad_sum(const QuadFormQ& a, const QuadFormQ& b);
QuadFormF quadf_sum(const QuadFormF& a, const QuadFormF& b);

HermForm herm_scale(const HermForm& a, const FieldElem& lambda);
QuadFormQ quad_scale(const QuadFormQ& a, const FieldElem& lambda);
QuadFormF quadf_scale(const QuadFormF& a, const FieldElem& lambda);

/// Transport a form over (Q,theta1) to (Q,theta2 = Int(u')theta1): entries
/// become u'*e with u' = u2*u1^(-1); isotropy and singularity classes are
/// preserved slotwise.
QuadFormQ quad_transport(const QuadFormQ& a, const Involution& target);
HermForm herm_transport(const HermForm& a, const Involution& target);

/// Tensor product of a diagonal bilinear form over F with a diagonal
/// hermitian form; entries c_i * a_j in lexicographic (i, j) order.
HermForm tensor_bilinear(const HermForm& phi, const HermForm& psi);

struct AssociatedTotallySingular {
    std::vector<Quaternion> entries;      // entries in Sym \ Alt
    std::optional<size_t> isotropic_at;   // index of an Alt entry, if any
};
AssociatedTotallySingular associated_totally_singular(const HermForm& phi);

struct ProbeExhaustedError : std::runtime_error {
    std::vector<Quaternion> witness; // original-coordinate isotropy witness, if identified
    std::vector<std::string> probe_log;
    ProbeExhaustedError(const std::string& what, std::vector<Quaternion> w,
                        std::vector<std::string> log)
        : std::runtime_error(what), witness(std::move(w)), probe_log(std::move(log)) {}
};

/// Diagonalise a Gram form: equal dimension, type, Arf class on the
/// nonsingular part, and isotropy verdict. Probe schedule: basis vectors,
/// pairwise sums, then e_r + e_s*w over the multiplier set {i, j, k, 1+i}.
/// Requires a division base algebra. Throws ProbeExhaustedError when no
/// probed vector has a value outside Alt (carrying the isotropy witness).
QuadFormQ diagonalize_gram(const QuadFormQ& rho);

/// 4n-dimensional F-form of an alternating hermitian form over (Q,gamma):
/// per entry c, the blocks c[1,a] + cb[1,a] (the scaled norm form), since
/// h(x,x) = gamma(x) c x = c Nrd(x).
QuadFormF trace_form_F(const HermForm& phi);

/// Coordinate image of a quaternion in the trace form of <c>^h: the y-slots
/// absorb the block normalisation ([cb', a/(cb')] middle coefficient 1).
std::vector<FieldElem> trace_form_coords(const Quaternion& x, const FieldElem& c);

/// Norm form of [a,b): [1,a] + b[1,a] in block shape.
QuadFormF norm_form(const QAlg& A);
/// <<b_1,...,b_m>> as a 2^m-entry diagonal bilinear form.
HermForm pfister_bilinear(const Field& f, const std::vector<FieldElem>& bs);
/// <<b_1,...,b_{m-1}, c]] in block shape.
QuadFormF pfister_quadratic(const Field& f, const std::vector<FieldElem>& bs, const FieldElem& c);

} // namespace c2f
