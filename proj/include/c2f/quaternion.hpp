#pragma once

#include "c2f/field.hpp"

#include <array>

namespace c2f {

/// The quaternion algebra [a,b)_F with basis (1, i, j, k) and relations
/// i^2 - i = a, j^2 = b, k = ij = j - ji. Derived: k^2 = ab, Trd(i) = 1,
/// Trd(j) = Trd(k) = 0.
struct QuaternionAlgebra {
    Field field;
    FieldElem a;
    FieldElem b;

    /// Coordinates of e_m * e_n in the basis (1, i, j, k); built once from
    /// the relations and unit-tested against associativity.
    std::array<std::array<std::array<FieldElem, 4>, 4>, 4> table;

    bool same(const QuaternionAlgebra& o) const {
        return same_field(field, o.field) && a == o.a && b == o.b;
    }
};

using QAlg = std::shared_ptr<const QuaternionAlgebra>;

QAlg make_quaternion_algebra(const Field& f, FieldElem a, FieldElem b);

class Quaternion {
public:
    Quaternion() = default;
    Quaternion(QAlg alg, std::array<FieldElem, 4> coords)
        : alg_(std::move(alg)), c_(std::move(coords)) {}

    static Quaternion zero(const QAlg& A);
    static Quaternion one(const QAlg& A);
    static Quaternion scalar(const QAlg& A, FieldElem s);
    static Quaternion basis(const QAlg& A, int m); // 0..3 -> 1, i, j, k

    const QAlg& algebra() const { return alg_; }
    const FieldElem& operator[](int i) const { return c_[size_t(i)]; }
    const std::array<FieldElem, 4>& coords() const { return c_; }

    bool is_zero() const;
    /// In F*1?
    bool is_scalar() const;

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator*(const FieldElem& s) const;
    /// gamma(x)/Nrd(x); requires Nrd(x) != 0.
    Quaternion inv() const;

    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

private:
    QAlg alg_;
    std::array<FieldElem, 4> c_;
};

/// Reduced trace: the X-coefficient of x^2 + Trd(x)x + Nrd(x) = 0; equals x1.
FieldElem trd(const Quaternion& x);
/// Reduced norm; closed form in the coordinates, cross-checked by gamma(x)x.
FieldElem nrd(const Quaternion& x);
/// Canonical (unique symplectic) involution x -> Trd(x) - x.
Quaternion gamma(const Quaternion& x);

/// Involution of the first kind theta = Int(u) o gamma, u in Sym(Q,gamma)\{0};
/// u = 1 encodes gamma itself. Symplectic iff u is scalar, else orthogonal.
/// Alt(Q,theta) = u*F and Sym(Q,theta) = u*Sym(Q,gamma).
struct Involution {
    QAlg alg;
    Quaternion u;
    bool symplectic;
};

Involution make_involution(const QAlg& A, Quaternion u);
Involution canonical_involution_desc(const QAlg& A);
Quaternion apply(const Involution& th, const Quaternion& x);

enum class SymAltClass { Alt, SymNotAlt, Neither };
SymAltClass classify_sym_alt(const Involution& th, const Quaternion& x);

/// Square class of Nrd(u) for orthogonal theta (u spans Alt(Q,theta) n Q^x
/// up to F^x). Throws for symplectic involutions.
SquareClass det_involution(const Involution& th);

// --- splitting embedding and Srd of matrices --------------------------------

/// Element of L = F[iota]/(iota^2 + iota + a): c0 + c1*iota.
struct LElem {
    FieldElem c0, c1;
};

/// 2x2 image of x over L under i -> diag(iota, iota+1), j -> [[0,b],[1,0]].
std::array<LElem, 4> split_embedding(const Quaternion& x);

/// Srd of an n x n quaternion matrix (row-major): the X^(2n-2) coefficient of
/// the characteristic polynomial of the 2n x 2n split image. Asserts descent
/// to F and throws logic_error otherwise.
FieldElem matrix_srd(const QAlg& A, const std::vector<Quaternion>& M, size_t n);

/// Inverse of an n x n quaternion matrix by row reduction over the division
/// ring; throws domain_error if singular.
std::vector<Quaternion> quat_matrix_inverse(const QAlg& A, std::vector<Quaternion> M, size_t n);

std::vector<Quaternion> quat_matrix_mul(const QAlg& A, const std::vector<Quaternion>& X,
                                        const std::vector<Quaternion>& Y, size_t n);

// --- division testing --------------------------------------------------------

/// Char-2 Hilbert symbol over GF(2^k)((t)): abs_trace(Res(a db/b)).
/// 1 certifies [a,b) is division, 0 certifies split.
int hilbert_symbol(const FieldElem& a, const FieldElem& b);

enum class DivisionStatus { Division, Split, Undecided };

struct DivisionCheck {
    DivisionStatus status = DivisionStatus::Undecided;
    std::optional<int> symbol;                          // local kind only
    std::optional<std::array<FieldElem, 4>> norm_zero;  // split witness, when found
    int search_bound = 0;
};

/// Local kind: decided exactly via the symbol. RatFunc kind: semi-decided by
/// a bounded search for a norm-form zero.
DivisionCheck is_division(const QAlg& A, int search_bound = 6);

} // namespace c2f
