#include "c2f/quaternion.hpp"
#include "c2f/isotropy.hpp"

namespace c2f {

namespace {

std::array<FieldElem, 4> coords4(const Field& f, int i0, int i1, int i2, int i3,
                                 const FieldElem& a, const FieldElem& b, const FieldElem& ab) {
    auto pick = [&](int sel) -> FieldElem {
        switch (sel) {
            case 0: return FieldElem::zero(f);
            case 1: return FieldElem::one(f);
            case 2: return a;
            case 3: return b;
            default: return ab;
        }
    };
    return {pick(i0), pick(i1), pick(i2), pick(i3)};
}

} // namespace

QAlg make_quaternion_algebra(const Field& f, FieldElem a, FieldElem b) {
    if (!same_field(a.field(), f) || !same_field(b.field(), f))
        throw std::invalid_argument("quaternion algebra: parameter field mismatch");
    if (b.is_zero()) throw std::invalid_argument("quaternion algebra: b must be nonzero");
    auto A = std::make_shared<QuaternionAlgebra>();
    A->field = f;
    A->a = a;
    A->b = b;
    FieldElem ab = a * b;
    // rows: left factor e_m, cols: right factor e_n
    // selectors: 0 -> 0, 1 -> 1, 2 -> a, 3 -> b, 4 -> ab
    A->table[0][0] = coords4(f, 1, 0, 0, 0, a, b, ab);
    A->table[0][1] = coords4(f, 0, 1, 0, 0, a, b, ab);
    A->table[0][2] = coords4(f, 0, 0, 1, 0, a, b, ab);
    A->table[0][3] = coords4(f, 0, 0, 0, 1, a, b, ab);
    A->table[1][0] = coords4(f, 0, 1, 0, 0, a, b, ab);
    A->table[1][1] = coords4(f, 2, 1, 0, 0, a, b, ab); // i^2 = a + i
    A->table[1][2] = coords4(f, 0, 0, 0, 1, a, b, ab); // ij = k
    A->table[1][3] = coords4(f, 0, 0, 2, 1, a, b, ab); // ik = aj + k
    A->table[2][0] = coords4(f, 0, 0, 1, 0, a, b, ab);
    A->table[2][1] = coords4(f, 0, 0, 1, 1, a, b, ab); // ji = j + k
    A->table[2][2] = coords4(f, 3, 0, 0, 0, a, b, ab); // j^2 = b
    A->table[2][3] = coords4(f, 3, 3, 0, 0, a, b, ab); // jk = b + bi
    A->table[3][0] = coords4(f, 0, 0, 0, 1, a, b, ab);
    A->table[3][1] = coords4(f, 0, 0, 2, 0, a, b, ab); // ki = aj
    A->table[3][2] = coords4(f, 0, 3, 0, 0, a, b, ab); // kj = bi
    A->table[3][3] = coords4(f, 4, 0, 0, 0, a, b, ab); // k^2 = ab
    return A;
}

Quaternion Quaternion::zero(const QAlg& A) {
    FieldElem z = FieldElem::zero(A->field);
    return Quaternion(A, {z, z, z, z});
}
Quaternion Quaternion::one(const QAlg& A) {
    return scalar(A, FieldElem::one(A->field));
}
Quaternion Quaternion::scalar(const QAlg& A, FieldElem s) {
    FieldElem z = FieldElem::zero(A->field);
    return Quaternion(A, {std::move(s), z, z, z});
}
Quaternion Quaternion::basis(const QAlg& A, int m) {
    FieldElem z = FieldElem::zero(A->field);
    std::array<FieldElem, 4> c{z, z, z, z};
    c[size_t(m)] = FieldElem::one(A->field);
    return Quaternion(A, std::move(c));
}

bool Quaternion::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Quaternion::is_scalar() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
    if (!alg_->same(*o.alg_)) throw std::invalid_argument("quaternion: algebra mismatch");
    return Quaternion(alg_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    if (!alg_->same(*o.alg_)) throw std::invalid_argument("quaternion: algebra mismatch");
    const Field& f = alg_->field;
    std::array<FieldElem, 4> r{FieldElem::zero(f), FieldElem::zero(f), FieldElem::zero(f),
                               FieldElem::zero(f)};
    for (int m = 0; m < 4; ++m) {
        if (c_[size_t(m)].is_zero()) continue;
        for (int n = 0; n < 4; ++n) {
            if (o.c_[size_t(n)].is_zero()) continue;
            FieldElem prod = c_[size_t(m)] * o.c_[size_t(n)];
            const auto& basis = alg_->table[size_t(m)][size_t(n)];
            for (int d = 0; d < 4; ++d)
                if (!basis[size_t(d)].is_zero()) r[size_t(d)] += prod * basis[size_t(d)];
        }
    }
    return Quaternion(alg_, std::move(r));
}

Quaternion Quaternion::operator*(const FieldElem& s) const {
    return Quaternion(alg_, {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s});
}

Quaternion Quaternion::inv() const {
    FieldElem n = nrd(*this);
    if (n.is_zero())
        throw std::domain_error("quaternion inverse: reduced norm is zero (zero divisor)");
    FieldElem ni = n.inv();
    Quaternion g = gamma(*this);
    return g * ni;
}

bool Quaternion::operator==(const Quaternion& o) const {
    if (!alg_->same(*o.alg_)) throw std::invalid_argument("quaternion: algebra mismatch");
    return c_ == o.c_;
}

FieldElem trd(const Quaternion& x) { return x[1]; }

FieldElem nrd(const Quaternion& x) {
    const FieldElem& a = x.algebra()->a;
    const FieldElem& b = x.algebra()->b;
    // x0^2 + x0 x1 + a x1^2 + b (x2^2 + x2 x3 + a x3^2)
    FieldElem left = x[0] * x[0] + x[0] * x[1] + a * x[1] * x[1];
    FieldElem right = x[2] * x[2] + x[2] * x[3] + a * x[3] * x[3];
    return left + b * right;
}

Quaternion gamma(const Quaternion& x) {
    return Quaternion(x.algebra(), {x[0] + x[1], x[1], x[2], x[3]});
}

Involution make_involution(const QAlg& A, Quaternion u) {
    if (!A->same(*u.algebra())) throw std::invalid_argument("involution: algebra mismatch");
    if (u.is_zero()) throw std::invalid_argument("involution: u must be nonzero");
    if (gamma(u) != u)
        throw std::invalid_argument("involution: u must satisfy gamma(u) = u");
    bool sympl = u.is_scalar();
    return Involution{A, std::move(u), sympl};
}

Involution canonical_involution_desc(const QAlg& A) {
    return make_involution(A, Quaternion::one(A));
}

Quaternion apply(const Involution& th, const Quaternion& x) {
    if (th.symplectic) return gamma(x);
    return th.u * gamma(x) * th.u.inv();
}

SymAltClass classify_sym_alt(const Involution& th, const Quaternion& x) {
    // Sym(Q,theta) = u*Sym(Q,gamma), Alt(Q,theta) = u*F.
    Quaternion m = th.symplectic ? x : th.u.inv() * x;
    if (m.is_scalar()) return SymAltClass::Alt;
    if (m[1].is_zero()) return SymAltClass::SymNotAlt;
    return SymAltClass::Neither;
}

SquareClass det_involution(const Involution& th) {
    if (th.symplectic)
        throw std::domain_error("det_involution: defined for orthogonal involutions only");
    return square_class(nrd(th.u));
}

// --- split embedding ---------------------------------------------------------

namespace {

LElem l_zero(const Field& f) { return {FieldElem::zero(f), FieldElem::zero(f)}; }
LElem l_scalar(const FieldElem& s) { return {s, FieldElem::zero(s.field())}; }

LElem l_add(const LElem& x, const LElem& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }

LElem l_mul(const FieldElem& a, const LElem& x, const LElem& y) {
    // (x0 + x1 iota)(y0 + y1 iota), iota^2 = iota + a
    FieldElem cross = x.c1 * y.c1;
    return {x.c0 * y.c0 + a * cross, x.c0 * y.c1 + x.c1 * y.c0 + cross};
}

// Division-free Berkowitz characteristic polynomial over the commutative
// ring L; returns coefficients [1, c1, ..., cN] of X^N + c1 X^(N-1) + ...
// (char 2: signs vanish).
std::vector<LElem> berkowitz(const FieldElem& a, const std::vector<LElem>& M, size_t N) {
    const Field& f = a.field();
    auto at = [&](size_t i, size_t j) -> const LElem& { return M[i * N + j]; };
    std::vector<LElem> poly{l_scalar(FieldElem::one(f))};
    // iterate principal submatrices from the bottom-right corner up
    for (size_t idx = N; idx-- > 0;) {
        size_t sub = N - idx; // size of the submatrix being absorbed
        // Toeplitz column: [1, a_ii, R C, R M' C, R M'^2 C, ...]
        std::vector<LElem> col;
        col.reserve(sub + 1);
        col.push_back(l_scalar(FieldElem::one(f)));
        col.push_back(at(idx, idx));
        if (sub >= 2) {
            size_t m = sub - 1; // size of M' (rows/cols idx+1..N-1)
            std::vector<LElem> v(m);
            for (size_t i = 0; i < m; ++i) v[i] = at(idx + 1 + i, idx); // C
            for (size_t step = 0; step + 2 <= sub; ++step) {
                // R . v
                LElem acc = l_zero(f);
                for (size_t i = 0; i < m; ++i)
                    acc = l_add(acc, l_mul(a, at(idx, idx + 1 + i), v[i]));
                col.push_back(acc);
                if (step + 3 <= sub) {
                    std::vector<LElem> w(m, l_zero(f));
                    for (size_t i = 0; i < m; ++i)
                        for (size_t j = 0; j < m; ++j)
                            w[i] = l_add(w[i], l_mul(a, at(idx + 1 + i, idx + 1 + j), v[j]));
                    v = std::move(w);
                }
            }
        }
        // poly <- Toeplitz(col) * poly
        std::vector<LElem> next(poly.size() + 1, l_zero(f));
        for (size_t r = 0; r < next.size(); ++r)
            for (size_t c = 0; c < poly.size(); ++c) {
                if (r < c || r - c >= col.size()) continue;
                next[r] = l_add(next[r], l_mul(a, col[r - c], poly[c]));
            }
        poly = std::move(next);
    }
    return poly;
}

} // namespace

std::array<LElem, 4> split_embedding(const Quaternion& x) {
    const FieldElem& b = x.algebra()->b;
    // i -> diag(iota, iota+1), j -> [[0, b], [1, 0]], k = ij -> [[0, iota b], [iota+1, 0]]
    // x = x0 + x1 i + x2 j + x3 k
    LElem m00{x[0], x[1]};
    LElem m11{x[0] + x[1], x[1]};
    LElem m01{x[2] * b, x[3] * b};
    LElem m10{x[2] + x[3], x[3]};
    return {m00, m01, m10, m11};
}

FieldElem matrix_srd(const QAlg& A, const std::vector<Quaternion>& M, size_t n) {
    if (M.size() != n * n) throw std::invalid_argument("matrix_srd: bad dimensions");
    const Field& f = A->field;
    size_t N = 2 * n;
    std::vector<LElem> big(N * N, l_zero(f));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            auto blk = split_embedding(M[r * n + c]);
            big[(2 * r) * N + 2 * c] = blk[0];
            big[(2 * r) * N + 2 * c + 1] = blk[1];
            big[(2 * r + 1) * N + 2 * c] = blk[2];
            big[(2 * r + 1) * N + 2 * c + 1] = blk[3];
        }
    std::vector<LElem> chi = berkowitz(A->a, big, N);
    if (chi.size() != N + 1) throw std::logic_error("matrix_srd: char poly degree");
    for (const LElem& coef : chi)
        if (!coef.c1.is_zero())
            throw std::logic_error("matrix_srd: descent to F failed (implementation bug)");
    return chi[2].c0; // coefficient of X^(N-2)
}

std::vector<Quaternion> quat_matrix_mul(const QAlg& A, const std::vector<Quaternion>& X,
                                        const std::vector<Quaternion>& Y, size_t n) {
    std::vector<Quaternion> R(n * n, Quaternion::zero(A));
    for (size_t i = 0; i < n; ++i)
        for (size_t kk = 0; kk < n; ++kk) {
            if (X[i * n + kk].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                R[i * n + j] = R[i * n + j] + X[i * n + kk] * Y[kk * n + j];
        }
    return R;
}

std::vector<Quaternion> quat_matrix_inverse(const QAlg& A, std::vector<Quaternion> M, size_t n) {
    std::vector<Quaternion> I(n * n, Quaternion::zero(A));
    for (size_t i = 0; i < n; ++i) I[i * n + i] = Quaternion::one(A);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r) {
            if (!M[r * n + col].is_zero() && !nrd(M[r * n + col]).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == n) throw std::domain_error("quat_matrix_inverse: singular matrix");
        if (piv != col)
            for (size_t c = 0; c < n; ++c) {
                std::swap(M[piv * n + c], M[col * n + c]);
                std::swap(I[piv * n + c], I[col * n + c]);
            }
        Quaternion pinv = M[col * n + col].inv();
        for (size_t c = 0; c < n; ++c) {
            M[col * n + c] = pinv * M[col * n + c];
            I[col * n + c] = pinv * I[col * n + c];
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r * n + col].is_zero()) continue;
            Quaternion factor = M[r * n + col];
            for (size_t c = 0; c < n; ++c) {
                M[r * n + c] = M[r * n + c] + factor * M[col * n + c];
                I[r * n + c] = I[r * n + c] + factor * I[col * n + c];
            }
        }
    }
    return I;
}

int hilbert_symbol(const FieldElem& a, const FieldElem& b) {
    const Field& f = a.field();
    if (f->kind != FieldKind::Local)
        throw std::domain_error("hilbert_symbol: defined over GF(2^k)((t)) only; use the search oracle");
    if (b.is_zero()) throw std::domain_error("hilbert_symbol: b must be nonzero");
    return abs_trace(f->coeffs, residue_dlog(a, b));
}

DivisionCheck is_division(const QAlg& A, int search_bound) {
    DivisionCheck r;
    r.search_bound = search_bound;
    const Field& f = A->field;
    if (f->kind == FieldKind::Local) {
        r.symbol = hilbert_symbol(A->a, A->b);
        r.status = (*r.symbol == 1) ? DivisionStatus::Division : DivisionStatus::Split;
        if (r.status == DivisionStatus::Split) {
            auto w = search_norm_form_zero(A, search_bound);
            if (w) r.norm_zero = *w;
        }
        return r;
    }
    auto w = search_norm_form_zero(A, search_bound);
    if (w) {
        r.status = DivisionStatus::Split;
        r.norm_zero = *w;
    } else {
        r.status = DivisionStatus::Undecided;
    }
    return r;
}

} // namespace c2f
