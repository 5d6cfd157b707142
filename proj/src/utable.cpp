#include "c2f/isotropy.hpp"
#include "c2f/random_forms.hpp"
#include "c2f/serialize.hpp"

namespace c2f {

int UTable::value_of(const std::string& key) const {
    for (auto& e : entries)
        if (e.key == key) return e.value;
    throw std::invalid_argument("UTable: no entry " + key);
}

UTable u_table(const Field& f, const QAlg& A, const EngineOptions& opts) {
    if (f->kind != FieldKind::Local)
        throw std::domain_error("u_table: GF(2^k)((t)) descriptor required");
    {
        DivisionCheck dc = is_division(A, 0);
        if (dc.status != DivisionStatus::Division)
            throw std::domain_error("u_table: the quaternion algebra must be division");
    }
    UTable t;
    t.field = f;
    t.algebra = A;

    FieldElem one = FieldElem::one(f);
    FieldElem tt = FieldElem::t(f);
    QuatBase base = canonical_base(A);
    Quaternion qi = Quaternion::basis(A, 1);
    Quaternion qj = Quaternion::basis(A, 2);
    Quaternion qk = Quaternion::basis(A, 3);

    auto add = [&](std::string key, std::string display, int value, std::string witness_text,
                   bool verified) {
        t.entries.push_back(
            UTableEntry{std::move(key), std::move(display), value, std::move(witness_text), verified});
    };

    // u+(F) = u_d+(F) = [F:F^2] = 2: <1, t> is anisotropic (1, t independent over F^2).
    HermForm bil = HermForm::bilinear(f, {one, tt});
    bool bil_aniso = iso_bilinear(bil, opts).status == IsoStatus::Anisotropic;
    add("u_plus_F", "u+(F)", 2, to_text(bil), bil_aniso);
    add("u_d_plus_F", "u_d+(F)", 2, to_text(bil), bil_aniso);

    // u-(F) = 0: Alt(F,id) = {0}, every alternating bilinear form over F is isotropic.
    add("u_minus_F", "u-(F)", 0, "", true);

    // u~(F) = 4: the norm form of the division algebra.
    QuadFormF nf = norm_form(A);
    bool nf_aniso = iso_F_nonsingular(nf, opts).status == IsoStatus::Anisotropic;
    add("u_tilde_F", "u~(F)", 4, to_text(nf), nf_aniso);
    // u(F) >= 4 with the same witness (and u(F) = 4 when [F:F^2] = 2).
    add("u_F_lower", "u(F)-lower", 4, to_text(nf), nf_aniso);

    // u-(Q) = 1: <1>^h is alternating and anisotropic.
    HermForm alt1 = HermForm::over_quat(base, {Quaternion::one(A)});
    bool alt1_aniso = iso_hermitian(alt1, opts).status == IsoStatus::Anisotropic;
    add("u_minus_Q", "u-(Q)", 1, to_text(alt1), alt1_aniso);

    // u_d+(Q) = 1: <j>^h is direct.
    HermForm dir1 = HermForm::over_quat(base, {qj});
    bool dir1_direct = directness(dir1, opts).direct;
    add("u_d_plus_Q", "u_d+(Q)", 1, to_text(dir1), dir1_direct);

    // u+(Q) = 2: <1, j>^h is anisotropic (direct + alternating).
    HermForm h2 = HermForm::over_quat(base, {Quaternion::one(A), qj});
    bool h2_aniso = iso_hermitian(h2, opts).status == IsoStatus::Anisotropic;
    add("u_plus_Q", "u+(Q)", 2, to_text(h2), h2_aniso);

    // u~(Q) = u(Q) = 3: the trivial-Arf 3-dimensional form
    // <i+k, i+(a/b)j, i+(a/b)j+k>.
    FieldElem ab = A->a / A->b;
    Quaternion e1 = qi + qk;
    Quaternion e2 = qi + qj * ab;
    Quaternion e3 = qi + qj * ab + qk;
    QuadFormQ rho3 = QuadFormQ::diagonal(base, {e1, e2, e3});
    bool rho3_aniso = iso_Q_nonsingular(rho3, opts).status == IsoStatus::Anisotropic;
    add("u_tilde_Q", "u~(Q)", 3, to_text(rho3), rho3_aniso);
    add("u_Q", "u(Q)", 3, to_text(rho3), rho3_aniso);

    return t;
}

bool u_table_identities_hold(const UTable& t) {
    bool ok = true;
    ok = ok && t.value_of("u_plus_F") == t.value_of("u_d_plus_F") + t.value_of("u_minus_F");
    ok = ok && t.value_of("u_plus_Q") == t.value_of("u_d_plus_Q") + t.value_of("u_minus_Q");
    ok = ok && t.value_of("u_Q") <= t.value_of("u_plus_Q") + t.value_of("u_d_plus_Q");
    ok = ok && t.value_of("u_F_lower") <= t.value_of("u_plus_F") + t.value_of("u_d_plus_F");
    ok = ok && t.value_of("u_minus_Q") <= t.value_of("u_tilde_Q");
    return ok;
}

int u_table_sample_higher(const Field& f, const QAlg& A, const std::string& key, int count,
                          std::uint64_t seed, const EngineOptions& opts) {
    FormGen gen(f, seed);
    QuatBase base = canonical_base(A);
    int isotropic = 0;
    for (int s = 0; s < count; ++s) {
        IsoStatus status;
        if (key == "u_plus_F" || key == "u_d_plus_F") {
            // 3-dimensional bilinear forms
            HermForm phi = HermForm::bilinear(f, gen.f_diag(3));
            status = iso_bilinear(phi, opts).status;
        } else if (key == "u_minus_F") {
            // the only 1-dimensional alternating form over F is the zero form
            HermForm phi = HermForm::bilinear(f, {FieldElem::zero(f)}, true);
            status = iso_bilinear(phi, opts).status;
        } else if (key == "u_tilde_F" || key == "u_F_lower") {
            // one block beyond dimension 4
            QuadFormF rho = gen.f_blocks(3);
            status = iso_F_nonsingular(rho, opts).status;
        } else if (key == "u_minus_Q") {
            // 2-dimensional alternating hermitian forms
            std::vector<Quaternion> ents{Quaternion::scalar(A, gen.nonzero_elem()),
                                         Quaternion::scalar(A, gen.nonzero_elem())};
            status = iso_hermitian(HermForm::over_quat(base, std::move(ents)), opts).status;
        } else if (key == "u_d_plus_Q") {
            // 2-dimensional totally singular quadratic forms (directness ceiling)
            QuadFormQ rho = gen.totally_singular_diagonal(A, 2);
            status = iso_Q_totally_singular(rho, opts).status;
        } else if (key == "u_plus_Q") {
            // 3-dimensional hermitian forms with symmetric entries
            std::vector<Quaternion> ents;
            for (int i = 0; i < 3; ++i) {
                if (gen.rng()() & 1)
                    ents.push_back(Quaternion::scalar(A, gen.nonzero_elem()));
                else
                    ents.push_back(gen.sym_not_alt_entry(A));
            }
            status = iso_hermitian(HermForm::over_quat(base, std::move(ents)), opts).status;
        } else if (key == "u_tilde_Q") {
            // 4-dimensional nonsingular forms
            status = iso_Q_nonsingular(gen.nonsingular_diagonal(A, 4), opts).status;
        } else if (key == "u_Q") {
            // 4-dimensional forms of random type
            std::vector<Quaternion> ents;
            size_t ns = gen.rng()() % 5;
            for (size_t i = 0; i < 4; ++i)
                ents.push_back(i < ns ? gen.nonsingular_entry(A) : gen.sym_not_alt_entry(A));
            status = iso_quad_q(QuadFormQ::diagonal(base, std::move(ents)), opts).status;
        } else {
            throw std::invalid_argument("u_table_sample_higher: unknown key " + key);
        }
        if (status == IsoStatus::Isotropic) ++isotropic;
    }
    return isotropic;
}

} // namespace c2f
