#pragma once

#include "c2f/invariants.hpp"

namespace c2f {

enum class IsoStatus { Isotropic, Anisotropic, Undecided };

/// Isotropy witness: exact coordinates, or precision-tagged when derived
/// from a truncated wp-preimage.
struct Witness {
    std::vector<FieldElem> fcoords;
    std::vector<Quaternion> qcoords;
    int precision = -1; // -1: exact

    bool is_quat() const { return !qcoords.empty(); }
    bool exact() const { return precision < 0; }
};

/// Tagged reason backing a verdict. Anisotropic verdicts are always
/// theorem-backed; SearchExhausted alone never concludes anisotropy.
struct Certificate {
    enum class Tag {
        DimBound,
        ArfRule,
        SymbolRule,
        F2Rank,
        NormFormRule,
        DirectSum,
        SearchWitness,
        SearchExhausted,
    };
    Tag tag = Tag::DimBound;
    std::string theorem; // neutral name of the backing fact
    std::string note;
    std::optional<ArfValue> arf;       // ArfRule
    std::optional<int> bit;            // SymbolRule
    std::vector<FieldElem> kernel;     // F2Rank
    int bound = 0;                     // SearchExhausted / SearchWitness
    std::vector<Certificate> parts;    // DirectSum

    static Certificate dim_bound(std::string thm, std::string note = {});
    static Certificate arf_rule(std::string thm, ArfValue v, std::string note = {});
    static Certificate symbol_rule(int bit, std::string note = {});
    static Certificate f2_rank(std::vector<FieldElem> kernel, std::string note = {});
    static Certificate norm_form_rule(std::string note);
    static Certificate direct_sum(std::vector<Certificate> parts, std::string thm);
    static Certificate search_witness(int bound);
    static Certificate search_exhausted(int bound);
};

struct IsotropyVerdict {
    IsoStatus status = IsoStatus::Undecided;
    std::optional<Witness> witness;
    Certificate cert;

    static IsotropyVerdict isotropic(Certificate c, std::optional<Witness> w = std::nullopt);
    static IsotropyVerdict anisotropic(Certificate c);
    static IsotropyVerdict undecided(Certificate c);
};

struct EngineOptions {
    int search_bound = 6;   // default bounded-search budget
    int escalate_max = 8;   // cap for escalating witness hunts
    int witness_effort = 2; // budget for opportunistic witness attachment
    int precision = 64;     // precision for wp-derived witnesses
};

// --- search oracle -------------------------------------------------------------
//
// Deterministic enumeration, cost-then-lexicographic. Cost of an entry is
// deg(num) + deg(den). F-form searches draw denominators from {1, t, 1+t,
// t^2}; quaternion-coordinate searches use polynomial entries with the first
// nonzero quaternion coordinate normalised to 1 (witnesses are stable under
// right scaling). Returns the first verified witness in enumeration order.

std::optional<std::vector<FieldElem>> search_zero_f(const QuadFormF& rho, int bound);
std::optional<std::vector<FieldElem>> search_zero_bilinear(const HermForm& phi, int bound);
std::optional<std::vector<Quaternion>> search_zero_quad_q(const QuadFormQ& rho, int bound);
std::optional<std::vector<Quaternion>> search_zero_herm(const HermForm& phi, int bound);
std::optional<std::array<FieldElem, 4>> search_norm_form_zero(const QAlg& A, int bound);

// --- deciders -----------------------------------------------------------------

IsotropyVerdict iso_F_totally_singular(const QuadFormF& rho);
IsotropyVerdict iso_F_nonsingular(const QuadFormF& rho, const EngineOptions& opts = {});
/// Dispatcher for arbitrary F-forms (blocks + diagonal).
IsotropyVerdict iso_F(const QuadFormF& rho, const EngineOptions& opts = {});

IsotropyVerdict iso_Q_nonsingular(const QuadFormQ& rho, const EngineOptions& opts = {});
IsotropyVerdict iso_Q_totally_singular(const QuadFormQ& rho, const EngineOptions& opts = {});
/// Dispatcher for arbitrary quadratic forms over (Q,theta) (iso_mixed_Q).
IsotropyVerdict iso_quad_q(const QuadFormQ& rho, const EngineOptions& opts = {});

IsotropyVerdict iso_hermitian(const HermForm& phi, const EngineOptions& opts = {});
/// Symmetric bilinear forms over F (direct = anisotropic).
IsotropyVerdict iso_bilinear(const HermForm& phi, const EngineOptions& opts = {});

struct DirectnessReport {
    bool direct = false;
    IsotropyVerdict associated_verdict; // anisotropy of the associated ts form
};
DirectnessReport directness(const HermForm& phi, const EngineOptions& opts = {});

// --- witness verification -------------------------------------------------------

bool verify_witness(const QuadFormF& rho, const Witness& w);
bool verify_witness(const QuadFormQ& rho, const Witness& w);
bool verify_witness(const HermForm& phi, const Witness& w);

// --- u-invariant table -----------------------------------------------------------

struct UTableEntry {
    std::string key;         // e.g. "u_plus_F"
    std::string display;     // e.g. "u+(F)"
    int value = 0;
    std::string witness_text; // literal of the anisotropic witness form, if any
    bool witness_verified = false;
};

struct UTable {
    Field field;
    QAlg algebra;
    std::vector<UTableEntry> entries;

    int value_of(const std::string& key) const;
};

/// The table over a Kaplansky local field with division Q: {u+(F)=2,
/// u_d+(F)=2, u-(F)=0, u~(F)=4, u(F)>=4, u-(Q)=1, u_d+(Q)=1, u+(Q)=2,
/// u~(Q)=3, u(Q)=3}, each with a verified anisotropic witness.
UTable u_table(const Field& f, const QAlg& A, const EngineOptions& opts = {});

/// Structural identities: u+ = u_d+ + u- for both rows, u(Q) <= u+(Q) + u_d+(Q).
bool u_table_identities_hold(const UTable& t);

/// Verdict `count` seeded random forms one dimension above the invariant's
/// value; returns the number verdicted isotropic (should equal count).
int u_table_sample_higher(const Field& f, const QAlg& A, const std::string& key, int count,
                          std::uint64_t seed, const EngineOptions& opts = {});

} // namespace c2f
