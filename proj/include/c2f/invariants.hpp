#pragma once

#include "c2f/forms.hpp"
#include "c2f/wp.hpp"

namespace c2f {

/// Arf invariant: a class in F/wp(F) attached to a nonsingular quadratic
/// form; equal ArfValue iff equal WpClass (the rest is metadata).
struct ArfValue {
    WpClass cls;
    size_t source_dim = 0;
    /// Transport unit applied to reach the canonical involution, when the
    /// input form lived over a twisted involution.
    std::optional<Quaternion> transport;

    bool operator==(const ArfValue& o) const { return cls == o.cls; }
    bool operator!=(const ArfValue& o) const { return !(*this == o); }
};

/// Arf of a nonsingular diagonal form over (Q,gamma).
///
/// Computed from the matrix definition specialised to diagonal Grams:
/// sum Nrd(a_i)/Trd(a_i)^2 mod wp(F) (the two integer terms cancel). This is
/// the scaling- and isometry-invariant reading; it agrees with the plain
/// sum of reduced norms whenever every entry has reduced trace 1.
ArfValue arf_diagonal(const QuadFormQ& rho);

/// Arf from a Gram representation: wp-class of Srd(N^-1 M) + n(n-1)/2 with
/// N = M + M^*, the integer term read modulo 2 in the prime field.
ArfValue arf_gram(const QuadFormQ& rho);

/// Arf of a form over any (Q,theta): u-transport to gamma, then the diagonal
/// or Gram formula; records the transport unit.
ArfValue arf_of(const QuadFormQ& rho);

/// Classical Arf of a nonsingular block form over F: wp-class of sum b_i c_i.
ArfValue arf_F(const QuadFormF& rho);

} // namespace c2f
