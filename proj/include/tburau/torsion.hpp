#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tburau/braid.hpp"
#include "tburau/burau.hpp"
#include "tburau/laurent.hpp"
#include "tburau/matrix.hpp"
#include "tburau/representation.hpp"

namespace tburau {

// A twisted torsion value: the raw unreduced fraction, plus the exact
// quotient and its unit-normalized display form when the denominator
// divides the numerator. The zero torsion (non-acyclic case) is flagged.
struct TorsionResult {
  RationalFunction value;
  std::optional<LaurentPoly> exact_quotient;
  std::optional<LaurentPoly> normalized;
  bool zero = false;
  std::string route;  // "wada" or "burau"
  std::vector<LaurentPoly> unit_group;  // determinant generators beyond +-monomials
  std::vector<std::string> notes;
};

// Fox matrix of the closure presentation <x_1..x_n | x_i = x_i beta>: block
// (i, j) is (rho (x) psi_c)(d((x_i beta) - x_i)/dx_j), computed through the
// group ring and checked internally against burau_unreduced(beta) - I.
// Requires a color-preserving braid.
RingMatrix closure_fox_matrix(const Representation& rho, const ColoredBraidWord& braid);

// Wada invariant of the closure: delete block row `drop_relator` and block
// column `drop_column` from the closure Fox matrix, then
//   det(submatrix) / det((rho (x) psi_c)(x_j - 1)).
// Requires rho to extend to the closure (NonExtendableError otherwise).
TorsionResult wada_invariant(const Representation& rho, const ColoredBraidWord& braid,
                             int drop_relator, int drop_column);

// Torsion via the reduced twisted Burau matrix:
//   det(reduced(beta) - I) / det(rho(x_1..x_n) t_{c_1}..t_{c_n} - I).
TorsionResult torsion_from_burau(const Representation& rho, const ColoredBraidWord& braid);

struct VerificationReport {
  bool colors_preserved = true;
  bool applicable = false;              // rho extends and the braid is color preserving
  std::vector<int> failing_generators;  // generators where the extension check failed
  bool pass = false;
  RationalFunction lhs;  // wada * theorem denominator (as an unreduced fraction)
  RationalFunction rhs;  // det(reduced - I)
  LaurentPoly theorem_denominator;
  std::optional<UnitWitness> witness;
  std::vector<LaurentPoly> unit_group;
  TorsionResult wada;
  TorsionResult burau;
  std::vector<std::string> notes;
  double wada_seconds = 0.0;
  double burau_seconds = 0.0;

  std::string verdict() const {
    if (!applicable) return "not applicable";
    return pass ? "pass" : "mismatch";
  }
};

// Computes both torsion routes and decides whether
//   wada * det(rho(x_1..x_n) t_{c_1}..t_{c_n} - I) == det(reduced - I)
// up to sign, registry monomials and the group generated by det rho(x_i).
VerificationReport verify_main_theorem(const Representation& rho, const ColoredBraidWord& braid,
                                       int drop_relator = -1, int drop_column = -1);

// Untwisted Alexander polynomial of the closure via the trivial
// one-dimensional representation. For one color the torsion is multiplied
// by (t - 1) to present the Alexander polynomial; for two or more colors the
// torsion itself is the multivariable Alexander polynomial.
TorsionResult alexander_untwisted(const ColoredBraidWord& braid);

}  // namespace tburau
