#pragma once

#include <vector>

#include "tranent/interval.hpp"
#include "tranent/linemap.hpp"
#include "tranent/plmap.hpp"

namespace tranent {

/// Slope parameter of the families and the breakpoints it determines.
struct FamilyParams {
  Rational lambda;
  Rational p1, q1, p2, p3, q2, p4;

  /// Throws LambdaTooSmall unless lambda > 3.
  static FamilyParams make(const Rational& lambda);

  /// Interior breakpoints of phi in increasing order.
  std::vector<Rational> breakpoints() const { return {p1, q1, p2, p3, q2, p4}; }
};

/// Affine formula a*x + b on a closed piece.
struct AffinePiece {
  Interval piece;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
};

std::vector<AffinePiece> phi_pieces(const FamilyParams& p);
std::vector<AffinePiece> psi_pieces(const FamilyParams& p);

/// Glues consecutive affine pieces into a PLMap. Throws ContinuityViolated
/// when adjacent formulas disagree at a shared breakpoint or the pieces do not
/// abut.
PLMap assemble(const std::vector<AffinePiece>& pieces);

PLMap make_phi(const FamilyParams& p);
PLMap make_psi(const FamilyParams& p);
TiledLineMap make_F(const FamilyParams& p);
TiledLineMap make_G(const FamilyParams& p);
TiledLineMap make_H(const FamilyParams& p);
DyadicCompactification make_fbar(const FamilyParams& p);

}  // namespace tranent
