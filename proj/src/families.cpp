#include "tranent/families.hpp"

#include "tranent/error.hpp"

namespace tranent {

FamilyParams FamilyParams::make(const Rational& lambda) {
  if (lambda <= 3) {
    throw Error(ErrorCode::LambdaTooSmall, "lambda must exceed 3, got " + to_string(lambda));
  }
  const Rational& l = lambda;
  FamilyParams p{l,
                 Rational(1 / l),
                 Rational((l + 1) / (4 * l)),
                 Rational((l - 1) / (2 * l)),
                 Rational((l + 1) / (2 * l)),
                 Rational((3 * l - 1) / (4 * l)),
                 Rational((l - 1) / l)};
  const auto bp = p.breakpoints();
  Rational prev = 0;
  for (const auto& b : bp) {
    if (!(prev < b)) throw Error(ErrorCode::InvariantViolated, "breakpoints out of order at " + to_string(b));
    prev = b;
  }
  if (!(prev < 1)) throw Error(ErrorCode::InvariantViolated, "last breakpoint must lie below 1");
  return p;
}

std::vector<AffinePiece> phi_pieces(const FamilyParams& p) {
  const Rational& l = p.lambda;
  return {
      {Interval(0, p.p1), -l, Rational(1)},
      {Interval(p.p1, p.q1), Rational(-1), Rational(1 / l)},
      {Interval(p.q1, p.p2), Rational(1), Rational(-(l - 1) / (2 * l))},
      {Interval(p.p2, p.p3), l, Rational(-(l - 1) / 2)},
      {Interval(p.p3, p.q2), Rational(1), Rational((l - 1) / (2 * l))},
      {Interval(p.q2, p.p4), Rational(-1), Rational((2 * l - 1) / l)},
      {Interval(p.p4, Rational(1)), -l, l},
  };
}

std::vector<AffinePiece> psi_pieces(const FamilyParams& p) {
  const Rational& l = p.lambda;
  return {
      {Interval(0, p.q1), -l, Rational(1)},
      {Interval(p.q1, p.q2), l, Rational(-(l - 1) / 2)},
      {Interval(p.q2, Rational(1)), -l, l},
  };
}

PLMap assemble(const std::vector<AffinePiece>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::InvalidArgument, "no pieces to assemble");
  std::vector<Node> nodes;
  nodes.push_back({pieces.front().piece.lo, pieces.front().at(pieces.front().piece.lo)});
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& cur = pieces[i];
    const Rational right = cur.at(cur.piece.hi);
    if (i + 1 < pieces.size()) {
      const auto& next = pieces[i + 1];
      if (next.piece.lo != cur.piece.hi) {
        throw Error(ErrorCode::ContinuityViolated, "pieces do not abut at " + to_string(cur.piece.hi));
      }
      const Rational left = next.at(next.piece.lo);
      if (left != right) {
        throw Error(ErrorCode::ContinuityViolated, "jump at " + to_string(cur.piece.hi) + ": " + to_string(right) +
                                                       " vs " + to_string(left));
      }
    }
    nodes.push_back({cur.piece.hi, right});
  }
  return PLMap(std::move(nodes));
}

PLMap make_phi(const FamilyParams& p) { return assemble(phi_pieces(p)); }

PLMap make_psi(const FamilyParams& p) { return assemble(psi_pieces(p)); }

TiledLineMap make_F(const FamilyParams& p) { return MirrorTranslationTiled(make_phi(p)); }

TiledLineMap make_G(const FamilyParams& p) { return DyadicMirrorTiled(make_psi(p)); }

TiledLineMap make_H(const FamilyParams& p) { return HalfLineTiled{DyadicMirrorTiled(make_psi(p))}; }

DyadicCompactification make_fbar(const FamilyParams& p) { return compactify(MirrorTranslationTiled(make_phi(p))); }

}  // namespace tranent
