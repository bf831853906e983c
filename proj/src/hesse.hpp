#pragma once

// Chord-tangent group law on the Hesse cubic
// abc(X^3+Y^3+Z^3) - (a^3+b^3+c^3)XYZ with origin O = [1:-1:0].

#include <string>
#include <vector>

#include "exactfield.hpp"
#include "skfamilies.hpp"

namespace skv::pointscheme {

using exactfield::FieldElem;
using skfamilies::AbcParams;

struct ProjPoint {
  std::vector<FieldElem> x;

  ProjPoint() = default;
  explicit ProjPoint(std::vector<FieldElem> coords) : x(std::move(coords)) {}

  bool is_zero() const;
  /// Scaled so the first nonzero coordinate is 1.
  ProjPoint normalized() const;
  std::vector<std::string> to_strings() const;

  /// Projective equality; zero vectors only equal each other.
  friend bool operator==(const ProjPoint& p, const ProjPoint& q);
  friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }
};

ProjPoint hesse_origin();
/// [a:b:c]
ProjPoint tau(const AbcParams& p);

FieldElem hesse_value(const AbcParams& p, const ProjPoint& P);
std::vector<FieldElem> hesse_gradient(const AbcParams& p, const ProjPoint& P);

/// The preconditions below throw Error(Precondition) on singular curves and
/// Error(OffCurve) for points with f(P) != 0.
ProjPoint hesse_neg(const AbcParams& p, const ProjPoint& P);
/// Third intersection of the tangent at P.
ProjPoint hesse_tangent_third(const AbcParams& p, const ProjPoint& P);
/// Third intersection of the line PQ; the tangent when P = Q.
ProjPoint hesse_third(const AbcParams& p, const ProjPoint& P, const ProjPoint& Q);
ProjPoint hesse_add(const AbcParams& p, const ProjPoint& P, const ProjPoint& Q);
ProjPoint hesse_multiple(const AbcParams& p, const ProjPoint& P, long k);

}  // namespace skv::pointscheme
