#pragma once

// The V4-equivariant map from the four-generator family onto the second
// Veronese of the cubic family, v_ij -> w_ij.

#include <string>
#include <utility>
#include <vector>

#include "freealg.hpp"
#include "skfamilies.hpp"

namespace skv::veronese {

using exactfield::FieldElem;
using freealg::NcPoly;
using skfamilies::AbcParams;
using skfamilies::AlphaTriple;
using skfamilies::SextupleParams;

/// w00 = x^2+y^2, w10 = x^2-y^2, w01 = xy+yx, w11 = xy-yx
std::vector<NcPoly> w_images();
/// Substitutes images[i] for generator i.
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images);
/// A degree-2k polynomial in x, y rewritten in the w-symbols (as a
/// 4-generator polynomial of degree k).
NcPoly to_w_coordinates(const NcPoly& p);

using NamedChecks = std::vector<std::pair<std::string, bool>>;
bool all_pass(const NamedChecks& checks);

/// The four expansions of 2 gamma(x), 2 gamma(y) through w, left and right.
NamedChecks gamma_expansions(const AbcParams& p);

/// (a+c) v00^2 + (c-a) v10^2 + (a+b) v01^2 + (b-a) v11^2
NcPoly n_abc(const AbcParams& p);
/// e1 transported to the sextuple coordinates, applied to a combination of
/// squares of the generators.
NcPoly e1_on_squares(const SextupleParams& s, const NcPoly& squares);
/// b(a^2-c^2)((xy)^2+(yx)^2) + a(b^2-a^2)(yx^2y+xy^2x) + a(c^2-a^2)(x^2y^2+y^2x^2)
/// + c(a^2-b^2)(x^4+y^4)
NcPoly printed_c4(const AbcParams& p);

struct QuotientRecord {
  SextupleParams derived;
  AlphaTriple alpha;
  bool derived_solved = false;
  bool sextuple_matches_closed_form = false;
  bool alpha_matches = false;
  bool fivefold = false;
  NamedChecks relation_images;
  bool n_image_in_ideal = false;
  NamedChecks equivariance;
  NamedChecks printed_expansions;
  /// Reported only; one printed pair is expected to disagree.
  NamedChecks printed_pairs;
  bool pass() const;
};

/// Requires a != 0 and b != +-c (Error(Parameter) otherwise).
QuotientRecord verify_quotient_map(const AbcParams& p);

struct C4Record {
  bool omega_independent = false;
  bool omega1_central = false;
  bool omega2_central = false;
  bool matches_c4 = false;
  FieldElem mu;
  std::string omega2;
  bool pass() const { return omega_independent && omega1_central && omega2_central && matches_c4; }
};

C4Record extract_c4(const AbcParams& p);

/// True iff the printed quartic is central. Throws Error(DegenerateElement)
/// when it vanishes in the algebra.
bool verify_c4_central(const AbcParams& p);

}  // namespace skv::veronese
