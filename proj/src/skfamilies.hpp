#pragma once

// The three Sklyanin families as presentations, their parameter types and
// genericity predicates.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactfield.hpp"
#include "freealg.hpp"
#include "gradedalgebra.hpp"

namespace skv::skfamilies {

using exactfield::FieldElem;
using exactfield::Rational;
using freealg::NcPoly;
using gradedalgebra::Presentation;

/// Projective triple [a:b:c], scaled so the first nonzero entry is 1.
struct AbcParams {
  Rational a, b, c;

  /// Throws Error(Parameter) when all entries vanish.
  static AbcParams make(const Rational& a, const Rational& b, const Rational& c);
  /// "a,b,c" with rational entries.
  static AbcParams parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const AbcParams& x, const AbcParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

struct AlphaTriple {
  FieldElem a1, a2, a3;

  /// Completes (a1, a2) to the Sklyanin locus; throws Error(Parameter) when
  /// 1 + a1 a2 = 0.
  static AlphaTriple from_pair(const FieldElem& a1, const FieldElem& a2);
  bool is_sklyanin() const;
  std::vector<std::string> to_strings() const;
};

struct LambdaTriple {
  FieldElem l10, l01, l11;

  /// Square roots of (-a1, -a2, a3) when all three are rational and the
  /// roots lie in the field; nullopt otherwise.
  static std::optional<LambdaTriple> from_alpha(const AlphaTriple& t);

  AlphaTriple alpha() const;
  /// l10^2 + l01^2 - l11^2 - (l10 l01 l11)^2 = 0
  bool is_sklyanin() const;
  /// l10 (l01 l11 + 1) / (l01 - l11); throws Error(Parameter) when undefined.
  FieldElem lambda() const;
  std::vector<std::string> to_strings() const;
};

struct SextupleParams {
  FieldElem a10, a01, a11, b10, b01, b11;

  /// a_ij = alpha_i, b_ij = 1.
  static SextupleParams from_alpha(const AlphaTriple& t);
  /// a10 = l10, b10 = -l10, a01 = l01, b01 = -l01, a11 = b11 = l11.
  static SextupleParams from_lambda(const LambdaTriple& t);
  /// The sextuple under which the cubic algebra is a quotient. Throws
  /// Error(Parameter) when a = 0 or b = +-c.
  static SextupleParams from_abc(const AbcParams& p);

  AlphaTriple alpha() const;
  /// a10 b10 + a01 b01 + a11 b11 + a10 b10 a01 b01 a11 b11 = 0
  bool on_fivefold() const;
  /// a_ij = 0 iff b_ij = 0
  bool zero_rule_holds() const;
  std::vector<std::string> to_strings() const;
};

const std::vector<std::string>& s3_names();
const std::vector<std::string>& s2_names();
const std::vector<std::string>& s4_names();

/// ayz+bzy+cx^2, azx+bxz+cy^2, axy+byx+cz^2
std::vector<NcPoly> s3_relations(const AbcParams& p);
/// a(y^2x+xy^2)+byxy+cx^3, a(x^2y+yx^2)+bxyx+cy^3
std::vector<NcPoly> s2_relations(const AbcParams& p);
/// The six relations in the order [v00,v10], [v01,v11], [v00,v01], [v11,v10],
/// [v00,v11], [v10,v01].
std::vector<NcPoly> s4_relations(const SextupleParams& s);

Presentation build_s3(const AbcParams& p);
Presentation build_s2(const AbcParams& p);
/// Throws Error(Parameter) when the relation space has dimension < 6 or the
/// zero rule fails.
Presentation build_s4(const SextupleParams& s);

/// Throws Error(Parameter) when a = 0 or b = +-c.
AlphaTriple alpha_from_abc(const AbcParams& p);

bool is_smooth_hesse(const AbcParams& p);

enum class TauOrder { Order1, Order2, Order3, Generic };
const char* tau_order_name(TauOrder t);
/// Throws Error(Precondition) on singular parameters.
TauOrder tau_order_flag(const AbcParams& p);

}  // namespace skv::skfamilies
