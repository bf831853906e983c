#include "skfamilies.hpp"

#include "errors.hpp"
#include "hesse.hpp"

namespace skv::skfamilies {

namespace {

NcPoly w(std::size_t n, std::initializer_list<std::uint8_t> letters) {
  return NcPoly::monomial(n, freealg::Word(letters));
}

NcPoly g(std::size_t n, std::size_t i) { return NcPoly::generator(n, i); }

std::vector<std::string> strings(std::initializer_list<const FieldElem*> xs) {
  std::vector<std::string> out;
  for (const auto* x : xs) out.push_back(x->to_string());
  return out;
}

}  // namespace

AbcParams AbcParams::make(const Rational& a, const Rational& b, const Rational& c) {
  Rational lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead == 0) throw Error(ErrorCode::Parameter, "[0:0:0] is not a projective point");
  return AbcParams{a / lead, b / lead, c / lead};
}

AbcParams AbcParams::parse(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(exactfield::parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::Parse, "expected a,b,c but got '" + std::string(text) + "'");
  }
  return make(parts[0], parts[1], parts[2]);
}

std::string AbcParams::to_string() const {
  return a.get_str() + "," + b.get_str() + "," + c.get_str();
}

AlphaTriple AlphaTriple::from_pair(const FieldElem& a1, const FieldElem& a2) {
  const FieldElem den = FieldElem(1L) + a1 * a2;
  if (den.is_zero()) throw Error(ErrorCode::Parameter, "1 + a1 a2 = 0");
  return AlphaTriple{a1, a2, -(a1 + a2) / den};
}

bool AlphaTriple::is_sklyanin() const { return (a1 + a2 + a3 + a1 * a2 * a3).is_zero(); }

std::vector<std::string> AlphaTriple::to_strings() const { return strings({&a1, &a2, &a3}); }

std::optional<LambdaTriple> LambdaTriple::from_alpha(const AlphaTriple& t) {
  std::optional<FieldElem> roots[3];
  const FieldElem* src[] = {&t.a1, &t.a2, &t.a3};
  const int sign[] = {-1, -1, 1};
  for (int k = 0; k < 3; ++k) {
    if (!src[k]->is_rational()) return std::nullopt;
    roots[k] = exactfield::sqrt_rational(src[k]->coeff(0) * sign[k]);
    if (!roots[k]) return std::nullopt;
  }
  return LambdaTriple{*roots[0], *roots[1], *roots[2]};
}

AlphaTriple LambdaTriple::alpha() const {
  return AlphaTriple{-(l10 * l10), -(l01 * l01), l11 * l11};
}

bool LambdaTriple::is_sklyanin() const {
  const FieldElem prod = l10 * l01 * l11;
  return (l10 * l10 + l01 * l01 - l11 * l11 - prod * prod).is_zero();
}

FieldElem LambdaTriple::lambda() const {
  const FieldElem den = l01 - l11;
  if (den.is_zero()) throw Error(ErrorCode::Parameter, "lambda undefined: l01 = l11");
  return l10 * (l01 * l11 + FieldElem(1L)) / den;
}

std::vector<std::string> LambdaTriple::to_strings() const {
  return strings({&l10, &l01, &l11});
}

SextupleParams SextupleParams::from_alpha(const AlphaTriple& t) {
  return SextupleParams{t.a1, t.a2, t.a3, FieldElem(1L), FieldElem(1L), FieldElem(1L)};
}

SextupleParams SextupleParams::from_lambda(const LambdaTriple& t) {
  return SextupleParams{t.l10, t.l01, t.l11, -t.l10, -t.l01, t.l11};
}

SextupleParams SextupleParams::from_abc(const AbcParams& p) {
  if (p.a == 0 || p.b == p.c || p.b == -p.c) {
    throw Error(ErrorCode::Parameter, "sextuple needs a != 0 and b != +-c");
  }
  const Rational &a = p.a, &b = p.b, &c = p.c;
  SextupleParams s;
  s.a10 = FieldElem(Rational(b / a));
  s.b10 = FieldElem(Rational(c / a));
  s.a01 = FieldElem(Rational((b + c - 2 * a) / (b - c)));
  s.b01 = FieldElem(Rational(-(b + c + 2 * a) / (b - c)));
  s.a11 = FieldElem(Rational((2 * a + b - c) / (b + c)));
  s.b11 = FieldElem(Rational(-(2 * a - b + c) / (b + c)));
  return s;
}

AlphaTriple SextupleParams::alpha() const {
  return AlphaTriple{a10 * b10, a01 * b01, a11 * b11};
}

bool SextupleParams::on_fivefold() const {
  const AlphaTriple t = alpha();
  return t.is_sklyanin();
}

bool SextupleParams::zero_rule_holds() const {
  return a10.is_zero() == b10.is_zero() && a01.is_zero() == b01.is_zero() &&
         a11.is_zero() == b11.is_zero();
}

std::vector<std::string> SextupleParams::to_strings() const {
  return strings({&a10, &a01, &a11, &b10, &b01, &b11});
}

const std::vector<std::string>& s3_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

const std::vector<std::string>& s2_names() {
  static const std::vector<std::string> names{"x", "y"};
  return names;
}

const std::vector<std::string>& s4_names() {
  static const std::vector<std::string> names{"v00", "v10", "v01", "v11"};
  return names;
}

std::vector<NcPoly> s3_relations(const AbcParams& p) {
  constexpr std::uint8_t X = 0, Y = 1, Z = 2;
  const FieldElem a(p.a), b(p.b), c(p.c);
  return {a * w(3, {Y, Z}) + b * w(3, {Z, Y}) + c * w(3, {X, X}),
          a * w(3, {Z, X}) + b * w(3, {X, Z}) + c * w(3, {Y, Y}),
          a * w(3, {X, Y}) + b * w(3, {Y, X}) + c * w(3, {Z, Z})};
}

std::vector<NcPoly> s2_relations(const AbcParams& p) {
  constexpr std::uint8_t X = 0, Y = 1;
  const FieldElem a(p.a), b(p.b), c(p.c);
  return {a * (w(2, {Y, Y, X}) + w(2, {X, Y, Y})) + b * w(2, {Y, X, Y}) + c * w(2, {X, X, X}),
          a * (w(2, {X, X, Y}) + w(2, {Y, X, X})) + b * w(2, {X, Y, X}) + c * w(2, {Y, Y, Y})};
}

std::vector<NcPoly> s4_relations(const SextupleParams& s) {
  const NcPoly v00 = g(4, 0), v10 = g(4, 1), v01 = g(4, 2), v11 = g(4, 3);
  using freealg::anticommutator;
  using freealg::commutator;
  return {commutator(v00, v10) - s.a10 * anticommutator(v01, v11),
          commutator(v01, v11) - s.b10 * anticommutator(v00, v10),
          commutator(v00, v01) - s.a01 * anticommutator(v11, v10),
          commutator(v11, v10) - s.b01 * anticommutator(v00, v01),
          commutator(v00, v11) - s.a11 * anticommutator(v10, v01),
          commutator(v10, v01) - s.b11 * anticommutator(v00, v11)};
}

Presentation build_s3(const AbcParams& p) { return Presentation(s3_names(), s3_relations(p)); }

Presentation build_s2(const AbcParams& p) { return Presentation(s2_names(), s2_relations(p)); }

Presentation build_s4(const SextupleParams& s) {
  if (!s.zero_rule_holds()) throw Error(ErrorCode::Parameter, "a_ij = 0 iff b_ij = 0 fails");
  Presentation pres(s4_names(), s4_relations(s));
  const auto& spaces = pres.relation_spaces();
  if (spaces.size() != 1 || spaces.begin()->second.dim() != 6) {
    throw Error(ErrorCode::Parameter, "degenerate sextuple: fewer than six relations");
  }
  return pres;
}

AlphaTriple alpha_from_abc(const AbcParams& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c;
  if (a == 0 || b == c || b == -c) {
    throw Error(ErrorCode::Parameter, "alpha needs a != 0 and b != +-c");
  }
  const Rational bc = b + c, bmc = b - c;
  return AlphaTriple{FieldElem(Rational(b * c / (a * a))),
                     FieldElem(Rational(-(bc * bc - 4 * a * a) / (bmc * bmc))),
                     FieldElem(Rational((bmc * bmc - 4 * a * a) / (bc * bc)))};
}

bool is_smooth_hesse(const AbcParams& p) {
  const Rational abc = p.a * p.b * p.c;
  if (abc == 0) return false;
  const Rational k = p.a * p.a * p.a + p.b * p.b * p.b + p.c * p.c * p.c;
  return k * k * k != 27 * abc * abc * abc;
}

const char* tau_order_name(TauOrder t) {
  switch (t) {
    case TauOrder::Order1: return "order1";
    case TauOrder::Order2: return "order2";
    case TauOrder::Order3: return "order3";
    case TauOrder::Generic: return "generic";
  }
  return "unknown";
}

TauOrder tau_order_flag(const AbcParams& p) {
  using namespace pointscheme;
  if (!is_smooth_hesse(p)) throw Error(ErrorCode::Precondition, "singular Hesse cubic");
  const ProjPoint O = hesse_origin();
  const ProjPoint t = tau(p);
  if (t == O) return TauOrder::Order1;
  const ProjPoint t2 = hesse_add(p, t, t);
  if (t2 == O) return TauOrder::Order2;
  if (hesse_add(p, t, t2) == O) return TauOrder::Order3;
  return TauOrder::Generic;
}

}  // namespace skv::skfamilies
