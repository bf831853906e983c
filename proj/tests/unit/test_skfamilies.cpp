#include <gtest/gtest.h>

#include "errors.hpp"
#include "gen.hpp"
#include "gradedalgebra.hpp"
#include "skfamilies.hpp"

using skv::Error;
using skv::ErrorCode;
using skv::exactfield::FieldElem;
using skv::exactfield::Rational;
using namespace skv::skfamilies;
namespace ef = skv::exactfield;

namespace {

// Singular points of abc(X^3+Y^3+Z^3) - s XYZ, found from the gradient
// equations directly: k X^2 = s YZ etc. with k = 3abc. A singular point has
// all coordinates nonzero when k != 0, so put X = 1; then Y^3 = Z^3 = 1 up to
// the constraint, which leaves Y a cube root of unity and Z = k Y^2 / s.
bool brute_force_singular(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const FieldElem k = FieldElem(3L) * a * b * c;
  const FieldElem s = a * a * a + b * b * b + c * c * c;
  if (k.is_zero()) return true;
  if (s.is_zero()) return false;
  const FieldElem w = ef::root_of_unity(3);
  for (int e = 0; e < 3; ++e) {
    const FieldElem Y = w.pow(e);
    const FieldElem Z = k * Y * Y / s;
    // X-equation k = s Y Z, Y-equation k Y^2 = s Z, Z-equation k Z^2 = s Y.
    if (k == s * Y * Z && k * Y * Y == s * Z && k * Z * Z == s * Y) return true;
  }
  return false;
}

}  // namespace

TEST(AbcParams, NormalizesAndParses) {
  const AbcParams p = AbcParams::make(2, 4, -6);
  EXPECT_EQ(p.a, Rational(1));
  EXPECT_EQ(p.b, Rational(2));
  EXPECT_EQ(p.c, Rational(-3));
  EXPECT_EQ(AbcParams::parse("2,4,-6"), p);
  EXPECT_EQ(AbcParams::parse("0, 1/2, 1"), AbcParams::make(0, 1, 2));
  EXPECT_THROW(AbcParams::make(0, 0, 0), Error);
  EXPECT_THROW(AbcParams::parse("1,2"), Error);
  EXPECT_THROW(AbcParams::parse("1,x,2"), Error);
}

TEST(Relations, CountsAndDegrees) {
  const AbcParams p = AbcParams::make(1, 2, 3);
  const auto r3 = s3_relations(p);
  ASSERT_EQ(r3.size(), 3u);
  for (const auto& r : r3) EXPECT_EQ(r.degree(), 2u);
  const auto r2 = s2_relations(p);
  ASSERT_EQ(r2.size(), 2u);
  for (const auto& r : r2) EXPECT_EQ(r.degree(), 3u);
  EXPECT_EQ(build_s3(p).n(), 3u);
}

TEST(Alpha, FromAbcAtOneTwoThree) {
  const AlphaTriple t = alpha_from_abc(AbcParams::make(1, 2, 3));
  EXPECT_EQ(t.a1, FieldElem(6L));
  EXPECT_EQ(t.a2, FieldElem(-21L));
  EXPECT_EQ(t.a3, FieldElem(Rational(-3, 25)));
  EXPECT_TRUE(t.is_sklyanin());
  EXPECT_THROW(alpha_from_abc(AbcParams::make(0, 1, 2)), Error);
  EXPECT_THROW(alpha_from_abc(AbcParams::make(1, 2, -2)), Error);
}

TEST(AlphaProperty, CompletionLandsOnTheLocus) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 100; ++t) {
    const FieldElem a1(gen::nonzero_rational(rng)), a2(gen::nonzero_rational(rng));
    if ((FieldElem(1L) + a1 * a2).is_zero()) {
      EXPECT_THROW(AlphaTriple::from_pair(a1, a2), Error);
      continue;
    }
    const AlphaTriple tr = AlphaTriple::from_pair(a1, a2);
    // a1 + a2 + a3 + a1 a2 a3 = 0
    EXPECT_TRUE((tr.a1 + tr.a2 + tr.a3 + tr.a1 * tr.a2 * tr.a3).is_zero());
    EXPECT_TRUE(tr.is_sklyanin());
    EXPECT_TRUE(SextupleParams::from_alpha(tr).on_fivefold());
  }
}

TEST(AlphaProperty, QuotientAlphaIsOnTheLocus) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    const AbcParams p = gen::quotient_abc(rng);
    if (p.a == 0) continue;
    EXPECT_TRUE(alpha_from_abc(p).is_sklyanin()) << p.to_string();
    const SextupleParams s = SextupleParams::from_abc(p);
    EXPECT_TRUE(s.on_fivefold());
    EXPECT_TRUE(s.zero_rule_holds());
    EXPECT_EQ(s.alpha().a1, alpha_from_abc(p).a1);
  }
}

TEST(Lambda, AlphaRoundTrip) {
  // l10 = 2, l01 = 1, l11 = 1: 4 + 1 - 1 - 4 = 0.
  const LambdaTriple lt{FieldElem(2L), FieldElem(1L), FieldElem(1L)};
  ASSERT_TRUE(lt.is_sklyanin());
  const AlphaTriple a = lt.alpha();
  EXPECT_TRUE(a.is_sklyanin());
  const auto back = LambdaTriple::from_alpha(a);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->l10 * back->l10, lt.l10 * lt.l10);
  EXPECT_EQ(back->l01 * back->l01, lt.l01 * lt.l01);
  EXPECT_EQ(back->l11 * back->l11, lt.l11 * lt.l11);
  EXPECT_TRUE(SextupleParams::from_lambda(lt).on_fivefold());
  EXPECT_THROW(lt.lambda(), Error);
}

TEST(Lambda, IrrationalRootsAreReported) {
  // -a1 = 2 has no square root in the field.
  const AlphaTriple a = AlphaTriple::from_pair(FieldElem(-2L), FieldElem(3L));
  EXPECT_FALSE(LambdaTriple::from_alpha(a).has_value());
}

TEST(BuildS4, HasSixIndependentRelations) {
  const auto t = AlphaTriple::from_pair(FieldElem(2L), FieldElem(3L));
  const auto p = build_s4(SextupleParams::from_alpha(t));
  EXPECT_EQ(p.relation_spaces().at(2).dim(), 6u);
  EXPECT_EQ(p.n(), 4u);
  SextupleParams bad = SextupleParams::from_alpha(t);
  bad.a10 = FieldElem();
  EXPECT_THROW(build_s4(bad), Error);
}

TEST(Smoothness, KnownPoints) {
  EXPECT_FALSE(is_smooth_hesse(AbcParams::make(1, 1, 1)));
  EXPECT_TRUE(is_smooth_hesse(AbcParams::make(1, 2, 3)));
  EXPECT_FALSE(is_smooth_hesse(AbcParams::make(0, 1, 2)));
  EXPECT_FALSE(is_smooth_hesse(AbcParams::make(1, -1, 0)));
}

TEST(SmoothnessProperty, AgreesWithGradientOracle) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 200; ++t) {
    // Small entries hit the singular classes more often.
    const AbcParams p = AbcParams::make(gen::small_int(rng, -2, 2), gen::small_int(rng, -2, 2),
                                        gen::small_int(rng, 1, 2));
    EXPECT_EQ(is_smooth_hesse(p), !brute_force_singular(p)) << p.to_string();
  }
  for (int t = 0; t < 100; ++t) {
    const AbcParams p = gen::abc(rng);
    EXPECT_EQ(is_smooth_hesse(p), !brute_force_singular(p)) << p.to_string();
  }
}

TEST(TauOrder, Classification) {
  EXPECT_EQ(tau_order_flag(AbcParams::make(1, 2, 3)), TauOrder::Generic);
  EXPECT_EQ(tau_order_flag(AbcParams::make(1, 1, 2)), TauOrder::Order2);
  EXPECT_STREQ(tau_order_name(TauOrder::Generic), "generic");
  try {
    tau_order_flag(AbcParams::make(1, 1, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}
