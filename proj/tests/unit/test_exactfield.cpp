#include <gtest/gtest.h>

#include "errors.hpp"
#include "exactfield.hpp"
#include "gen.hpp"

using skv::Error;
using skv::ErrorCode;
using skv::exactfield::FieldElem;
using skv::exactfield::Rational;
namespace ef = skv::exactfield;

namespace {

FieldElem z() { return FieldElem::zeta12(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(ef::parse_rational("3"), Rational(3));
  EXPECT_EQ(ef::parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(ef::parse_rational(" 5/10 "), Rational(1, 2));
  EXPECT_EQ(ef::to_string(ef::parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(ef::to_string(Rational(7)), "7");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { ef::parse_rational("1/0"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { ef::parse_rational("abc"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { ef::parse_rational(""); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { ef::parse_rational("1/2/3"); }), ErrorCode::Parse);
}

TEST(FieldElem, GeneratorSatisfiesTwelfthCyclotomicPolynomial) {
  // Phi_12(t) = t^4 - t^2 + 1
  EXPECT_TRUE((z().pow(4) - z().pow(2) + FieldElem(1L)).is_zero());
  EXPECT_TRUE(z().pow(12).is_one());
  for (int k = 1; k < 12; ++k) EXPECT_FALSE(z().pow(k).is_one()) << k;
}

TEST(FieldElem, RootsOfUnityArePrimitive) {
  for (int n : {1, 2, 3, 4, 6, 12}) {
    const FieldElem r = ef::root_of_unity(n);
    EXPECT_TRUE(r.pow(n).is_one()) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(r.pow(k).is_one()) << n << "^" << k;
  }
  EXPECT_EQ(ef::root_of_unity(2), FieldElem(-1L));
  EXPECT_EQ(code_of([] { ef::root_of_unity(5); }), ErrorCode::UnsupportedOrder);
  EXPECT_EQ(code_of([] { ef::root_of_unity(8); }), ErrorCode::UnsupportedOrder);
}

TEST(FieldElem, CubeRootOfUnityMinimalPolynomial) {
  const FieldElem w = ef::root_of_unity(3);
  EXPECT_TRUE((w * w + w + FieldElem(1L)).is_zero());
}

TEST(FieldElem, ImaginaryUnitSquaresToMinusOne) {
  const FieldElem i = ef::root_of_unity(4);
  EXPECT_EQ(i * i, FieldElem(-1L));
}

TEST(FieldElem, DivisionByZeroThrows) {
  EXPECT_EQ(code_of([] { FieldElem().inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { FieldElem(1L) / FieldElem(); }), ErrorCode::DivisionByZero);
}

TEST(FieldElem, ToStringAndParseRoundTrip) {
  EXPECT_EQ(FieldElem().to_string(), "0");
  EXPECT_EQ(FieldElem(Rational(-3, 2)).to_string(), "-3/2");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const FieldElem f = gen::field(rng);
    EXPECT_EQ(FieldElem::parse(f.to_string()), f) << f.to_string();
  }
}

TEST(FieldElemProperty, FieldAxioms) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const FieldElem a = gen::field(rng), b = gen::field(rng), c = gen::field(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b - b, a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(b / a * a, b);
    }
  }
}

TEST(FieldElemProperty, ConjugationIsAnInvolutiveAutomorphism) {
  std::mt19937_64 rng(2);
  EXPECT_TRUE((z().conj() * z()).is_one());
  for (int t = 0; t < 200; ++t) {
    const FieldElem a = gen::field(rng), b = gen::field(rng);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a.conj().conj(), a);
  }
}

TEST(FieldElemProperty, SubmulMatchesSubtractionOfProduct) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    FieldElem a = gen::field(rng);
    const FieldElem f = gen::field(rng), x = gen::field(rng);
    const FieldElem expected = a - f * x;
    a.submul(f, x);
    EXPECT_EQ(a, expected);
  }
}

TEST(FieldElemProperty, PowerLaws) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const FieldElem a = gen::nonzero_field(rng);
    const long m = gen::small_int(rng, -4, 4), n = gen::small_int(rng, -4, 4);
    EXPECT_EQ(a.pow(m) * a.pow(n), a.pow(m + n));
  }
}

TEST(SqrtRational, RootsExistExactlyForTheFourSquareClasses) {
  for (long q : {4L, -9L, 3L, -3L, 12L, -27L, 0L}) {
    const auto r = ef::sqrt_rational(Rational(q));
    ASSERT_TRUE(r.has_value()) << q;
    EXPECT_EQ(*r * *r, FieldElem(q)) << q;
  }
  const auto frac = ef::sqrt_rational(Rational(3, 4));
  ASSERT_TRUE(frac.has_value());
  EXPECT_EQ(*frac * *frac, FieldElem(Rational(3, 4)));
  // sqrt 2 and sqrt 6 generate Q(sqrt 2), Q(sqrt 6), which are not inside Q(zeta12).
  EXPECT_FALSE(ef::sqrt_rational(Rational(2)).has_value());
  EXPECT_FALSE(ef::sqrt_rational(Rational(-6)).has_value());
  EXPECT_FALSE(ef::sqrt_rational(Rational(5, 3)).has_value());
}
