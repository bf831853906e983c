#include <gtest/gtest.h>

#include "errors.hpp"
#include "gen.hpp"
#include "gradedalgebra.hpp"
#include "hesse.hpp"
#include "pointscheme.hpp"
#include "suite.hpp"

using skv::Error;
using skv::ErrorCode;
using skv::exactfield::FieldElem;
using skv::exactfield::Rational;
using skv::freealg::MultiPoly;
using namespace skv::pointscheme;
namespace sf = skv::skfamilies;

namespace {

ProjPoint pt(long x, long y, long z) { return ProjPoint({FieldElem(x), FieldElem(y), FieldElem(z)}); }

// Relations evaluated at (P, Q) through their multilinear forms.
bool annihilates(const std::vector<skv::freealg::NcPoly>& rels, const ProjPoint& P,
                 const ProjPoint& Q) {
  for (const auto& r : rels) {
    const MultiPoly m = skv::freealg::multilinearize(r).evaluate_block(0, P.x).evaluate_block(1, Q.x);
    if (!m.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(ProjPoint, ProjectiveEquality) {
  EXPECT_EQ(pt(1, 2, 3), pt(-2, -4, -6));
  EXPECT_NE(pt(1, 2, 3), pt(1, 2, 4));
  EXPECT_NE(pt(0, 0, 0), pt(1, 0, 0));
  EXPECT_EQ(pt(0, 0, 0), pt(0, 0, 0));
  EXPECT_EQ(pt(0, 2, 4).normalized().x[1], FieldElem(1L));
}

TEST(Hesse, OriginAndTauLieOnTheCurve) {
  std::mt19937_64 rng(60);
  for (int t = 0; t < 20; ++t) {
    const auto p = gen::smooth_abc(rng);
    EXPECT_TRUE(hesse_value(p, hesse_origin()).is_zero());
    EXPECT_TRUE(hesse_value(p, tau(p)).is_zero());
  }
  EXPECT_THROW(hesse_neg(sf::AbcParams::make(1, 2, 3), pt(1, 0, 0)), Error);
  EXPECT_THROW(hesse_neg(sf::AbcParams::make(1, 1, 1), hesse_origin()), Error);
}

TEST(HesseProperty, GroupLaw) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 8; ++t) {
    const auto p = gen::smooth_abc(rng);
    const ProjPoint O = hesse_origin();
    const ProjPoint T = tau(p);
    // Flexes of the Hesse pencil lie on every member.
    const ProjPoint F = pt(0, 1, -1);
    std::vector<ProjPoint> pts{O, T, F, hesse_multiple(p, T, 2), hesse_add(p, T, F)};
    for (const auto& P : pts) {
      EXPECT_TRUE(hesse_value(p, P).is_zero());
      EXPECT_EQ(hesse_add(p, P, O), P);
      EXPECT_EQ(hesse_add(p, P, hesse_neg(p, P)), O);
      for (const auto& Q : pts) {
        EXPECT_EQ(hesse_add(p, P, Q), hesse_add(p, Q, P));
        EXPECT_EQ(hesse_add(p, hesse_add(p, P, Q), T), hesse_add(p, P, hesse_add(p, Q, T)));
      }
    }
    EXPECT_EQ(hesse_multiple(p, T, 3), hesse_add(p, hesse_multiple(p, T, 2), T));
    EXPECT_EQ(hesse_multiple(p, T, -2), hesse_neg(p, hesse_multiple(p, T, 2)));
    EXPECT_EQ(hesse_multiple(p, T, 0), O);
  }
}

TEST(Hesse, FlexHasOrderThree) {
  const auto p = sf::AbcParams::make(1, 2, 3);
  EXPECT_EQ(hesse_multiple(p, pt(0, 1, -1), 3), hesse_origin());
  EXPECT_NE(hesse_multiple(p, pt(0, 1, -1), 1), hesse_origin());
}

TEST(PointScheme, NextPointIsAnnihilatedByTheRelations) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 10; ++t) {
    const auto p = gen::smooth_abc(rng);
    const auto rels = sf::s3_relations(p);
    ProjPoint P = tau(p);
    for (int step = 0; step < 3; ++step) {
      ProjPoint Q;
      try {
        Q = s3_next_point(p, P);
      } catch (const Error& e) {
        ADD_FAILURE() << p.to_string() << ": " << e.what();
        break;
      }
      EXPECT_TRUE(annihilates(rels, P, Q));
      EXPECT_TRUE(hesse_value(p, Q).is_zero());
      P = Q;
    }
  }
}

TEST(PointScheme, PointOffTheCurveHasNoPartner) {
  try {
    s3_next_point(sf::AbcParams::make(1, 2, 3), pt(1, 0, 0));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NoPoint || e.code() == ErrorCode::OffCurve);
  }
}

TEST(PointScheme, MatrixDeterminantCutsOutTheCurve) {
  const auto p = sf::AbcParams::make(1, 2, 3);
  const auto M = point_matrix(sf::s3_relations(p));
  ASSERT_EQ(M.size(), 3u);
  EXPECT_TRUE(rows_proportional(M, printed_s3_matrix(p)));
  const MultiPoly det = determinant(M);
  EXPECT_TRUE(det.evaluate_block(0, tau(p).x).is_zero());
  EXPECT_FALSE(det.evaluate_block(0, pt(1, 0, 0).x).is_zero());
}

TEST(PointSchemeProperty, QuadraticFamilyDeterminantIsSwapSymmetric) {
  std::mt19937_64 rng(63);
  int checked = 0;
  while (checked < 10) {
    const auto p = gen::abc(rng);
    MultiPoly det;
    try {
      det = s2_point_determinant(p);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(det.swap_blocks(0, 1), det) << p.to_string();
    EXPECT_TRUE(skv::freealg::proportional(det, printed_s2_curve(p))) << p.to_string();
    EXPECT_TRUE(rows_proportional(point_matrix(sf::s2_relations(p)), printed_s2_matrix(p)));
  }
}

TEST(C3, DescriptionAtSampledPoints) {
  std::mt19937_64 rng(64);
  int checked = 0;
  while (checked < 3) {
    const auto p = gen::smooth_abc(rng);
    if (sf::tau_order_flag(p) == sf::TauOrder::Order3 || sf::tau_order_flag(p) == sf::TauOrder::Order1) {
      EXPECT_THROW(verify_c3_description(p), Error);
      continue;
    }
    ++checked;
    const C3Record r = verify_c3_description(p);
    EXPECT_TRUE(r.pass()) << p.to_string();
    EXPECT_EQ(r.centralizer_dim, 1u);
  }
}

TEST(C3, FBasisSpansTheInvariantCubics) {
  const auto f = f_basis();
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(skv::freealg::span(3, 3, f).dim(), 3u);
}

TEST(Minors, SklyaninPointAndPerturbation) {
  for (const auto& lt : skv::suite::sample_lambda(2, 65)) {
    ASSERT_TRUE(lt.is_sklyanin());
    const MinorRecord rec = s4_minor_membership(lt);
    EXPECT_TRUE(rec.all_pass()) << lt.to_strings()[0] << " " << lt.to_strings()[1];
    EXPECT_EQ(rec.minor_in_ideal.size(), 15u);
    const MinorRecord off = s4_minor_membership(lt, lt.lambda() + FieldElem(1L));
    std::size_t members = 0;
    for (bool b : off.minor_in_ideal) members += b ? 1 : 0;
    EXPECT_LT(members, 15u);
  }
}

TEST(Minors, OffLocusIsRejected) {
  const sf::LambdaTriple lt{FieldElem(2L), FieldElem(3L), FieldElem(5L)};
  ASSERT_FALSE(lt.is_sklyanin());
  EXPECT_THROW(s4_minor_membership(lt), Error);
}
