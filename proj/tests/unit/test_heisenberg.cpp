#include <gtest/gtest.h>

#include <map>

#include "errors.hpp"
#include "gen.hpp"
#include "heisenberg.hpp"
#include "pointscheme.hpp"
#include "skfamilies.hpp"

using skv::Error;
using skv::ErrorCode;
using skv::Matrix;
using skv::exactfield::FieldElem;
using skv::freealg::NcPoly;
using skv::freealg::Subspace;
using namespace skv::heisenberg;
namespace sf = skv::skfamilies;

namespace {

const GroupRep& find(const std::vector<GroupRep>& table, const std::string& label) {
  for (const auto& r : table) {
    if (r.label() == label) return r;
  }
  throw std::runtime_error("missing " + label);
}

std::map<std::string, std::size_t> as_map(const Decomposition& d) { return {d.begin(), d.end()}; }

}  // namespace

TEST(HeisenbergGroup, MultiplicationIsAssociativeWithCentralCommutator) {
  for (int n : {2, 3, 4}) {
    HeisenbergGroup g(n);
    const auto els = g.elements();
    EXPECT_EQ(els.size(), g.order());
    for (const auto& a : els) {
      for (const auto& b : els) {
        for (const auto& c : {els[1], els[els.size() / 2], els.back()}) {
          const auto l = g.multiply(g.multiply(a, b), c);
          const auto r = g.multiply(a, g.multiply(b, c));
          EXPECT_EQ(g.index(l), g.index(r));
        }
      }
    }
  }
  EXPECT_THROW(HeisenbergGroup(5), Error);
}

TEST(Irreps, CountsAndDimensions) {
  const std::size_t counts[] = {5, 11, 22};
  const std::size_t order[] = {8, 27, 64};
  for (int n : {2, 3, 4}) {
    const auto table = irrep_table(n);
    EXPECT_EQ(table.size(), counts[n - 2]);
    std::size_t sq = 0;
    for (const auto& r : table) sq += r.dim() * r.dim();
    EXPECT_EQ(sq, order[n - 2]);
  }
}

TEST(Irreps, GeneratorRelationsHold) {
  for (int n : {2, 3, 4}) {
    for (const auto& r : irrep_table(n)) {
      EXPECT_TRUE(r.e1().pow(n).is_identity()) << r.label();
      EXPECT_TRUE(r.e2().pow(n).is_identity()) << r.label();
      EXPECT_EQ(r.commutator() * r.e1(), r.e1() * r.commutator()) << r.label();
      EXPECT_EQ(r.commutator() * r.e2(), r.e2() * r.commutator()) << r.label();
    }
  }
}

TEST(Irreps, CharactersAreOrthonormal) {
  for (int n : {2, 3, 4}) {
    const auto table = irrep_table(n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        EXPECT_EQ(inner_product(n, character(table[i]), character(table[j])),
                  FieldElem(i == j ? 1L : 0L));
      }
    }
  }
}

TEST(GroupRep, InvalidGeneratorsAreRejected) {
  const Matrix e1 = Matrix::diagonal({FieldElem(1L), FieldElem(-1L)});
  EXPECT_THROW(GroupRep(3, e1, e1), Error);
}

TEST(RepOnDegree, LowDegrees) {
  const auto h3 = irrep_table(3);
  const auto& v1 = find(h3, "H3:V1");
  const GroupRep d0 = rep_on_degree(v1, 0);
  EXPECT_EQ(d0.dim(), 1u);
  EXPECT_EQ(as_map(decompose(d0)), (std::map<std::string, std::size_t>{{"H3:chi_{0,0}", 1}}));
  EXPECT_EQ(rep_on_degree(v1, 1).e1(), v1.e1());
}

TEST(Decompose, TensorSquares) {
  const auto h2 = irrep_table(2);
  EXPECT_EQ(as_map(decompose(tensor(find(h2, "H2:V"), find(h2, "H2:V")))),
            (std::map<std::string, std::size_t>{
                {"H2:chi_{0,0}", 1}, {"H2:chi_{0,1}", 1}, {"H2:chi_{1,0}", 1}, {"H2:chi_{1,1}", 1}}));
  const auto h3 = irrep_table(3);
  EXPECT_EQ(as_map(decompose(rep_on_degree(find(h3, "H3:V1"), 2))),
            (std::map<std::string, std::size_t>{{"H3:V2", 3}}));
  const auto h4 = irrep_table(4);
  EXPECT_EQ(as_map(decompose(antisymmetric_square(find(h4, "H4:V1")))),
            (std::map<std::string, std::size_t>{{"H4:V_{0,1}", 1}, {"H4:V_{1,0}", 1}, {"H4:V_{1,1}", 1}}));
}

TEST(DecomposeProperty, MultiplicitiesReconstructTheCharacter) {
  std::mt19937_64 rng(40);
  for (int n : {2, 3, 4}) {
    const auto table = irrep_table(n);
    for (int t = 0; t < 6; ++t) {
      const auto& a = table[rng() % table.size()];
      const auto& b = table[rng() % table.size()];
      const GroupRep ab = tensor(a, b);
      Character sum(HeisenbergGroup(n).order());
      for (const auto& [label, mult] : decompose(ab)) {
        const Character c = character(find(table, label));
        for (std::size_t g = 0; g < sum.size(); ++g) sum[g] += FieldElem(static_cast<long>(mult)) * c[g];
      }
      EXPECT_EQ(sum, character(ab)) << a.label() << " x " << b.label();
    }
  }
}

TEST(Invariants, DegreeThreeInvariantsOfTheThreeDimensionalIrrep) {
  const auto rep = rep_on_degree(find(irrep_table(3), "H3:V1"), 3);
  const Subspace inv = invariant_subspace(rep, skv::freealg::full_space(3, 3));
  EXPECT_EQ(inv.dim(), 3u);
  EXPECT_TRUE(inv == skv::freealg::span(3, 3, skv::pointscheme::f_basis()));
}

TEST(InvariantsProperty, OutputIsPointwiseFixed) {
  for (int n : {2, 3}) {
    const auto table = irrep_table(n);
    const auto& v = table.back();
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto rep = rep_on_degree(v, d);
      const Subspace inv = invariant_subspace(rep, skv::freealg::full_space(v.dim(), d));
      for (const auto& w : inv.basis()) {
        EXPECT_EQ(act_on_poly(v.e1(), w), w);
        EXPECT_EQ(act_on_poly(v.e2(), w), w);
      }
    }
  }
}

TEST(Invariants, TrivialActionFixesEverything) {
  const auto h2 = irrep_table(2);
  const auto& triv = h2.front();
  const GroupRep rep(2, Matrix::identity(4), Matrix::identity(4), "trivial");
  EXPECT_EQ(triv.dim(), 1u);
  EXPECT_EQ(invariant_subspace(rep, skv::freealg::full_space(2, 2)).dim(), 4u);
}

TEST(Invariants, UnstableSubspaceIsRejected) {
  const auto rep = rep_on_degree(find(irrep_table(3), "H3:V1"), 2);
  const Subspace s = skv::freealg::span(3, 2, {NcPoly::generator(3, 0) * NcPoly::generator(3, 1)});
  try {
    invariant_subspace(rep, s);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubrep);
  }
}

TEST(Subrep, RelationSpacesAreStable) {
  std::mt19937_64 rng(41);
  const auto rep3 = rep_on_degree(find(irrep_table(3), "H3:V1"), 2);
  for (int t = 0; t < 10; ++t) {
    const auto p = sf::build_s3(gen::abc(rng));
    EXPECT_TRUE(is_subrep(p.relation_spaces().at(2), rep3));
  }
  const auto rep4 = rep_on_degree(change_basis(find(irrep_table(4), "H4:V1"), v_basis()), 2);
  const sf::LambdaTriple lt{FieldElem(2L), FieldElem(1L), FieldElem(1L)};
  // 4 + 1 - 1 - 4 = 0: on the locus.
  ASSERT_TRUE(lt.is_sklyanin());
  const auto p4 = sf::build_s4(sf::SextupleParams::from_lambda(lt));
  EXPECT_TRUE(is_subrep(p4.relation_spaces().at(2), rep4));
}

TEST(SubrepProperty, RandomTwoDimensionalSubspacesAreNotStable) {
  // Oracle: compare the image span with the subspace directly.
  std::mt19937_64 rng(42);
  const auto h3 = irrep_table(3);
  const auto& v1 = find(h3, "H3:V1");
  const auto rep = rep_on_degree(v1, 2);
  int checked = 0;
  while (checked < 10) {
    const Subspace s = skv::freealg::span(3, 2, {gen::homogeneous(rng, 3, 2), gen::homogeneous(rng, 3, 2)});
    if (s.dim() != 2) continue;
    bool stable = true;
    for (const auto& w : s.basis()) {
      stable = stable && skv::freealg::member(act_on_poly(v1.e1(), w), s) &&
               skv::freealg::member(act_on_poly(v1.e2(), w), s);
    }
    if (stable) continue;
    ++checked;
    EXPECT_FALSE(is_subrep(s, rep));
  }
}

TEST(TwistTable, CongruenceModuloTwo) {
  const auto t = twist_equivalence_table();
  auto idx = [](int i, int j) { return 4 * i + j; };
  EXPECT_TRUE(t[idx(0, 0)][idx(2, 2)]);
  EXPECT_FALSE(t[idx(0, 0)][idx(1, 0)]);
  for (int a = 0; a < 16; ++a) {
    EXPECT_TRUE(t[a][a]);
    for (int b = 0; b < 16; ++b) {
      EXPECT_EQ(t[a][b], t[b][a]);
      EXPECT_EQ(t[a][b], (a / 4) % 2 == (b / 4) % 2 && (a % 2) == (b % 2));
    }
  }
}

TEST(VBasis, DiagonalizesTheKleinSubgroup) {
  const auto rep = change_basis(find(irrep_table(4), "H4:V1"), v_basis());
  const FieldElem o(1L), m(-1L);
  EXPECT_EQ(rep.e1().pow(2), Matrix::diagonal({o, m, o, m}));
  EXPECT_EQ(rep.e2().pow(2), Matrix::diagonal({o, o, m, m}));
  EXPECT_EQ(character(rep), character(find(irrep_table(4), "H4:V1")));
}
