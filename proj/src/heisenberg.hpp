#pragma once

// The Heisenberg groups H2, H3, H4 and their representations over Q(zeta12).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freealg.hpp"
#include "matrix.hpp"

namespace skv::heisenberg {

using exactfield::FieldElem;
using freealg::NcPoly;
using freealg::Subspace;

/// Element e1^i e2^j [e1,e2]^k.
struct GroupElem {
  int i, j, k;
};

class HeisenbergGroup {
 public:
  /// Throws Error(UnsupportedOrder) unless n is 2, 3 or 4.
  explicit HeisenbergGroup(int n);

  int n() const { return n_; }
  std::size_t order() const { return static_cast<std::size_t>(n_ * n_ * n_); }
  /// Lex order on (i, j, k).
  std::vector<GroupElem> elements() const;
  std::size_t index(const GroupElem& g) const;
  GroupElem multiply(const GroupElem& g, const GroupElem& h) const;

 private:
  int n_;
};

class GroupRep {
 public:
  /// Checks e1^n = e2^n = 1 and that c = e1 e2 e1^-1 e2^-1 is central of order
  /// dividing n. Throws Error(RepresentationInvalid) otherwise.
  GroupRep(int n, Matrix e1, Matrix e2, std::string label = "");

  int n() const { return n_; }
  std::size_t dim() const { return e1_.rows(); }
  const Matrix& e1() const { return e1_; }
  const Matrix& e2() const { return e2_; }
  const Matrix& commutator() const { return c_; }
  const std::string& label() const { return label_; }

  Matrix matrix_of(const GroupElem& g) const;
  /// (1/|G|) sum_g rho(g)
  Matrix averaging_projector() const;

 private:
  int n_;
  Matrix e1_, e2_, c_;
  std::string label_;
};

/// Traces indexed like HeisenbergGroup::elements().
using Character = std::vector<FieldElem>;

Character character(const GroupRep& rep);
/// (1/|G|) sum_g chi(g) conj(psi(g))
FieldElem inner_product(int n, const Character& chi, const Character& psi);

/// Labels: "H<n>:chi_{i,j}", "H2:V", "H3:V1", "H3:V2", "H4:V_{i,j}", "H4:V1",
/// "H4:V3".
std::vector<GroupRep> irrep_table(int n);

GroupRep tensor(const GroupRep& a, const GroupRep& b);
/// d-fold tensor power acting on the lex-ordered word basis.
GroupRep rep_on_degree(const GroupRep& rep, std::size_t d);
/// Action on a stable subspace in its echelon basis. Throws
/// Error(NotASubrep) when S is not stable.
GroupRep restrict(const GroupRep& rep, const Subspace& s, std::string label = "");
/// Antisymmetric tensors e_i e_j - e_j e_i inside rep (x) rep.
GroupRep antisymmetric_square(const GroupRep& rep);
GroupRep change_basis(const GroupRep& rep, const Matrix& basis);

using Decomposition = std::vector<std::pair<std::string, std::size_t>>;
/// Multiplicities of irreducibles, in irrep_table order, zeros omitted.
/// Throws Error(RepresentationInvalid) on non-integral multiplicities.
Decomposition decompose(const GroupRep& rep);
std::string to_string(const Decomposition& d);

/// True iff both generators map S onto S.
bool is_subrep(const Subspace& s, const GroupRep& rep);
/// Fixed vectors of S via the averaging projector. Throws Error(NotASubrep)
/// when S is not stable.
Subspace invariant_subspace(const GroupRep& rep, const Subspace& s);

/// Entry [4i+j][4i'+j'] says whether V (x) chi_{i,j} and V (x) chi_{i',j'}
/// have equal characters as H4-representations.
std::vector<std::vector<bool>> twist_equivalence_table();

/// Columns v00 = x0+x2, v10 = x0-x2, v01 = x1+x3, v11 = x1-x3.
Matrix v_basis();

/// g acting on generators (columns are images), extended to words.
NcPoly act_on_poly(const Matrix& g, const NcPoly& p);

std::vector<FieldElem> to_dense(const freealg::SparseVec& v, std::size_t dim);
freealg::SparseVec to_sparse(const std::vector<FieldElem>& v);

}  // namespace skv::heisenberg
