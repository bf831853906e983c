#pragma once

// Noncommutative polynomials on n generators, word-space linear algebra and
// multilinearization into commutative multi-point polynomials.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactfield.hpp"

namespace skv::freealg {

using exactfield::FieldElem;
using Word = std::vector<std::uint8_t>;

/// Degree-lexicographic order on words.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Column index of a word of fixed length in the lex-ordered word basis.
std::size_t word_index(const Word& w, std::size_t n);
Word index_word(std::size_t index, std::size_t n, std::size_t degree);
std::size_t ipow(std::size_t base, std::size_t exp);

class NcPoly {
 public:
  using Terms = std::map<Word, FieldElem, DegLex>;

  explicit NcPoly(std::size_t n = 0) : n_(n) {}

  static NcPoly generator(std::size_t n, std::size_t i);
  static NcPoly monomial(std::size_t n, Word w, const FieldElem& coeff = FieldElem(1L));
  static NcPoly constant(std::size_t n, const FieldElem& coeff);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero polynomial. Throws Error(Degree) otherwise.
  std::size_t degree() const;
  FieldElem coeff(const Word& w) const;

  void add_term(const Word& w, const FieldElem& coeff);

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const FieldElem& s);
  NcPoly operator-() const;

  std::string to_string(const std::vector<std::string>& names) const;
  static NcPoly parse(std::string_view text, const std::vector<std::string>& names);

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

 private:
  void check_ambient(const NcPoly& rhs) const;

  std::size_t n_;
  Terms terms_;
};

NcPoly operator+(NcPoly a, const NcPoly& b);
NcPoly operator-(NcPoly a, const NcPoly& b);
NcPoly operator*(const FieldElem& s, NcPoly p);
NcPoly nc_mul(const NcPoly& p, const NcPoly& q);
inline NcPoly operator*(const NcPoly& p, const NcPoly& q) { return nc_mul(p, q); }
NcPoly commutator(const NcPoly& p, const NcPoly& q);
NcPoly anticommutator(const NcPoly& p, const NcPoly& q);

/// Sparse vector sorted by index, no zero entries.
struct Entry {
  std::size_t index;
  FieldElem value;
};
using SparseVec = std::vector<Entry>;

SparseVec to_sparse(const NcPoly& p);
NcPoly from_sparse(const SparseVec& v, std::size_t n, std::size_t degree);
/// v -= f * w
void axpy(SparseVec& v, const FieldElem& f, const SparseVec& w);
SparseVec scaled(const SparseVec& v, const FieldElem& f);
FieldElem sparse_at(const SparseVec& v, std::size_t index);

/// Fully reduced row echelon form with rows keyed by pivot column. Every row
/// is supported on its pivot and on non-pivot columns, so the form is
/// canonical for the row space.
class Echelon {
 public:
  SparseVec reduce(SparseVec v) const;
  /// Adds v to the row space. Returns true when the rank grows.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

  friend bool operator==(const Echelon& a, const Echelon& b);

 private:
  std::map<std::size_t, SparseVec> rows_;
};

/// Basis of the kernel of the map e_j -> images[j].
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images);

/// Some x with sum_j x_j images[j] = target, or nullopt when target is not in
/// the span of the images.
std::optional<std::vector<FieldElem>> solve(const std::vector<SparseVec>& images,
                                            const SparseVec& target);

/// Subspace of the degree-d word space on n generators.
class Subspace {
 public:
  Subspace(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}

  std::size_t n() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t ambient_dim() const { return ipow(n_, degree_); }
  std::size_t dim() const { return ech_.rank(); }

  bool insert(const SparseVec& v) { return ech_.insert(v); }
  bool insert(const NcPoly& p);
  SparseVec reduce(const SparseVec& v) const { return ech_.reduce(v); }
  bool contains(const SparseVec& v) const { return ech_.contains(v); }

  const Echelon& echelon() const { return ech_; }
  std::vector<NcPoly> basis() const;
  /// Columns that carry no pivot, i.e. the normal words of the quotient.
  std::vector<std::size_t> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.ech_ == b.ech_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t n_;
  std::size_t degree_;
  Echelon ech_;
};

/// Span of homogeneous polynomials of the given degree. Zero polynomials are
/// ignored; any other degree throws Error(Degree).
Subspace span(std::size_t n, std::size_t degree, const std::vector<NcPoly>& vectors);
bool member(const NcPoly& v, const Subspace& s);
/// The whole degree-d word space.
Subspace full_space(std::size_t n, std::size_t degree);

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};
SumIntersection sum_and_intersect(const Subspace& a, const Subspace& b);

/// Commutative polynomial in blocks of n variables; variable (b, i) is the
/// i-th coordinate of point p_b.
class MultiPoly {
 public:
  using Monomial = std::vector<std::uint8_t>;
  using Terms = std::map<Monomial, FieldElem>;

  MultiPoly(std::size_t n = 0, std::size_t blocks = 0) : n_(n), blocks_(blocks) {}

  static MultiPoly variable(std::size_t n, std::size_t blocks, std::size_t block,
                            std::size_t i);
  static MultiPoly constant(std::size_t n, std::size_t blocks, const FieldElem& c);

  std::size_t n() const { return n_; }
  std::size_t blocks() const { return blocks_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const FieldElem& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const FieldElem& s);
  MultiPoly operator-() const;

  /// Same polynomial in a ring with `total` blocks, block b moved to b + k.
  MultiPoly shifted(std::size_t k, std::size_t total) const;
  /// Substitutes the coordinates of `point` for the variables of `block`.
  MultiPoly evaluate_block(std::size_t block, const std::vector<FieldElem>& point) const;
  /// Exchanges two blocks.
  MultiPoly swap_blocks(std::size_t b1, std::size_t b2) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_ && a.terms_ == b.terms_;
  }

 private:
  void check_ambient(const MultiPoly& rhs) const;

  std::size_t n_;
  std::size_t blocks_;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const FieldElem& s, MultiPoly a);

/// Word i1...ik -> product of variable i1 of block 0, ..., variable ik of
/// block k-1. Throws Error(Degree) on non-homogeneous input.
MultiPoly multilinearize(const NcPoly& p);

/// True iff p = s * q for some nonzero scalar s (both nonzero), or both zero.
bool proportional(const MultiPoly& p, const MultiPoly& q);

}  // namespace skv::freealg
