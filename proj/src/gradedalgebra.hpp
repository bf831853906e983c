#pragma once

// Degree-truncated computations in T(V)/(R): ideal slices, Hilbert functions,
// centralizers and normality automorphisms.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freealg.hpp"
#include "matrix.hpp"

namespace skv::gradedalgebra {

using freealg::NcPoly;
using freealg::SparseVec;
using freealg::Subspace;

class Presentation {
 public:
  /// Relations must be homogeneous of degree >= 2; zero relations are
  /// dropped. Throws Error(Parameter) if nothing is left.
  Presentation(std::vector<std::string> names, const std::vector<NcPoly>& relations);

  std::size_t n() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Relation spaces keyed by degree.
  const std::map<std::size_t, Subspace>& relation_spaces() const { return spaces_; }
  std::vector<NcPoly> relations() const;

  /// New presentation with `extra` adjoined as relations.
  Presentation with_relations(const std::vector<NcPoly>& extra) const;

  /// SHA-256 (hex) of the relation matrices.
  const std::string& fingerprint() const { return fingerprint_; }

  /// Enables the on-disk ideal slice cache. Results never depend on it.
  void set_cache_dir(const std::string& dir) const;

  /// Degree-m component of the two-sided ideal, memoized.
  const Subspace& ideal_slice(std::size_t m) const;

  std::string format(const NcPoly& p) const { return p.to_string(names_); }

 private:
  struct Memo;

  std::vector<std::string> names_;
  std::map<std::size_t, Subspace> spaces_;
  std::string fingerprint_;
  std::shared_ptr<Memo> memo_;
};

inline const Subspace& ideal_slice(const Presentation& p, std::size_t m) {
  return p.ideal_slice(m);
}

struct HilbertRecord {
  std::vector<std::size_t> dims;
};

HilbertRecord hilbert_dims(const Presentation& p, std::size_t N);

/// Reduction of a homogeneous element modulo the ideal slice of its degree.
SparseVec normal_form(const Presentation& p, const NcPoly& f);
bool in_ideal(const Presentation& p, const NcPoly& f);
bool is_central(const Presentation& p, const NcPoly& c);

/// Representatives, supported on normal words, of the degree-k elements c
/// with [v, c] in the ideal for every generator v.
Subspace centralizer_slice(const Presentation& p, std::size_t k);

struct NormalCertificate {
  NcPoly element;
  /// Column j is sigma(v_j) in the generator basis.
  std::optional<Matrix> sigma;

  bool is_normal() const { return sigma.has_value(); }
  bool is_central() const { return sigma && sigma->is_identity(); }
};

/// Throws Error(DegenerateElement) if c lies in the ideal.
NormalCertificate normality_automorphism(const Presentation& p, const NcPoly& c);

HilbertRecord quotient_hilbert(const Presentation& p, const std::vector<NcPoly>& extra,
                               std::size_t N);

}  // namespace skv::gradedalgebra
