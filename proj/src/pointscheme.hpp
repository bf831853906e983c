#pragma once

// Point-scheme matrices from multilinearized relations and the checks built
// on them.

#include <optional>
#include <string>
#include <vector>

#include "freealg.hpp"
#include "hesse.hpp"
#include "skfamilies.hpp"

namespace skv::pointscheme {

using freealg::MultiPoly;
using freealg::NcPoly;
using skfamilies::LambdaTriple;

using PointMatrix = std::vector<std::vector<MultiPoly>>;

/// Row r, column j: coefficient of variable j of the last block in the
/// multilinearization of relations[r], as a polynomial in the other blocks.
PointMatrix point_matrix(const std::vector<NcPoly>& relations);
MultiPoly determinant(const PointMatrix& m);
/// True iff corresponding rows are nonzero multiples of each other.
bool rows_proportional(const PointMatrix& a, const PointMatrix& b);
std::vector<std::vector<std::string>> to_strings(const PointMatrix& m,
                                                 const std::vector<std::string>& names);

PointMatrix printed_s3_matrix(const AbcParams& p);
/// The 2x2 matrix with bottom-right entry a x0 x1 + c y0 y1.
PointMatrix printed_s2_matrix(const AbcParams& p);
PointMatrix printed_s4_matrix(const LambdaTriple& t);

/// Unique P' with M(P) P' = 0. Throws Error(NonUniquePoint) when M(P) has
/// rank < 2 and Error(NoPoint) when it is invertible.
ProjPoint s3_next_point(const AbcParams& p, const ProjPoint& P);

/// Determinant of the 2x2 matrix, bihomogeneous in (x0,y0), (x1,y1). Throws
/// Error(Parameter) when it vanishes identically.
MultiPoly s2_point_determinant(const AbcParams& p);
/// (b^2-c^2) x0y0x1y1 + ab (x0^2y1^2 + y0^2x1^2) - ac (x0^2x1^2 + y0^2y1^2)
MultiPoly printed_s2_curve(const AbcParams& p);

struct C3Record {
  std::size_t centralizer_dim = 0;
  std::string c3;
  bool in_span_f = false;
  /// Triples A f1 + B f2 + C f3 lying in the ideal are exactly C(a,b,c).
  bool kernel_is_abc = false;
  ProjPoint minus_two_tau;
  bool triple_matches = false;
  bool sigma_identity = false;
  bool pass() const {
    return centralizer_dim == 1 && in_span_f && kernel_is_abc && triple_matches &&
           sigma_identity;
  }
};

/// f1 = zxy+xyz+yzx, f2 = yxz+zyx+xzy, f3 = x^3+y^3+z^3
std::vector<NcPoly> f_basis();

/// Requires a smooth curve with tau generic or of order two, otherwise
/// throws Error(Precondition).
C3Record verify_c3_description(const AbcParams& p);

struct MinorRecord {
  FieldElem lambda;
  std::size_t quartic_ideal_dim = 0;
  std::vector<bool> minor_in_ideal;
  std::size_t zero_minors = 0;
  bool printed_matrix_match = false;
  bool all_pass() const;
};

/// Checks the 15 maximal minors of the 6x4 matrix against (q1, q2) in degree
/// four. `lambda` overrides the closed-form value. Throws Error(Parameter)
/// when lambda is undefined and Error(Precondition) off the Sklyanin locus.
MinorRecord s4_minor_membership(const LambdaTriple& t,
                                const std::optional<FieldElem>& lambda = std::nullopt);

}  // namespace skv::pointscheme
