#include "pointscheme.hpp"

#include <algorithm>

#include "errors.hpp"
#include "gradedalgebra.hpp"
#include "matrix.hpp"

namespace skv::pointscheme {

using exactfield::Rational;
using freealg::SparseVec;

namespace {

MultiPoly var(std::size_t n, std::size_t blocks, std::size_t block, std::size_t i) {
  return MultiPoly::variable(n, blocks, block, i);
}

// Nonzero sparse vectors u, v with v = s u for some s.
bool sparse_proportional(const SparseVec& u, const SparseVec& v) {
  if (u.empty() || v.empty() || u.size() != v.size()) return false;
  const FieldElem s = v.front().value / u.front().value;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].index != v[k].index || v[k].value != s * u[k].value) return false;
  }
  return true;
}

SparseVec combine(const std::vector<SparseVec>& vs, const std::vector<FieldElem>& coeffs) {
  SparseVec out;
  for (std::size_t k = 0; k < vs.size(); ++k) freealg::axpy(out, -coeffs[k], vs[k]);
  return out;
}

}  // namespace

PointMatrix point_matrix(const std::vector<NcPoly>& relations) {
  PointMatrix m;
  for (const auto& r : relations) {
    const MultiPoly ml = freealg::multilinearize(r);
    const std::size_t n = ml.n(), k = ml.blocks();
    if (k < 2) throw Error(ErrorCode::Degree, "point matrix needs relations of degree >= 2");
    std::vector<MultiPoly> row(n, MultiPoly(n, k - 1));
    for (const auto& [mono, c] : ml.terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mono[(k - 1) * n + j] == 0) continue;
        MultiPoly::Monomial head(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>((k - 1) * n));
        row[j].add_term(head, c);
      }
    }
    m.push_back(std::move(row));
  }
  return m;
}

MultiPoly determinant(const PointMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::Precondition, "empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::Precondition, "determinant of non-square matrix");
  }
  if (n == 1) return m[0][0];
  MultiPoly det(m[0][0].n(), m[0][0].blocks());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PointMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j) row.push_back(m[i][l]);
      }
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][j] * determinant(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

bool rows_proportional(const PointMatrix& a, const PointMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != b[r].size()) return false;
    // Find the scalar from the first nonzero entry, then compare all entries.
    std::optional<FieldElem> s;
    for (std::size_t j = 0; j < a[r].size() && !s; ++j) {
      if (a[r][j].is_zero() != b[r][j].is_zero()) return false;
      if (a[r][j].is_zero()) continue;
      if (!freealg::proportional(a[r][j], b[r][j])) return false;
      const auto& [mono, c] = *a[r][j].terms().begin();
      s = b[r][j].terms().at(mono) / c;
    }
    if (!s) return false;
    for (std::size_t j = 0; j < a[r].size(); ++j) {
      if (!(b[r][j] == *s * a[r][j])) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::string>> to_strings(const PointMatrix& m,
                                                 const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(e.to_string(names));
  }
  return out;
}

PointMatrix printed_s3_matrix(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const auto x = var(3, 1, 0, 0), y = var(3, 1, 0, 1), z = var(3, 1, 0, 2);
  return {{c * x, b * z, a * y}, {a * z, c * y, b * x}, {b * y, a * x, c * z}};
}

PointMatrix printed_s2_matrix(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const auto x0 = var(2, 2, 0, 0), y0 = var(2, 2, 0, 1);
  const auto x1 = var(2, 2, 1, 0), y1 = var(2, 2, 1, 1);
  return {{a * (y0 * y1) + c * (x0 * x1), a * (x0 * y1) + b * (y0 * x1)},
          {a * (y0 * x1) + b * (x0 * y1), a * (x0 * x1) + c * (y0 * y1)}};
}

PointMatrix printed_s4_matrix(const LambdaTriple& t) {
  const auto v00 = var(4, 1, 0, 0), v10 = var(4, 1, 0, 1);
  const auto v01 = var(4, 1, 0, 2), v11 = var(4, 1, 0, 3);
  const FieldElem &l10 = t.l10, &l01 = t.l01, &l11 = t.l11;
  const FieldElem m1(-1L);
  return {{m1 * v10, v00, -l10 * v11, -l10 * v01},
          {l10 * v10, l10 * v00, m1 * v11, v01},
          {m1 * v01, -l01 * v11, v00, -l01 * v10},
          {l01 * v01, v11, l01 * v00, m1 * v10},
          {m1 * v11, -l11 * v01, -l11 * v10, v00},
          {-l11 * v11, m1 * v01, v10, -l11 * v00}};
}

ProjPoint s3_next_point(const AbcParams& p, const ProjPoint& P) {
  if (P.x.size() != 3 || P.is_zero()) throw Error(ErrorCode::Precondition, "need a point of P^2");
  const PointMatrix m = point_matrix(skfamilies::s3_relations(p));
  Matrix num(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const MultiPoly e = m[i][j].evaluate_block(0, P.x);
      num(i, j) = e.is_zero() ? FieldElem() : e.terms().begin()->second;
    }
  const std::size_t rank = num.rank();
  if (rank < 2) throw Error(ErrorCode::NonUniquePoint, "point matrix has rank < 2");
  if (rank == 3) throw Error(ErrorCode::NoPoint, "point matrix is invertible");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k) {
      const auto &u = num, &v = num;
      ProjPoint q({u(i, 1) * v(k, 2) - u(i, 2) * v(k, 1), u(i, 2) * v(k, 0) - u(i, 0) * v(k, 2),
                   u(i, 0) * v(k, 1) - u(i, 1) * v(k, 0)});
      if (!q.is_zero()) return q.normalized();
    }
  throw Error(ErrorCode::NonUniquePoint, "no two independent rows");
}

MultiPoly s2_point_determinant(const AbcParams& p) {
  MultiPoly det = determinant(point_matrix(skfamilies::s2_relations(p)));
  if (det.is_zero()) throw Error(ErrorCode::Parameter, "point determinant vanishes identically");
  return det;
}

MultiPoly printed_s2_curve(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const auto x0 = var(2, 2, 0, 0), y0 = var(2, 2, 0, 1);
  const auto x1 = var(2, 2, 1, 0), y1 = var(2, 2, 1, 1);
  return (b * b - c * c) * (x0 * y0 * x1 * y1) +
         (a * b) * (x0 * x0 * y1 * y1 + y0 * y0 * x1 * x1) -
         (a * c) * (x0 * x0 * x1 * x1 + y0 * y0 * y1 * y1);
}

std::vector<NcPoly> f_basis() {
  auto w = [](std::initializer_list<std::uint8_t> l) {
    return NcPoly::monomial(3, freealg::Word(l));
  };
  constexpr std::uint8_t X = 0, Y = 1, Z = 2;
  return {w({Z, X, Y}) + w({X, Y, Z}) + w({Y, Z, X}), w({Y, X, Z}) + w({Z, Y, X}) + w({X, Z, Y}),
          w({X, X, X}) + w({Y, Y, Y}) + w({Z, Z, Z})};
}

C3Record verify_c3_description(const AbcParams& p) {
  using skfamilies::TauOrder;
  const TauOrder order = skfamilies::tau_order_flag(p);
  if (order != TauOrder::Generic && order != TauOrder::Order2) {
    throw Error(ErrorCode::Precondition, std::string("tau has ") + skfamilies::tau_order_name(order));
  }
  const auto pres = skfamilies::build_s3(p);
  C3Record rec;
  const auto cent = gradedalgebra::centralizer_slice(pres, 3);
  rec.centralizer_dim = cent.dim();
  rec.minus_two_tau = hesse_tangent_third(p, tau(p));
  if (rec.centralizer_dim != 1) return rec;

  const NcPoly c3 = cent.basis().front();
  rec.c3 = pres.format(c3);
  const SparseVec c3v = gradedalgebra::normal_form(pres, c3);
  std::vector<SparseVec> fs;
  for (const auto& f : f_basis()) fs.push_back(gradedalgebra::normal_form(pres, f));
  rec.in_span_f = freealg::solve(fs, c3v).has_value();

  const auto ker = freealg::kernel(fs);
  if (ker.size() == 1) {
    std::vector<FieldElem> k(3);
    for (const auto& e : ker.front()) k[e.index] = e.value;
    rec.kernel_is_abc = ProjPoint(k) == tau(p);
  }
  const SparseVec image = combine(fs, rec.minus_two_tau.x);
  rec.triple_matches = sparse_proportional(c3v, image);
  rec.sigma_identity = gradedalgebra::normality_automorphism(pres, c3).is_central();
  return rec;
}

bool MinorRecord::all_pass() const {
  if (minor_in_ideal.size() != 15) return false;
  for (bool b : minor_in_ideal) {
    if (!b) return false;
  }
  return true;
}

MinorRecord s4_minor_membership(const LambdaTriple& t, const std::optional<FieldElem>& lambda) {
  if (!t.is_sklyanin()) throw Error(ErrorCode::Precondition, "lambda triple off the Sklyanin locus");
  MinorRecord rec;
  rec.lambda = lambda ? *lambda : t.lambda();
  const auto sext = skfamilies::SextupleParams::from_lambda(t);
  const PointMatrix m = point_matrix(skfamilies::s4_relations(sext));
  rec.printed_matrix_match = rows_proportional(m, printed_s4_matrix(t));

  auto code = [](const MultiPoly::Monomial& mono) {
    std::size_t k = 0;
    for (std::size_t i = mono.size(); i-- > 0;) k = k * 5 + mono[i];
    return k;
  };
  auto to_vec = [&](const MultiPoly& q) {
    SparseVec v;
    for (const auto& [mono, c] : q.terms()) v.push_back({code(mono), c});
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    return v;
  };

  const auto v = [](std::size_t i) { return MultiPoly::variable(4, 1, 0, i); };
  const auto sq = [&](std::size_t i) { return v(i) * v(i); };
  const MultiPoly q1 = sq(0) + sq(1) - rec.lambda * (sq(2) - sq(3));
  const MultiPoly q2 = sq(2) + sq(3) - rec.lambda * (sq(0) - sq(1));
  freealg::Echelon ideal;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      ideal.insert(to_vec(q1 * v(i) * v(j)));
      ideal.insert(to_vec(q2 * v(i) * v(j)));
    }
  rec.quartic_ideal_dim = ideal.rank();

  for (std::size_t r0 = 0; r0 < 6; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 6; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < 6; ++r2)
        for (std::size_t r3 = r2 + 1; r3 < 6; ++r3) {
          const MultiPoly minor = determinant({m[r0], m[r1], m[r2], m[r3]});
          if (minor.is_zero()) ++rec.zero_minors;
          rec.minor_in_ideal.push_back(ideal.contains(to_vec(minor)));
        }
  return rec;
}

}  // namespace skv::pointscheme
