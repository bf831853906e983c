#include "veronese.hpp"

#include "errors.hpp"
#include "gradedalgebra.hpp"
#include "heisenberg.hpp"
#include "matrix.hpp"

namespace skv::veronese {

using exactfield::Rational;
using freealg::SparseVec;

namespace {

NcPoly x_gen() { return NcPoly::generator(2, 0); }
NcPoly y_gen() { return NcPoly::generator(2, 1); }

NcPoly v_gen(std::size_t i) { return NcPoly::generator(4, i); }

bool sparse_multiple(const SparseVec& u, const SparseVec& v, FieldElem& ratio) {
  if (u.empty() || v.empty() || u.size() != v.size()) return false;
  ratio = v.front().value / u.front().value;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].index != v[k].index || v[k].value != ratio * u[k].value) return false;
  }
  return true;
}

}  // namespace

std::vector<NcPoly> w_images() {
  const NcPoly x = x_gen(), y = y_gen();
  return {x * x + y * y, x * x - y * y, x * y + y * x, x * y - y * x};
}

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images) {
  if (images.size() != p.n()) throw Error(ErrorCode::AmbientMismatch, "one image per generator");
  const std::size_t target = images.front().n();
  NcPoly out(target);
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::constant(target, c);
    for (auto letter : w) term = term * images[letter];
    out += term;
  }
  return out;
}

NcPoly to_w_coordinates(const NcPoly& p) {
  if (p.n() != 2) throw Error(ErrorCode::AmbientMismatch, "expected a polynomial in x, y");
  if (p.is_zero()) return NcPoly(4);
  const std::size_t d = p.degree();
  if (d % 2 != 0) throw Error(ErrorCode::Degree, "odd degree has no w-coordinates");
  const std::size_t k = d / 2;
  const auto images = w_images();
  std::vector<SparseVec> cols;
  for (std::size_t idx = 0; idx < freealg::ipow(4, k); ++idx) {
    cols.push_back(freealg::to_sparse(
        substitute(NcPoly::monomial(4, freealg::index_word(idx, 4, k)), images)));
  }
  const auto x = freealg::solve(cols, freealg::to_sparse(p));
  if (!x) throw Error(ErrorCode::Precondition, "w-images do not span");
  NcPoly out(4);
  for (std::size_t idx = 0; idx < x->size(); ++idx) {
    out.add_term(freealg::index_word(idx, 4, k), (*x)[idx]);
  }
  return out;
}

bool all_pass(const NamedChecks& checks) {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

NamedChecks gamma_expansions(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const auto rel = skfamilies::s2_relations(p);
  const NcPoly two_gx = FieldElem(2L) * rel[0], two_gy = FieldElem(2L) * rel[1];
  const auto W = w_images();
  const NcPoly x = x_gen(), y = y_gen();
  return {
      {"2gamma(x) = w.x",
       (a + c) * (W[0] * x) + (c - a) * (W[1] * x) + (a + b) * (W[2] * y) + (a - b) * (W[3] * y) ==
           two_gx},
      {"2gamma(x) = x.w",
       (a + c) * (x * W[0]) + (c - a) * (x * W[1]) + (a + b) * (y * W[2]) + (b - a) * (y * W[3]) ==
           two_gx},
      {"2gamma(y) = w.y",
       (a + c) * (W[0] * y) + (a - c) * (W[1] * y) + (a + b) * (W[2] * x) + (b - a) * (W[3] * x) ==
           two_gy},
      {"2gamma(y) = y.w",
       (a + c) * (y * W[0]) + (a - c) * (y * W[1]) + (a + b) * (x * W[2]) + (a - b) * (x * W[3]) ==
           two_gy},
  };
}

NcPoly n_abc(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  auto sq = [](std::size_t i) { return v_gen(i) * v_gen(i); };
  return (a + c) * sq(0) + (c - a) * sq(1) + (a + b) * sq(2) + (b - a) * sq(3);
}

NcPoly e1_on_squares(const SextupleParams& s, const NcPoly& squares) {
  if (squares.n() != 4) throw Error(ErrorCode::AmbientMismatch, "expected v-symbols");
  std::array<FieldElem, 4> k;
  for (const auto& [w, c] : squares.terms()) {
    if (w.size() != 2 || w[0] != w[1]) {
      throw Error(ErrorCode::Precondition, "e1 is transported on squares only");
    }
    k[w[0]] = c;
  }
  if (s.a10.is_zero() || s.b10.is_zero() || s.a11.is_zero() || s.b11.is_zero()) {
    throw Error(ErrorCode::Parameter, "transported e1 needs a10, b10, a11, b11 nonzero");
  }
  auto sq = [](std::size_t i) { return v_gen(i) * v_gen(i); };
  // v00^2 -> (-a10/b10) v01^2, v01^2 -> (b11/a11) v00^2,
  // v10^2 -> (-a10 b11/(b10 a11)) v11^2, v11^2 -> v10^2
  return (k[2] * s.b11 / s.a11) * sq(0) + k[3] * sq(1) + (-k[0] * s.a10 / s.b10) * sq(2) +
         (-k[1] * s.a10 * s.b11 / (s.b10 * s.a11)) * sq(3);
}

NcPoly printed_c4(const AbcParams& p) {
  const FieldElem a(p.a), b(p.b), c(p.c);
  const NcPoly x = x_gen(), y = y_gen();
  const NcPoly xy = x * y, yx = y * x, xx = x * x, yy = y * y;
  return (b * (a * a - c * c)) * (xy * xy + yx * yx) +
         (a * (b * b - a * a)) * (yx * xy + xy * yx) +
         (a * (c * c - a * a)) * (xx * yy + yy * xx) + (c * (a * a - b * b)) * (xx * xx + yy * yy);
}

bool QuotientRecord::pass() const {
  return derived_solved && sextuple_matches_closed_form && alpha_matches && fivefold &&
         all_pass(relation_images) && n_image_in_ideal && all_pass(equivariance) &&
         all_pass(printed_expansions);
}

QuotientRecord verify_quotient_map(const AbcParams& p) {
  const SextupleParams closed = SextupleParams::from_abc(p);
  const FieldElem a(p.a), b(p.b), c(p.c);
  const auto s2 = skfamilies::build_s2(p);
  const auto rel = skfamilies::s2_relations(p);
  const NcPoly &gx = rel[0], &gy = rel[1];
  const NcPoly x = x_gen(), y = y_gen();
  const FieldElem two(2L);

  QuotientRecord rec;
  const std::array<std::array<NcPoly, 2>, 3> pairs{{
      {two * (gx * x - gy * y), two * (x * gx - y * gy)},
      {two * (gx * y + gy * x), two * (y * gx + x * gy)},
      {two * (gx * y - gy * x), two * (x * gy - y * gx)},
  }};
  std::vector<freealg::Subspace> spans;
  std::vector<std::array<SparseVec, 2>> pair_w;
  for (const auto& pr : pairs) {
    const NcPoly u = to_w_coordinates(pr[0]), u2 = to_w_coordinates(pr[1]);
    spans.push_back(freealg::span(4, 2, {u, u2}));
    pair_w.push_back({freealg::to_sparse(u), freealg::to_sparse(u2)});
  }

  const NcPoly w00 = v_gen(0), w10 = v_gen(1), w01 = v_gen(2), w11 = v_gen(3);
  using freealg::anticommutator;
  using freealg::commutator;
  // comm - A anti lies in the span of the chi-pair.
  auto coefficient = [&](std::size_t chi, const NcPoly& comm, const NcPoly& anti,
                         FieldElem& out) {
    const auto sol = freealg::solve(
        {pair_w[chi][0], pair_w[chi][1], freealg::to_sparse(anti)}, freealg::to_sparse(comm));
    if (!sol) return false;
    out = (*sol)[2];
    return true;
  };
  SextupleParams& d = rec.derived;
  rec.derived_solved =
      coefficient(0, commutator(w00, w10), anticommutator(w01, w11), d.a10) &&
      coefficient(0, commutator(w01, w11), anticommutator(w00, w10), d.b10) &&
      coefficient(1, commutator(w00, w01), anticommutator(w11, w10), d.a01) &&
      coefficient(1, commutator(w11, w10), anticommutator(w00, w01), d.b01) &&
      coefficient(2, commutator(w00, w11), anticommutator(w10, w01), d.a11) &&
      coefficient(2, commutator(w10, w01), anticommutator(w00, w11), d.b11);
  if (!rec.derived_solved) return rec;

  rec.sextuple_matches_closed_form = d.a10 == closed.a10 && d.b10 == closed.b10 &&
                                     d.a01 == closed.a01 && d.b01 == closed.b01 &&
                                     d.a11 == closed.a11 && d.b11 == closed.b11;
  rec.alpha = d.alpha();
  const AlphaTriple expected = skfamilies::alpha_from_abc(p);
  rec.alpha_matches =
      rec.alpha.a1 == expected.a1 && rec.alpha.a2 == expected.a2 && rec.alpha.a3 == expected.a3;
  rec.fivefold = d.on_fivefold();

  const auto W = w_images();
  const auto s4_rel = skfamilies::s4_relations(d);
  static const char* names[] = {"[v00,v10]", "[v01,v11]", "[v00,v01]",
                                "[v11,v10]", "[v00,v11]", "[v10,v01]"};
  for (std::size_t r = 0; r < 6; ++r) {
    rec.relation_images.emplace_back(names[r], gradedalgebra::in_ideal(s2, substitute(s4_rel[r], W)));
  }
  const NcPoly n = n_abc(p);
  rec.n_image_in_ideal = gradedalgebra::in_ideal(s2, substitute(n, W));

  const FieldElem o(1L), m(-1L), z;
  const Matrix e1sq_v = Matrix::diagonal({o, m, o, m});
  const Matrix e2sq_v = Matrix::diagonal({o, o, m, m});
  const Matrix e1_xy(2, 2, {z, o, o, z});
  const Matrix e2_xy = Matrix::diagonal({o, m});
  std::vector<std::pair<std::string, NcPoly>> elems;
  for (std::size_t r = 0; r < 6; ++r) elems.emplace_back(names[r], s4_rel[r]);
  elems.emplace_back("n", n);
  for (const auto& [name, e] : elems) {
    const NcPoly img = substitute(e, W);
    rec.equivariance.emplace_back(
        "e1^2 " + name, substitute(heisenberg::act_on_poly(e1sq_v, e), W) ==
                            heisenberg::act_on_poly(e1_xy, img));
    rec.equivariance.emplace_back(
        "e2^2 " + name, substitute(heisenberg::act_on_poly(e2sq_v, e), W) ==
                            heisenberg::act_on_poly(e2_xy, img));
  }

  const std::vector<std::pair<std::string, std::pair<std::size_t, NcPoly>>> printed{
      {"a[w00,w10]-b{w01,w11}", {0, a * commutator(w00, w10) - b * anticommutator(w01, w11)}},
      {"a[w01,w11]-c{w00,w10}", {0, a * commutator(w01, w11) - c * anticommutator(w00, w10)}},
      {"(c-b)[w00,w01]+(b+c-2a){w11,w10}",
       {1, (c - b) * commutator(w00, w01) + (b + c - two * a) * anticommutator(w11, w10)}},
      {"(b-c)[w11,w01]+(b+c+2a){w00,w01}",
       {1, (b - c) * commutator(w11, w01) + (b + c + two * a) * anticommutator(w00, w01)}},
      {"(b-c)[w11,w10]+(b+c+2a){w00,w01}",
       {1, (b - c) * commutator(w11, w10) + (b + c + two * a) * anticommutator(w00, w01)}},
      {"(b+c)[w00,w11]+(-2a-b+c){w10,w01}",
       {2, (b + c) * commutator(w00, w11) + (c - b - two * a) * anticommutator(w10, w01)}},
      {"(b+c)[w10,w01]+(2a-b+c){w00,w11}",
       {2, (b + c) * commutator(w10, w01) + (two * a - b + c) * anticommutator(w00, w11)}},
  };
  for (const auto& [name, entry] : printed) {
    rec.printed_pairs.emplace_back(name, freealg::member(entry.second, spans[entry.first]));
  }

  const NcPoly W00 = W[0], W10 = W[1], W01 = W[2], W11 = W[3];
  rec.printed_expansions = {
      {"2(gamma(x)x-gamma(y)y)",
       pairs[0][0] == (a + c) * (W00 * W10) + (c - a) * (W10 * W00) - (a + b) * (W01 * W11) +
                          (a - b) * (W11 * W01)},
      {"2(xgamma(x)-ygamma(y))",
       pairs[0][1] == (a + c) * (W10 * W00) + (c - a) * (W00 * W10) + (a + b) * (W11 * W01) +
                          (b - a) * (W01 * W11)},
      {"2(gamma(x)y+gamma(y)x)",
       pairs[1][0] == (a + c) * (W00 * W01) + (c - a) * (W10 * W11) + (a + b) * (W01 * W00) +
                          (b - a) * (W11 * W10)},
      {"2(ygamma(x)+xgamma(y))",
       pairs[1][1] == (a + c) * (W01 * W00) + (a - c) * (W11 * W10) + (a + b) * (W00 * W01) +
                          (a - b) * (W10 * W11)},
      {"2(gamma(x)y-gamma(y)x)",
       pairs[2][0] == (a + c) * (W00 * W11) + (c - a) * (W10 * W01) - (a + b) * (W01 * W10) +
                          (a - b) * (W11 * W00)},
      {"2(xgamma(y)-ygamma(x))",
       pairs[2][1] == (a + c) * (W11 * W00) + (a - c) * (W01 * W10) + (a + b) * (W10 * W01) +
                          (a - b) * (W00 * W11)},
  };
  return rec;
}

C4Record extract_c4(const AbcParams& p) {
  const SextupleParams s = SextupleParams::from_abc(p);
  const auto s4 = skfamilies::build_s4(s);
  const auto s2 = skfamilies::build_s2(p);
  C4Record rec;
  const NcPoly omega1 = n_abc(p);
  const NcPoly omega2 = e1_on_squares(s, omega1);
  rec.omega2 = omega2.to_string(skfamilies::s4_names());
  freealg::Echelon ech;
  ech.insert(gradedalgebra::normal_form(s4, omega1));
  ech.insert(gradedalgebra::normal_form(s4, omega2));
  rec.omega_independent = ech.rank() == 2;
  rec.omega1_central = gradedalgebra::is_central(s4, omega1);
  rec.omega2_central = gradedalgebra::is_central(s4, omega2);
  const SparseVec image = gradedalgebra::normal_form(s2, substitute(omega2, w_images()));
  const SparseVec c4 = gradedalgebra::normal_form(s2, printed_c4(p));
  rec.matches_c4 = sparse_multiple(c4, image, rec.mu);
  return rec;
}

bool verify_c4_central(const AbcParams& p) {
  const auto s2 = skfamilies::build_s2(p);
  return gradedalgebra::normality_automorphism(s2, printed_c4(p)).is_central();
}

}  // namespace skv::veronese
