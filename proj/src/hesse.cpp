#include "hesse.hpp"

#include "errors.hpp"

namespace skv::pointscheme {

using exactfield::Rational;

namespace {

FieldElem dot(const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) {
  FieldElem s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

std::vector<FieldElem> cross(const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::vector<FieldElem> combo(const FieldElem& s, const std::vector<FieldElem>& P,
                             const FieldElem& t, const std::vector<FieldElem>& Q) {
  std::vector<FieldElem> r(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) r[i] = s * P[i] + t * Q[i];
  return r;
}

void require_curve(const AbcParams& p, std::initializer_list<const ProjPoint*> pts) {
  if (!skfamilies::is_smooth_hesse(p)) {
    throw Error(ErrorCode::Precondition, "singular Hesse cubic at " + p.to_string());
  }
  for (const auto* P : pts) {
    if (P->x.size() != 3 || P->is_zero()) {
      throw Error(ErrorCode::OffCurve, "not a point of the projective plane");
    }
    if (!hesse_value(p, *P).is_zero()) throw Error(ErrorCode::OffCurve, "point off curve");
  }
}

ProjPoint tangent_third_unchecked(const AbcParams& p, const ProjPoint& P) {
  const auto grad = hesse_gradient(p, P);
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<FieldElem> e(3);
    e[k] = FieldElem(1L);
    ProjPoint Q(cross(grad, e));
    if (Q.is_zero() || Q == P) continue;
    // f(sP + tQ) = t^2 (s grad(Q).P + t f(Q)) on the tangent line.
    const FieldElem B = dot(hesse_gradient(p, Q), P.x);
    const FieldElem D = hesse_value(p, Q);
    ProjPoint R(combo(D, P.x, -B, Q.x));
    if (R.is_zero()) throw Error(ErrorCode::Precondition, "tangent line inside the curve");
    return R.normalized();
  }
  throw Error(ErrorCode::Precondition, "vanishing gradient on the curve");
}

ProjPoint third_unchecked(const AbcParams& p, const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) return tangent_third_unchecked(p, P);
  const FieldElem A = dot(hesse_gradient(p, P), Q.x);
  const FieldElem B = dot(hesse_gradient(p, Q), P.x);
  ProjPoint R(combo(B, P.x, -A, Q.x));
  if (R.is_zero()) throw Error(ErrorCode::Precondition, "line inside the curve");
  return R.normalized();
}

}  // namespace

bool ProjPoint::is_zero() const {
  for (const auto& c : x) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ProjPoint ProjPoint::normalized() const {
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    const FieldElem inv = c.inverse();
    ProjPoint r = *this;
    for (auto& y : r.x) y *= inv;
    return r;
  }
  return *this;
}

std::vector<std::string> ProjPoint::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : normalized().x) out.push_back(c.to_string());
  return out;
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
  if (p.x.size() != q.x.size()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  for (std::size_t i = 0; i < p.x.size(); ++i)
    for (std::size_t j = i + 1; j < p.x.size(); ++j) {
      if (p.x[i] * q.x[j] != p.x[j] * q.x[i]) return false;
    }
  return true;
}

ProjPoint hesse_origin() { return ProjPoint({FieldElem(1L), FieldElem(-1L), FieldElem()}); }

ProjPoint tau(const AbcParams& p) {
  return ProjPoint({FieldElem(p.a), FieldElem(p.b), FieldElem(p.c)});
}

FieldElem hesse_value(const AbcParams& p, const ProjPoint& P) {
  const FieldElem abc(Rational(p.a * p.b * p.c));
  const FieldElem k(Rational(p.a * p.a * p.a + p.b * p.b * p.b + p.c * p.c * p.c));
  const auto& x = P.x;
  return abc * (x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2]) -
         k * x[0] * x[1] * x[2];
}

std::vector<FieldElem> hesse_gradient(const AbcParams& p, const ProjPoint& P) {
  const FieldElem abc3(Rational(3 * p.a * p.b * p.c));
  const FieldElem k(Rational(p.a * p.a * p.a + p.b * p.b * p.b + p.c * p.c * p.c));
  const auto& x = P.x;
  return {abc3 * x[0] * x[0] - k * x[1] * x[2], abc3 * x[1] * x[1] - k * x[0] * x[2],
          abc3 * x[2] * x[2] - k * x[0] * x[1]};
}

ProjPoint hesse_neg(const AbcParams& p, const ProjPoint& P) {
  require_curve(p, {&P});
  return ProjPoint({P.x[1], P.x[0], P.x[2]}).normalized();
}

ProjPoint hesse_tangent_third(const AbcParams& p, const ProjPoint& P) {
  require_curve(p, {&P});
  return tangent_third_unchecked(p, P);
}

ProjPoint hesse_third(const AbcParams& p, const ProjPoint& P, const ProjPoint& Q) {
  require_curve(p, {&P, &Q});
  return third_unchecked(p, P, Q);
}

ProjPoint hesse_add(const AbcParams& p, const ProjPoint& P, const ProjPoint& Q) {
  require_curve(p, {&P, &Q});
  return third_unchecked(p, hesse_origin(), third_unchecked(p, P, Q));
}

ProjPoint hesse_multiple(const AbcParams& p, const ProjPoint& P, long k) {
  require_curve(p, {&P});
  ProjPoint base = k < 0 ? hesse_neg(p, P) : P.normalized();
  unsigned long m = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ProjPoint acc = hesse_origin().normalized();
  while (m > 0) {
    if (m & 1) acc = hesse_add(p, acc, base);
    m >>= 1;
    if (m > 0) base = hesse_add(p, base, base);
  }
  return acc;
}

}  // namespace skv::pointscheme
