#include "exactfield.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace skv::exactfield {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Dense polynomials over Q, used only for inversion.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b, b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZero,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(neg ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

FieldElem FieldElem::zeta12() { return FieldElem({Rational(0), 1, 0, 0}); }

bool FieldElem::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool FieldElem::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(rhs.c_[i]) != 0) c_[i] += rhs.c_[i];
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(rhs.c_[i]) != 0) c_[i] -= rhs.c_[i];
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  if (rhs.is_rational()) {
    if (is_rational()) {
      c_[0] *= rhs.c_[0];
    } else {
      for (auto& x : c_) x *= rhs.c_[0];
    }
    return *this;
  }
  if (is_rational()) {
    const Rational s = c_[0];
    c_ = rhs.c_;
    for (auto& x : c_) x *= s;
    return *this;
  }
  std::array<Rational, 7> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(rhs.c_[j]) == 0) continue;
      p[i + j] += c_[i] * rhs.c_[j];
    }
  }
  // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
  c_[0] = p[0] - p[4] - p[6];
  c_[1] = p[1] - p[5];
  c_[2] = p[2] + p[4];
  c_[3] = p[3] + p[5];
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
  if (rhs.is_rational()) {
    if (sgn(rhs.c_[0]) == 0) {
      throw Error(ErrorCode::DivisionByZero, "division by zero field element");
    }
    for (auto& x : c_) {
      if (sgn(x) != 0) x /= rhs.c_[0];
    }
    return *this;
  }
  return *this *= rhs.inverse();
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  }
  if (is_rational()) return FieldElem(Rational(1 / c_[0]));
  // Extended Euclid on (phi, x) keeping only the cofactor of x.
  QPoly r0 = {1, 0, -1, 0, 1};
  QPoly r1(c_.begin(), c_.end());
  trim(r1);
  QPoly s0, s1 = {Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since phi is irreducible.
  const Rational inv_lead = 1 / r1[0];
  auto [q, rem] = divmod(s1, QPoly{1, 0, -1, 0, 1});
  std::array<Rational, 4> out{};
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] * inv_lead;
  return FieldElem(out);
}

FieldElem FieldElem::conj() const {
  // z^-1 = z - z^3, (z^-1)^2 = 1 - z^2, (z^-1)^3 = -z^3.
  return FieldElem({Rational(c_[0] + c_[2]), c_[1], Rational(-c_[2]),
                    Rational(-c_[1] - c_[3])});
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result(1L);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

void FieldElem::submul(const FieldElem& f, const FieldElem& x) {
  if (f.is_rational() && x.is_rational()) {
    if (sgn(f.c_[0]) == 0 || sgn(x.c_[0]) == 0) return;
    mpq_class t = f.c_[0] * x.c_[0];
    c_[0] -= t;
    return;
  }
  *this -= f * x;
}

std::string FieldElem::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    Rational mag = abs(c_[k]);
    if (out.empty()) {
      if (sgn(c_[k]) < 0) out += "-";
    } else {
      out += sgn(c_[k]) < 0 ? " - " : " + ";
    }
    out += mag.get_str();
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

FieldElem FieldElem::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty field element");
  std::array<Rational, 4> out{};
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool neg = false;
    if (term.front() == '+' || term.front() == '-') {
      neg = term.front() == '-';
      term.erase(0, 1);
    }
    std::size_t power = 0;
    std::string coeff = term;
    const auto zpos = term.find('z');
    if (zpos != std::string::npos) {
      std::string tail = term.substr(zpos + 1);
      coeff = term.substr(0, zpos);
      if (!coeff.empty()) {
        if (coeff.back() != '*') {
          throw Error(ErrorCode::Parse, "bad field element term: " + term);
        }
        coeff.pop_back();
      }
      if (coeff.empty()) coeff = "1";
      if (tail.empty()) {
        power = 1;
      } else if (tail.size() == 2 && tail[0] == '^' && tail[1] >= '0' &&
                 tail[1] <= '3') {
        power = static_cast<std::size_t>(tail[1] - '0');
      } else {
        throw Error(ErrorCode::Parse, "bad power of z: " + term);
      }
    }
    Rational q = parse_rational(coeff);
    out[power] += neg ? Rational(-q) : q;
  }
  return FieldElem(out);
}

FieldElem root_of_unity(int n) {
  if (n <= 0 || 12 % n != 0) {
    throw Error(ErrorCode::UnsupportedOrder,
                "no primitive " + std::to_string(n) + "-th root of unity in Q(zeta12)");
  }
  return FieldElem::zeta12().pow(12 / n);
}

std::optional<FieldElem> sqrt_rational(const Rational& q) {
  if (q == 0) return FieldElem();
  auto rational_root = [](const Rational& r) -> std::optional<Rational> {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_sqrt(num.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), den.get_mpz_t());
    return Rational(num, den);
  };
  const FieldElem z = FieldElem::zeta12();
  const FieldElem i = z.pow(3);
  const FieldElem sqrt3 = FieldElem(2L) * z - i;
  const std::pair<Rational, FieldElem> units[] = {
      {Rational(1), FieldElem(1L)}, {Rational(-1), i}, {Rational(3), sqrt3}, {Rational(-3), i * sqrt3}};
  for (const auto& [u, root] : units) {
    if (auto r = rational_root(q / u)) return FieldElem(*r) * root;
  }
  return std::nullopt;
}

}  // namespace skv::exactfield
