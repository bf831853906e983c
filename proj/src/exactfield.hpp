#pragma once

// Exact arithmetic in Q(zeta12) = Q[t]/(t^4 - t^2 + 1).

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace skv::exactfield {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// An element c0 + c1 z + c2 z^2 + c3 z^3 with z a primitive 12th root of
/// unity. The representation is reduced, so equality is coefficientwise.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT
  FieldElem(const Rational& value) : c_{value, 0, 0, 0} {}  // NOLINT
  explicit FieldElem(const std::array<Rational, 4>& coeffs) : c_(coeffs) {}

  /// The generator z = zeta12.
  static FieldElem zeta12();

  const Rational& coeff(std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const { return is_rational() && c_[0] == 1; }

  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  FieldElem operator-() const;

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[t].
  /// Throws Error(DivisionByZero) on zero.
  FieldElem inverse() const;

  /// Complex conjugation, the automorphism z -> z^-1.
  FieldElem conj() const;

  FieldElem pow(long e) const;

  /// Subtracts f * x in place (this -= f * x).
  void submul(const FieldElem& f, const FieldElem& x);

  /// "c0 + c1*z + c2*z^2 + c3*z^3", zero terms omitted, "0" for zero.
  std::string to_string() const;
  static FieldElem parse(std::string_view text);

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) {
    return !(a == b);
  }

 private:
  std::array<Rational, 4> c_{};
};

inline FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
inline FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
inline FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
inline FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

/// Primitive n-th root of unity zeta12^(12/n); n must divide 12.
FieldElem root_of_unity(int n);

/// Square root of q inside Q(zeta12). It exists iff q is 0 or lies in
/// Q^2, -Q^2, 3Q^2 or -3Q^2.
std::optional<FieldElem> sqrt_rational(const Rational& q);

}  // namespace skv::exactfield
