#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep failures
// reproducible; every generator draws from the caller's engine.

#include <cstdint>
#include <random>
#include <vector>

#include "exactfield.hpp"
#include "freealg.hpp"
#include "skfamilies.hpp"

namespace gen {

using skv::exactfield::FieldElem;
using skv::exactfield::Rational;
using skv::freealg::NcPoly;

inline long small_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rational(std::mt19937_64& rng, long bound = 9) {
  long num = small_int(rng, -bound, bound);
  long den = small_int(rng, 1, bound);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(std::mt19937_64& rng, long bound = 9) {
  for (;;) {
    Rational q = rational(rng, bound);
    if (q != 0) return q;
  }
}

inline FieldElem field(std::mt19937_64& rng, long bound = 5) {
  return FieldElem({rational(rng, bound), rational(rng, bound), rational(rng, bound),
                    rational(rng, bound)});
}

inline FieldElem nonzero_field(std::mt19937_64& rng) {
  for (;;) {
    FieldElem f = field(rng);
    if (!f.is_zero()) return f;
  }
}

/// Homogeneous polynomial with up to `terms` random words.
inline NcPoly homogeneous(std::mt19937_64& rng, std::size_t n, std::size_t degree,
                          std::size_t terms = 4) {
  NcPoly p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    skv::freealg::Word w;
    for (std::size_t k = 0; k < degree; ++k) w.push_back(static_cast<std::uint8_t>(rng() % n));
    p.add_term(w, FieldElem(rational(rng, 4)));
  }
  return p;
}

inline skv::skfamilies::AbcParams abc(std::mt19937_64& rng) {
  return skv::skfamilies::AbcParams::make(nonzero_rational(rng), nonzero_rational(rng),
                                          nonzero_rational(rng));
}

/// Random parameters with a smooth Hesse cubic.
inline skv::skfamilies::AbcParams smooth_abc(std::mt19937_64& rng) {
  for (;;) {
    auto p = abc(rng);
    if (skv::skfamilies::is_smooth_hesse(p)) return p;
  }
}

/// Parameters for which the cubic-to-quadratic comparison is defined and
/// nondegenerate.
inline skv::skfamilies::AbcParams quotient_abc(std::mt19937_64& rng) {
  for (;;) {
    auto p = abc(rng);
    const Rational &a = p.a, &b = p.b, &c = p.c;
    if (b == c || b == -c || b + c == 2 * a || b + c == -2 * a || b - c == 2 * a ||
        b - c == -2 * a) {
      continue;
    }
    return p;
  }
}

}  // namespace gen
