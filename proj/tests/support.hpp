#pragma once

#include <random>

#include "k3/cyclo.hpp"
#include "k3/rational.hpp"

namespace k3::testing {

inline constexpr int kPropertyCases = 1000;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x16'0b'3a'5eULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 9) {
  return make_rational(uniform(-span, span), uniform(1, span));
}

inline Cyclo16 random_cyclo(long span = 9) {
  Cyclo16::Coeffs c;
  for (auto& x : c) x = uniform(0, 3) == 0 ? Rational(0) : random_rational(span);
  return Cyclo16(c);
}

inline Cyclo16 random_nonzero_cyclo() {
  for (;;) {
    Cyclo16 x = random_cyclo();
    if (!x.is_zero()) return x;
  }
}

}  // namespace k3::testing
