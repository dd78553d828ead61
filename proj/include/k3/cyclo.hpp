#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "k3/rational.hpp"

namespace k3 {

// An element of Q(z), z a primitive 16th root of unity, stored in the power
// basis 1, z, ..., z^7 modulo z^8 + 1. Two elements are equal iff all eight
// coordinates agree. Roots of unity of order 8, 4, 2 are z^2, z^4, z^8.
class Cyclo16 {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 16;
  using Coeffs = std::array<Rational, kDegree>;

  Cyclo16() = default;
  explicit Cyclo16(const Rational& c);
  explicit Cyclo16(long c) : Cyclo16(Rational(c)) {}
  explicit Cyclo16(Coeffs coeffs) : coeffs_(std::move(coeffs)) {}

  // z^e with e taken modulo 16.
  static Cyclo16 root_power(long e);
  // Primitive n-th root of unity z^(16/n); n must divide 16.
  static Cyclo16 root_of_unity(int n, long e = 1);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  bool is_rational() const;

  Cyclo16 operator-() const;
  Cyclo16& operator+=(const Cyclo16& other);
  Cyclo16& operator-=(const Cyclo16& other);
  Cyclo16& operator*=(const Cyclo16& other);
  Cyclo16& operator*=(const Rational& c);

  friend Cyclo16 operator+(Cyclo16 a, const Cyclo16& b) { return a += b; }
  friend Cyclo16 operator-(Cyclo16 a, const Cyclo16& b) { return a -= b; }
  friend Cyclo16 operator*(Cyclo16 a, const Cyclo16& b) { return a *= b; }
  friend Cyclo16 operator*(Cyclo16 a, const Rational& c) { return a *= c; }
  friend Cyclo16 operator*(const Rational& c, Cyclo16 a) { return a *= c; }
  friend bool operator==(const Cyclo16& a, const Cyclo16& b) { return a.coeffs_ == b.coeffs_; }

  // Throws DivisionByZero on zero.
  Cyclo16 inverse() const;
  Cyclo16 pow(long e) const;

  // Ring automorphism z -> z^t; throws InvalidAutomorphism for even t.
  Cyclo16 galois(long t) const;

  // Canonical text form, e.g. "(-1/2) + (3)*z^5"; zero prints as "0".
  std::string to_string() const;
  static Cyclo16 parse(std::string_view text);

 private:
  Coeffs coeffs_{};
};

inline Cyclo16 root_power(long e) { return Cyclo16::root_power(e); }
inline Cyclo16 add(const Cyclo16& x, const Cyclo16& y) { return x + y; }
inline Cyclo16 mul(const Cyclo16& x, const Cyclo16& y) { return x * y; }
inline Cyclo16 neg(const Cyclo16& x) { return -x; }
inline Cyclo16 inverse(const Cyclo16& x) { return x.inverse(); }
inline Cyclo16 conjugate_by_galois(const Cyclo16& x, long t) { return x.galois(t); }
Cyclo16 operator/(const Cyclo16& x, const Cyclo16& y);

std::ostream& operator<<(std::ostream& os, const Cyclo16& x);

// Smallest n in 1..16 with x^n == 1, if x is a root of unity.
std::optional<int> root_of_unity_order(const Cyclo16& x);

// Sum of the primitive n-th roots of unity, evaluated in Q(z). The result is
// rational (it is the Moebius value mu(n)). n must divide 16.
long primitive_root_trace_sum(int n);

}  // namespace k3
