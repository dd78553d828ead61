#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Univariate polynomial in t over Q, coefficients in ascending degree with no
// trailing zeros (the zero polynomial has no coefficients).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const Rational& c);

  static RatPoly monomial(const Rational& c, int degree);
  // t - root
  static RatPoly linear_factor(const Rational& root);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational eval(const Rational& x) const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& x, const RatPoly& y);
  friend RatPoly operator-(const RatPoly& x, const RatPoly& y);
  friend RatPoly operator*(const RatPoly& x, const RatPoly& y);
  friend RatPoly operator*(const Rational& c, const RatPoly& x);
  friend bool operator==(const RatPoly& x, const RatPoly& y) { return x.coeffs_ == y.coeffs_; }

  RatPoly pow(int e) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  // t^weight * p(1/t); requires weight >= degree.
  RatPoly reversed(int weight) const;

  // "27*t^16 + 4"; descending degree, unit coefficients omitted.
  std::string to_string() const;
  // poly := term (('+'|'-') term)*, term := coeff? ('*'? 't' ('^' uint)?)?,
  // coeff := int ('/' uint)?; a leading sign is allowed. Throws ParseError.
  static RatPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& x, const RatPoly& y);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& x, const RatPoly& y);

// Largest v with factor^v | p; a large sentinel for p = 0. factor must have
// positive degree.
int valuation(const RatPoly& p, const RatPoly& factor);
int valuation_at(const RatPoly& p, const Rational& t0);

// Squarefree parts P_1, P_2, ... (monic, possibly constant 1) with
// p = lc(p) * prod P_i^i.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const RatPoly& p);

inline constexpr int kInfiniteOrder = 1 << 20;

}  // namespace k3
