#include "k3/cyclo.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

#include "k3/error.hpp"

namespace k3 {

namespace {

long mod16(long e) {
  long r = e % Cyclo16::kOrder;
  return r < 0 ? r + Cyclo16::kOrder : r;
}

// Adds c * z^e into coeffs, applying z^8 = -1.
void accumulate(Cyclo16::Coeffs& coeffs, long e, const Rational& c) {
  long r = mod16(e);
  if (r < Cyclo16::kDegree) {
    coeffs[static_cast<std::size_t>(r)] += c;
  } else {
    coeffs[static_cast<std::size_t>(r - Cyclo16::kDegree)] -= c;
  }
}

}  // namespace

Cyclo16::Cyclo16(const Rational& c) { coeffs_[0] = c; }

Cyclo16 Cyclo16::root_power(long e) {
  Coeffs c{};
  accumulate(c, e, Rational(1));
  return Cyclo16(std::move(c));
}

Cyclo16 Cyclo16::root_of_unity(int n, long e) {
  if (n <= 0 || kOrder % n != 0) {
    throw InvalidArgument("root of unity order " + std::to_string(n) + " does not divide 16");
  }
  return root_power(e * (kOrder / n));
}

bool Cyclo16::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo16::is_rational() const {
  for (int i = 1; i < kDegree; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

Cyclo16 Cyclo16::operator-() const {
  Cyclo16 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo16& Cyclo16::operator+=(const Cyclo16& other) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclo16& Cyclo16::operator-=(const Cyclo16& other) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclo16& Cyclo16::operator*=(const Cyclo16& other) {
  Coeffs out{};
  for (int i = 0; i < kDegree; ++i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      const Rational& b = other.coeffs_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      accumulate(out, i + j, a * b);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclo16& Cyclo16::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

// Solves (multiplication by *this) * y = 1 by Gauss-Jordan elimination over Q.
Cyclo16 Cyclo16::inverse() const {
  if (is_zero()) {
    throw DivisionByZero("inverse of zero in Q(zeta_16)");
  }
  constexpr int n = kDegree;
  // Column j holds the coordinates of x * z^j; augmented with e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    Cyclo16 col = *this * root_power(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coeff(i);
  }
  m[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      throw DivisionByZero("singular multiplication matrix");
    }
    std::swap(m[pivot], m[col]);
    Rational inv = 1 / m[col][col];
    for (int j = col; j <= n; ++j) m[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  Coeffs out{};
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = m[i][n];
  return Cyclo16(std::move(out));
}

Cyclo16 Cyclo16::pow(long e) const {
  Cyclo16 base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclo16 result(1);
  while (k > 0) {
    if (k & 1UL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Cyclo16 Cyclo16::galois(long t) const {
  if (t % 2 == 0) {
    throw InvalidAutomorphism("z -> z^" + std::to_string(t) + " is not an automorphism of Q(zeta_16)");
  }
  Coeffs out{};
  for (int i = 0; i < kDegree; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c != 0) accumulate(out, i * mod16(t), c);
  }
  return Cyclo16(std::move(out));
}

std::string Cyclo16::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << k3::to_string(c) << ')';
    if (i == 1) {
      os << "*z";
    } else if (i > 1) {
      os << "*z^" << i;
    }
  }
  return os.str();
}

namespace {

class CycloParser {
 public:
  explicit CycloParser(std::string_view text) : text_(text) {}

  Cyclo16 parse() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ == text_.size()) return Cyclo16();
      pos_ = save;
    }
    Cyclo16::Coeffs coeffs{};
    parse_term(coeffs);
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      parse_term(coeffs);
      skip_ws();
    }
    return Cyclo16(std::move(coeffs));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void parse_term(Cyclo16::Coeffs& coeffs) {
    expect('(');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    if (pos_ >= text_.size()) throw ParseError("unterminated coefficient", start);
    std::string inner;
    for (char c : text_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(c))) inner.push_back(c);
    }
    Rational c;
    try {
      c = parse_rational(inner);
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient", start + e.position());
    }
    ++pos_;
    long power = 0;
    if (peek('*')) {
      ++pos_;
      expect('z');
      power = 1;
      if (peek('^')) {
        ++pos_;
        skip_ws();
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) throw ParseError("expected exponent", dstart);
        power = std::stol(std::string(text_.substr(dstart, pos_ - dstart)));
      }
    }
    accumulate(coeffs, power, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclo16 Cyclo16::parse(std::string_view text) { return CycloParser(text).parse(); }

Cyclo16 operator/(const Cyclo16& x, const Cyclo16& y) { return x * y.inverse(); }

std::ostream& operator<<(std::ostream& os, const Cyclo16& x) { return os << x.to_string(); }

std::optional<int> root_of_unity_order(const Cyclo16& x) {
  if (x.is_zero()) return std::nullopt;
  Cyclo16 acc = x;
  const Cyclo16 one(1);
  for (int n = 1; n <= Cyclo16::kOrder; ++n) {
    if (acc == one) return n;
    acc *= x;
  }
  return std::nullopt;
}

long primitive_root_trace_sum(int n) {
  if (n <= 0 || Cyclo16::kOrder % n != 0) {
    throw InvalidArgument("order " + std::to_string(n) + " does not divide 16");
  }
  Cyclo16 sum;
  for (long e = 0; e < Cyclo16::kOrder; ++e) {
    if (Cyclo16::kOrder / std::gcd(e, static_cast<long>(Cyclo16::kOrder)) == n) {
      sum += Cyclo16::root_power(e);
    }
  }
  // The sum is fixed by every Galois automorphism, hence rational.
  return sum.coeff(0).get_num().get_si();
}

}  // namespace k3
