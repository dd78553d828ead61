#include "k3/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "k3/error.hpp"

namespace k3 {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c) : coeffs_{c} { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_factor(const Rational& root) { return RatPoly({-root, Rational(1)}); }

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly operator+(const RatPoly& x, const RatPoly& y) {
  std::vector<Rational> v(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) v[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) v[i] += y.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& x, const RatPoly& y) { return x + (-y); }

RatPoly operator*(const RatPoly& x, const RatPoly& y) {
  if (x.is_zero() || y.is_zero()) return RatPoly();
  std::vector<Rational> v(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& c, const RatPoly& x) {
  std::vector<Rational> v = x.coeffs_;
  for (auto& e : v) e *= c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative exponent");
  RatPoly result(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return RatPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

RatPoly RatPoly::reversed(int weight) const {
  if (weight < degree()) throw InvalidArgument("weight below degree");
  std::vector<Rational> v(static_cast<std::size_t>(weight) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(weight - i)] = coeffs_[static_cast<std::size_t>(i)];
  return RatPoly(std::move(v));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (i == 0) {
      os << k3::to_string(c);
      continue;
    }
    if (c != 1) os << k3::to_string(c) << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  RatPoly parse() {
    RatPoly sum;
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    sum = term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      sum = sum + term(op == '-');
      skip_ws();
    }
    return sum;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RatPoly term(bool negative) {
    skip_ws();
    const std::size_t start = pos_;
    Rational c = 1;
    bool has_coeff = false;
    if (peek_digit()) {
      Integer num = uint();
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        den = uint();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      c = make_rational(num, den);
      has_coeff = true;
    }
    int degree = 0;
    bool star = false;
    if (has_coeff && peek('*')) {
      ++pos_;
      star = true;
    }
    if (peek('t')) {
      ++pos_;
      degree = 1;
      if (peek('^')) {
        ++pos_;
        std::size_t at = pos_;
        Integer e = uint();
        if (!e.fits_sint_p() || e > 1000) throw ParseError("exponent too large", at);
        degree = static_cast<int>(e.get_si());
      }
    } else if (star || !has_coeff) {
      throw ParseError(star ? "expected 't' after '*'" : "expected coefficient or 't'", pos_ == start ? start : pos_);
    }
    if (negative) c = -c;
    return RatPoly::monomial(c, degree);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly RatPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& x, const RatPoly& y) {
  if (y.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = x.coeffs();
  const int dy = y.degree();
  if (x.degree() < dy) return {RatPoly(), x};
  std::vector<Rational> quo(static_cast<std::size_t>(x.degree() - dy) + 1);
  const Rational lead = y.leading();
  for (int i = x.degree(); i >= dy; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - dy)] = q;
    for (int j = 0; j <= dy; ++j) rem[static_cast<std::size_t>(i - dy + j)] -= q * y.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& x, const RatPoly& y) {
  RatPoly a = x, b = y;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int valuation(const RatPoly& p, const RatPoly& factor) {
  if (factor.degree() < 1) throw InvalidArgument("valuation needs a non-constant factor");
  if (p.is_zero()) return kInfiniteOrder;
  int v = 0;
  RatPoly q = p;
  while (true) {
    auto [quo, rem] = divmod(q, factor);
    if (!rem.is_zero()) return v;
    q = std::move(quo);
    ++v;
  }
}

int valuation_at(const RatPoly& p, const Rational& t0) { return valuation(p, RatPoly::linear_factor(t0)); }

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::vector<RatPoly> out;
  if (p.degree() == 0) return out;
  const RatPoly f = p.monic();
  const RatPoly fp = f.derivative();
  const RatPoly a0 = gcd(f, fp);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(fp, a0).first;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    out.push_back(ai);
  }
  return out;
}

namespace {

// Integer coefficients of a content-free multiple of p.
std::vector<Integer> primitive_integer_coeffs(const RatPoly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(Rational(c * lcm).get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& c : out) c /= content;
  return out;
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % m;
  if (acc < 0) acc += m;
  return acc;
}

std::vector<Integer> derivative_coeffs(const std::vector<Integer>& c) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  return d;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Roots modulo a prime p not dividing the leading coefficient, all simple,
// lifted p-adically until the modulus exceeds 2 |lc| (root bound); the
// numerator lc * x of a rational root x is then the symmetric residue.
std::vector<Rational> lifted_root_candidates(const std::vector<Integer>& c) {
  const Integer lc = c.back();
  Integer height = 0;
  for (const auto& x : c)
    if (abs(x) > height) height = abs(x);
  const Integer limit = 2 * abs(lc) * (height + 1) + 1;
  const auto dc = derivative_coeffs(c);

  for (unsigned long prime = 3;; prime += 2) {
    if (!is_prime(prime)) continue;
    const Integer p(prime);
    if (lc % p == 0) continue;
    std::vector<Integer> roots;
    bool simple = true;
    for (unsigned long r = 0; r < prime && simple; ++r) {
      if (eval_mod(c, Integer(r), p) != 0) continue;
      if (eval_mod(dc, Integer(r), p) == 0) simple = false;
      roots.emplace_back(r);
    }
    if (!simple) continue;

    std::vector<Rational> out;
    for (Integer r : roots) {
      Integer modulus = p;
      while (modulus <= limit) {
        modulus *= modulus;
        Integer inv;
        const Integer deriv = eval_mod(dc, r, modulus);
        mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t());
        r = (r - eval_mod(c, r, modulus) * inv) % modulus;
        if (r < 0) r += modulus;
      }
      Integer m = (lc * r) % modulus;
      if (m < 0) m += modulus;
      if (2 * m > modulus) m -= modulus;
      out.push_back(make_rational(m, lc));
    }
    return out;
  }
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational roots of zero");
  std::vector<Rational> roots;
  RatPoly q = p;
  if (q.coeff(0) == 0) {
    roots.emplace_back(0);
    while (q.coeff(0) == 0) q = divmod(q, RatPoly::monomial(1, 1)).first;
  }
  if (q.degree() >= 1) {
    const RatPoly squarefree = divmod(q, gcd(q, q.derivative())).first;
    for (const Rational& x : lifted_root_candidates(primitive_integer_coeffs(squarefree))) {
      if (q.eval(x) == 0) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace k3
