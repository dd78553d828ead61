#include "k3/rational.hpp"

#include <cctype>

#include "k3/error.hpp"

namespace k3 {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  std::size_t digits_end = scan_digits(text, pos);
  if (digits_end == pos) {
    throw ParseError("expected integer", pos);
  }
  const bool negative = text[0] == '-';
  Integer num(std::string(text.substr(pos, digits_end - pos)).c_str(), 10);
  if (negative) num = -num;
  Integer den = 1;
  pos = digits_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_end = scan_digits(text, pos);
    if (den_end == pos) {
      throw ParseError("expected denominator", pos);
    }
    den = Integer(std::string(text.substr(pos, den_end - pos)).c_str(), 10);
    if (den == 0) {
      throw ParseError("zero denominator", pos);
    }
    pos = den_end;
  }
  if (pos != text.size()) {
    throw ParseError("unexpected character in rational", pos);
  }
  return make_rational(num, den);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace k3
