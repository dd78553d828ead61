#include "k3/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "k3/error.hpp"

namespace k3 {

namespace {

IntMatrix zero_matrix(int n) { return IntMatrix(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n))); }

void link(IntMatrix& g, int a, int b) {
  g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
  g[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
}

// -Cartan matrices of the simply-laced root systems (Bourbaki numbering).
IntMatrix root_gram_a(int n) {
  IntMatrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1);
  return g;
}

IntMatrix root_gram_d(int n) {
  IntMatrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (int i = 0; i + 2 < n - 1; ++i) link(g, i, i + 1);
  link(g, n - 3, n - 2);
  link(g, n - 3, n - 1);
  return g;
}

IntMatrix root_gram_e(int n) {
  IntMatrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  // nodes 1..n as indices 0..n-1: 1-3, 3-4, 4-5, ..., (n-1)-n, and 2-4
  link(g, 0, 2);
  for (int i = 2; i + 1 < n; ++i) link(g, i, i + 1);
  link(g, 1, 3);
  return g;
}

IntMatrix hyperbolic_plane() {
  IntMatrix g = zero_matrix(2);
  link(g, 0, 1);
  return g;
}

std::string summand_label(const std::string& base, long m) {
  return m == 1 ? base : base + "(" + std::to_string(m) + ")";
}

class LatticeParser {
 public:
  explicit LatticeParser(std::string_view text) : text_(text) {}

  std::vector<std::pair<std::string, long>> parse() {
    std::vector<std::pair<std::string, long>> terms;
    terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    return terms;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      throw ParseError("expected integer", start);
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<std::string, long> term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected lattice name", pos_);
    char c = text_[pos_];
    std::string base;
    if (c == 'U') {
      ++pos_;
      base = "U";
    } else if (c == 'A' || c == 'D' || c == 'E') {
      ++pos_;
      std::size_t at = pos_;
      long n = integer();
      if (c == 'A' && n < 1) throw UnsupportedLattice("A" + std::to_string(n) + " at position " + std::to_string(at));
      if (c == 'D' && n < 4) throw UnsupportedLattice("D" + std::to_string(n) + " at position " + std::to_string(at));
      if (c == 'E' && n != 7 && n != 8) throw UnsupportedLattice("E" + std::to_string(n) + " at position " + std::to_string(at));
      base = std::string(1, c) + std::to_string(n);
    } else {
      throw ParseError(std::string("unknown lattice name '") + c + "'", pos_);
    }
    long m = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::size_t at = pos_;
      m = integer();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      if (m < 1) throw UnsupportedLattice("twist must be positive at position " + std::to_string(at));
    }
    return {base, m};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

IntMatrix base_gram(const std::string& base) {
  if (base == "U") return hyperbolic_plane();
  int n = std::stoi(base.substr(1));
  switch (base[0]) {
    case 'A': return root_gram_a(n);
    case 'D': return root_gram_d(n);
    case 'E': return root_gram_e(n);
    default: throw UnsupportedLattice(base);
  }
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    q[i].reserve(m[i].size());
    for (const auto& x : m[i]) q[i].emplace_back(x);
  }
  return q;
}

}  // namespace

GramLattice::GramLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvalidArgument("Gram matrix is not square");
    if (gram_[i][i] % 2 != 0) throw InvalidArgument("lattice is not even");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw InvalidArgument("Gram matrix is not symmetric");
    }
  }
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t na = a.gram_.size();
  const std::size_t n = na + b.gram_.size();
  IntMatrix g = zero_matrix(static_cast<int>(n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) g[i][j] = a.gram_[i][j];
  for (std::size_t i = na; i < n; ++i)
    for (std::size_t j = na; j < n; ++j) g[i][j] = b.gram_[i - na][j - na];
  std::string name = a.name_.empty() || b.name_.empty() ? std::string() : a.name_ + "+" + b.name_;
  GramLattice out(std::move(g), std::move(name));
  if (!a.summands_.empty() && !b.summands_.empty()) {
    out.summands_ = a.summands_;
    out.summands_.insert(out.summands_.end(), b.summands_.begin(), b.summands_.end());
    std::sort(out.summands_.begin(), out.summands_.end());
  }
  return out;
}

GramLattice twist(const GramLattice& l, long m) {
  if (m < 1) throw InvalidArgument("twist must be positive");
  IntMatrix g = l.gram_;
  for (auto& row : g)
    for (auto& x : row) x *= m;
  GramLattice out(std::move(g), l.name_.empty() || m == 1 ? l.name_ : "(" + l.name_ + ")(" + std::to_string(m) + ")");
  for (const auto& s : l.summands_) {
    auto open = s.find('(');
    std::string base = s.substr(0, open);
    long old = open == std::string::npos ? 1 : std::stol(s.substr(open + 1));
    out.summands_.push_back(summand_label(base, old * m));
  }
  std::sort(out.summands_.begin(), out.summands_.end());
  return out;
}

GramLattice named_lattice(std::string_view expression) {
  auto terms = LatticeParser(expression).parse();
  std::vector<GramLattice> parts;
  std::string name;
  std::vector<std::string> summands;
  for (const auto& [base, m] : terms) {
    IntMatrix g = base_gram(base);
    for (auto& row : g)
      for (auto& x : row) x *= m;
    parts.emplace_back(std::move(g));
    if (!name.empty()) name += "+";
    name += summand_label(base, m);
    summands.push_back(summand_label(base, m));
  }
  GramLattice out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  out.name_ = std::move(name);
  std::sort(summands.begin(), summands.end());
  out.summands_ = std::move(summands);
  return out;
}

std::string to_string(FixedLocusKind kind) {
  switch (kind) {
    case FixedLocusKind::Empty: return "Empty";
    case FixedLocusKind::TwoEllipticCurves: return "TwoEllipticCurves";
    case FixedLocusKind::CurveAndRationals: return "CurveAndRationals";
  }
  return "?";
}

int rank(const GramLattice& l) { return l.rank(); }

// Bareiss fraction-free elimination; every division is exact.
Integer determinant(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer determinant(const GramLattice& l) { return determinant(l.gram()); }

// Congruence diagonalisation over Q: pivot on a nonzero diagonal entry, or
// first replace e_i by e_i + e_j to create one.
Signature signature(const GramLattice& l) {
  if (determinant(l) == 0) throw DegenerateLattice("signature of a degenerate lattice");
  auto a = to_rational(l.gram());
  std::vector<std::size_t> alive(a.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  Signature sig;
  while (!alive.empty()) {
    auto pivot_it = std::find_if(alive.begin(), alive.end(), [&](std::size_t i) { return a[i][i] != 0; });
    if (pivot_it == alive.end()) {
      bool made = false;
      for (std::size_t x = 0; x < alive.size() && !made; ++x) {
        for (std::size_t y = x + 1; y < alive.size() && !made; ++y) {
          std::size_t i = alive[x], j = alive[y];
          if (a[i][j] == 0) continue;
          // e_i <- e_i + e_j; the new diagonal entry is 2 a_ij since both diagonals vanish
          for (std::size_t t : alive) a[i][t] += a[j][t];
          for (std::size_t t : alive) a[t][i] += a[t][j];
          made = true;
        }
      }
      if (!made) throw DegenerateLattice("degenerate block during signature computation");
      continue;
    }
    std::size_t p = *pivot_it;
    if (a[p][p] > 0) ++sig.positive; else ++sig.negative;
    alive.erase(pivot_it);
    for (std::size_t r : alive) {
      if (a[r][p] == 0) continue;
      Rational f = a[r][p] / a[p][p];
      for (std::size_t s : alive) a[r][s] -= f * a[p][s];
    }
  }
  return sig;
}

std::vector<Integer> smith_diagonal(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        for (std::size_t r = t; r < std::min(rows, cols); ++r) diag.emplace_back(0);
        return diag;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<Integer> discriminant_group(const GramLattice& l) {
  auto diag = smith_diagonal(l.gram());
  std::vector<Integer> out;
  for (auto& d : diag) {
    if (d == 0) throw DegenerateLattice("discriminant group of a degenerate lattice");
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int two_elementary_a(const GramLattice& l) {
  auto factors = discriminant_group(l);
  for (const auto& f : factors) {
    if (f != 2) throw NotTwoElementary("invariant factor " + to_string(f) + " is not 2");
  }
  return static_cast<int>(factors.size());
}

InvolutionFixedLocus nikulin_fixed_locus(int rank, int a) {
  const int twice_genus = 22 - rank - a;
  const int twice_k = rank - a;
  if (twice_genus < 0 || twice_k < 0 || twice_genus % 2 != 0 || twice_k % 2 != 0) {
    throw InvalidArgument("no involution fixed locus with rank " + std::to_string(rank) + " and a = " + std::to_string(a));
  }
  return {FixedLocusKind::CurveAndRationals, twice_genus / 2, twice_k / 2};
}

InvolutionFixedLocus nikulin_fixed_locus(const GramLattice& l) {
  const int a = two_elementary_a(l);
  const Signature sig = signature(l);
  if (sig.positive != 1) throw InvalidArgument("lattice " + l.name() + " is not hyperbolic");
  const int r = l.rank();
  // Exceptional lattices, recognised structurally: U(2)+E8(2) and U+E8(2).
  const auto& parts = l.summands();
  if (r == 10 && a == 10 && parts == std::vector<std::string>{"E8(2)", "U(2)"}) {
    return {FixedLocusKind::Empty, 0, 0};
  }
  if (r == 10 && a == 8 && parts == std::vector<std::string>{"E8(2)", "U"}) {
    return {FixedLocusKind::TwoEllipticCurves, 0, 0};
  }
  return nikulin_fixed_locus(r, a);
}

}  // namespace k3
