#include "k3/lefschetz.hpp"

#include <algorithm>

#include "k3/error.hpp"

namespace k3 {

namespace {

bool supported_order(int n) { return n == 4 || n == 8 || n == 16; }

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

Cyclo16 one_minus(const Cyclo16& x) { return Cyclo16(1) - x; }

}  // namespace

std::string LocalType::label() const { return std::to_string(j) + "," + std::to_string(k); }

LocalType make_local_type(int order, int j, int k) {
  if (!supported_order(order)) throw InvalidArgument("local type order must be 4, 8 or 16");
  if (j < 1 || j > order - 1 || k < 1 || k > order - 1) {
    throw InvalidArgument("local type exponents must lie in 1.." + std::to_string(order - 1));
  }
  if (mod(j + k, order) != 1) {
    throw InvalidArgument("local type (" + std::to_string(j) + "," + std::to_string(k) + ") violates j + k = 1 mod " +
                          std::to_string(order));
  }
  return {order, std::min(j, k), std::max(j, k)};
}

LocalType parse_local_type(int order, std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected j,k", 0);
  auto to_int = [](std::string_view s, std::size_t offset) {
    std::string t(s);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer", offset);
    }
    if (used != t.size()) throw ParseError("trailing characters", offset + used);
    return v;
  };
  return make_local_type(order, to_int(text.substr(0, comma), 0), to_int(text.substr(comma + 1), comma + 1));
}

std::vector<LocalType> local_types(int order) {
  if (!supported_order(order)) throw InvalidArgument("local type order must be 4, 8 or 16");
  std::vector<LocalType> out;
  for (int j = 2; 2 * j <= order + 1; ++j) out.push_back(make_local_type(order, j, order + 1 - j));
  return out;
}

EigenvalueProfile make_sigma_profile(int r, int l, int m, int m1, int m2) {
  EigenvalueProfile p{r, l, m, m1, m2};
  if (std::min({l, m, m1}) < 0) throw InvalidArgument("eigenspace ranks must be non-negative");
  if (r < 1) throw InvalidArgument("r must be positive (an ample class is invariant)");
  if (m2 != 1 && m2 != 2) throw InvalidArgument("m2 must be 1 or 2");
  if (p.total_rank() != 22) throw InvalidArgument("eigenspace ranks must add up to 22");
  return p;
}

EigenvalueProfile power_profile(const EigenvalueProfile& p, int e) {
  switch (e) {
    case 1: return p;
    case 2: return {p.r + p.l, 2 * p.m, 2 * p.m1, 2 * p.m2, 0};
    case 4: return {p.r + p.l + 2 * p.m, 4 * p.m1, 4 * p.m2, 0, 0};
    case 8: return {p.r + p.l + 2 * p.m + 4 * p.m1, 8 * p.m2, 0, 0, 0};
    default: throw InvalidArgument("power must be 1, 2, 4 or 8");
  }
}

int FixedLocusProfile::isolated_points() const {
  int n = 0;
  for (const auto& [t, c] : points) n += c;
  return n;
}

int FixedLocusProfile::count(int j, int k) const {
  auto it = points.find(make_local_type(order, j, k));
  return it == points.end() ? 0 : it->second;
}

FixedLocusProfile make_fixed_locus(int order, const std::vector<int>& counts, int rational_curves,
                                   std::vector<int> genera) {
  auto types = local_types(order);
  if (counts.size() != types.size()) {
    throw InvalidArgument("expected " + std::to_string(types.size()) + " point counts for order " + std::to_string(order));
  }
  if (rational_curves < 0) throw InvalidArgument("negative curve count");
  FixedLocusProfile f;
  f.order = order;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (counts[i] < 0) throw InvalidArgument("negative point count");
    if (counts[i] > 0) f.points[types[i]] = counts[i];
  }
  f.rational_curves = rational_curves;
  for (int g : genera) {
    if (g < 1) throw InvalidArgument("listed fixed curve genera must be positive");
  }
  f.genera = std::move(genera);
  return f;
}

int topological_lefschetz_N(const EigenvalueProfile& p, int rational_curves, const std::vector<int>& genera) {
  int chi = 2 * rational_curves;
  for (int g : genera) chi += 2 - 2 * g;
  return 2 + p.r - p.l - chi;
}

Cyclo16 holomorphic_point_term(const LocalType& t) {
  const Cyclo16 a = one_minus(Cyclo16::root_of_unity(t.order, t.j));
  const Cyclo16 b = one_minus(Cyclo16::root_of_unity(t.order, t.k));
  return (a * b).inverse();
}

Cyclo16 holomorphic_curve_term(int genus, int order) {
  if (!supported_order(order)) throw InvalidArgument("order must be 4, 8 or 16");
  const Cyclo16 w = Cyclo16::root_of_unity(order, 1);
  const Cyclo16 inv = one_minus(w).inverse();
  return Rational(1 - genus) * inv - Rational(2 * genus - 2) * (w * inv * inv);
}

Cyclo16 holomorphic_lefschetz_number(int order) {
  if (!supported_order(order)) throw InvalidArgument("order must be 4, 8 or 16");
  return Cyclo16(1) + Cyclo16::root_of_unity(order, -1);
}

Cyclo16 holomorphic_residual(const FixedLocusProfile& f) {
  Cyclo16 sum;
  for (const auto& [t, c] : f.points) {
    if (t.order != f.order) throw InvalidArgument("point type order differs from profile order");
    sum += Rational(c) * holomorphic_point_term(t);
  }
  if (f.rational_curves != 0) sum += Rational(f.rational_curves) * holomorphic_curve_term(0, f.order);
  for (int g : f.genera) sum += holomorphic_curve_term(g, f.order);
  return sum - holomorphic_lefschetz_number(f.order);
}

std::vector<bool> derived_equations_16(const FixedLocusProfile& f) {
  if (f.order != 16) throw InvalidArgument("order-16 relations need an order-16 profile");
  const int a = f.count(2, 15), b = f.count(3, 14), c = f.count(4, 13), d = f.count(5, 12);
  const int e = f.count(6, 11), g = f.count(7, 10), h = f.count(8, 9);
  const int k = f.rational_curves;
  const int n = f.isolated_points();
  return {
      a - g + h == 1 + 2 * k,
      a - b + c - d + e - g + h == 2 * k,
      c + d - 2 * e + 2 * g - h == 2 * k,
      2 * b - 2 * c + 2 * e - h == 2 * k,
      b - c + d - e == 1,
      n == b + c + d + e + 2 * g + 2 * k + 1,
      n == 2 * b + 2 * d + 2 * g + 2 * k,
  };
}

std::vector<bool> derived_equations_8(const FixedLocusProfile& f) {
  if (f.order != 8) throw InvalidArgument("order-8 relations need an order-8 profile");
  const int a = f.count(2, 7), b = f.count(3, 6), c = f.count(4, 5);
  const int k = f.rational_curves;
  return {a + b == 2 + 4 * k, c + a - b == 2 + 2 * k};
}

PoweredType type_power_map(const LocalType& t, int e) {
  if (e < 1 || (e & (e - 1)) != 0 || t.order % e != 0 || t.order / e < 4) {
    throw InvalidArgument("power " + std::to_string(e) + " not supported at order " + std::to_string(t.order));
  }
  const int n = t.order / e;
  const int j = t.j % n, k = t.k % n;
  if (j == 0 || k == 0) return OnFixedCurve{};
  return make_local_type(n, j, k);
}

std::string ChainPoint::label() const { return "(" + std::to_string(j) + "," + std::to_string(k) + ")"; }

ChainPoint make_chain_point(int order, int j, int k) {
  if (!supported_order(order)) throw InvalidArgument("chain order must be 4, 8 or 16");
  ChainPoint p{order, mod(j, order), mod(k, order)};
  if (mod(p.j + p.k, order) != 1) {
    throw InvalidArgument("chain point " + p.label() + " violates j + k = 1 mod " + std::to_string(order));
  }
  return p;
}

ChainPoint chain_next(const ChainPoint& p) { return {p.order, mod(p.j - 1, p.order), mod(p.k + 1, p.order)}; }

std::vector<ChainPoint> chain_sequence(const ChainPoint& start, int steps) {
  if (steps < 0) throw InvalidArgument("steps must be non-negative");
  std::vector<ChainPoint> out{start};
  for (int i = 0; i < steps; ++i) out.push_back(chain_next(out.back()));
  return out;
}

}  // namespace k3
