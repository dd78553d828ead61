#include "k3/configuration.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "k3/equivalence.hpp"
#include "k3/error.hpp"
#include "k3/lattice.hpp"

namespace k3 {

namespace {

// Indices into PointCounts.
enum : std::size_t { k215, k314, k413, k512, k611, k710, k89 };
// Indices into Sigma2Counts.
enum : std::size_t { k27, k36, k45 };

struct Contribution {
  PointCounts n16{};
  Sigma2Counts n8{};
  int n4 = 0;
  int curves1 = 0;
  int curves2 = 0;
  int curves4 = 0;
};

Contribution rational_contribution(const std::vector<int>& orbits) {
  Contribution c;
  const auto& classes = orbit_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const int count = orbits[i];
    if (count == 0) continue;
    const auto& oc = classes[i];
    const int curves = oc.s * count;
    if (oc.t <= 1) c.curves1 += curves;
    if (oc.t <= 2) c.curves2 += curves;
    if (oc.t <= 4) c.curves4 += curves;
    // Each invariant, non-fixed curve carries exactly two fixed points.
    if (oc.s == 1 && oc.t > 1) {
      if (oc.t == 2) {
        c.n16[k89] += 2 * count;
      } else if (oc.t == 4) {
        c.n16[k413] += count;
        c.n16[k512] += count;
      } else if (oc.variant == 'A') {
        c.n16[k215] += count;
        c.n16[k314] += count;
      } else {
        c.n16[k611] += count;
        c.n16[k710] += count;
      }
    }
    if (oc.s <= 2 && oc.t > 2) {
      if (oc.t == 4) {
        c.n8[k45] += 2 * curves;
      } else {
        c.n8[k27] += curves;
        c.n8[k36] += curves;
      }
    }
    if (oc.s <= 4 && oc.t > 4) c.n4 += 2 * curves;
  }
  return c;
}

struct CurveAction {
  int kernel = 0;
  int quotient_genus = 0;
  std::array<int, 3> fixed{};
  Contribution points;
};

// Every action of sigma on a curve C of genus g >= 1 fixed by sigma^8, with
// the isolated fixed points it places on C at each level.
std::vector<CurveAction> curve_actions(int g) {
  std::vector<CurveAction> out;
  if (g < 1) return out;
  out.push_back({1, 0, {}, {}});
  const int max_fixed = 2 * g + 2;
  for (int h = 0; h <= g; ++h) {
    for (int f1 = 0; f1 <= max_fixed; ++f1) {
      if (rh_fixed_point_feasible(g, 2, f1, h, {})) {
        CurveAction a{2, h, {f1, f1, f1}, {}};
        a.points.n16[k89] = f1;
        out.push_back(a);
      }
      for (int f2 = f1; f2 <= max_fixed; f2 += 2) {
        if (rh_fixed_point_feasible(g, 4, f1, h, std::vector<int>((f2 - f1) / 2, 2))) {
          for (int x = 0; x <= f1; ++x) {
            CurveAction a{4, h, {f1, f2, f2}, {}};
            a.points.n16[k413] = x;
            a.points.n16[k512] = f1 - x;
            a.points.n8[k45] = f2;
            out.push_back(a);
          }
        }
        for (int f4 = f2; f4 <= max_fixed; f4 += 4) {
          std::vector<int> branches((f2 - f1) / 2, 4);
          branches.insert(branches.end(), (f4 - f2) / 4, 2);
          if (!rh_fixed_point_feasible(g, 8, f1, h, branches)) continue;
          const int pairs = (f2 - f1) / 2;
          for (int x215 = 0; x215 <= f1; ++x215)
            for (int x314 = 0; x215 + x314 <= f1; ++x314)
              for (int x611 = 0; x215 + x314 + x611 <= f1; ++x611)
                for (int y = 0; y <= pairs; ++y) {
                  const int x710 = f1 - x215 - x314 - x611;
                  CurveAction a{8, h, {f1, f2, f4}, {}};
                  a.points.n16[k215] = x215;
                  a.points.n16[k314] = x314;
                  a.points.n16[k611] = x611;
                  a.points.n16[k710] = x710;
                  a.points.n8[k27] = x215 + x710 + 2 * y;
                  a.points.n8[k36] = x314 + x611 + 2 * (pairs - y);
                  a.points.n4 = f4;
                  out.push_back(a);
                }
        }
      }
    }
  }
  return out;
}

void orbit_multisets(std::size_t i, int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  const auto& classes = orbit_classes();
  if (i == classes.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int s = classes[i].s;
  for (int c = 0; c * s <= remaining; ++c) {
    current[i] = c;
    orbit_multisets(i + 1, remaining - c * s, current, out);
  }
  current[i] = 0;
}

int exact_div(int a, int b, bool& ok) {
  if (a % b != 0) ok = false;
  return a / b;
}

}  // namespace

bool rh_fixed_point_feasible(int g, int order, int fixed_points, int quotient_genus,
                             const std::vector<int>& branch_orders) {
  if (order < 2) throw InvalidArgument("order must be at least 2");
  if (g < 0 || fixed_points < 0 || quotient_genus < 0) throw InvalidArgument("genera and counts must be non-negative");
  int rhs = order * (2 * quotient_genus - 2) + fixed_points * (order - 1);
  for (int e : branch_orders) {
    if (e < 2 || order % e != 0) throw InvalidArgument("branch orders must be divisors of the order greater than 1");
    rhs += (order / e) * (e - 1);
  }
  return 2 * g - 2 == rhs;
}

std::string OrbitClass::label() const {
  std::string out = "s" + std::to_string(s) + "t" + std::to_string(t);
  if (variant != ' ') out.push_back(variant);
  return out;
}

const std::vector<OrbitClass>& orbit_classes() {
  static const std::vector<OrbitClass> classes = {
      {1, 1, ' '}, {1, 2, ' '}, {1, 4, ' '}, {1, 8, 'A'}, {1, 8, 'B'}, {2, 2, ' '},
      {2, 4, ' '}, {2, 8, ' '}, {4, 4, ' '}, {4, 8, ' '}, {8, 8, ' '},
  };
  return classes;
}

std::string Configuration::describe() const {
  std::ostringstream os;
  os << "orbits{";
  bool first = true;
  const auto& classes = orbit_classes();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << classes[i].label() << ':' << orbits[i];
  }
  os << '}';
  if (curve_genus > 0) {
    os << " C{g=" << curve_genus << ",t=" << curve_kernel;
    if (curve_kernel > 1) {
      os << ",h=" << quotient_genus << ",fixed=" << on_curve[0] << '/' << on_curve[1] << '/' << on_curve[2];
    }
    os << '}';
  }
  return os.str();
}

std::vector<Realization> realize_configurations(int rank, int a) {
  if (rank != 6 && rank != 14) throw InvalidArgument("rank must be 6 or 14");
  const InvolutionFixedLocus inv = nikulin_fixed_locus(rank, a);
  const int g = inv.genus;
  const int rational = inv.rational_curves + (g == 0 ? 1 : 0);
  const int m2 = (22 - rank) / 8;

  const IntegerResidual res16 = integer_residual(16);
  const IntegerResidual res8 = integer_residual(8);
  const IntegerResidual res4 = integer_residual(4);

  std::vector<std::vector<int>> multisets;
  std::vector<int> current(orbit_classes().size(), 0);
  orbit_multisets(0, rational, current, multisets);

  std::vector<CurveAction> actions = curve_actions(g);
  if (g == 0) actions.push_back({0, 0, {}, {}});

  std::vector<Realization> out;
  for (const auto& orbits : multisets) {
    const Contribution base = rational_contribution(orbits);
    for (const auto& act : actions) {
      Contribution c = base;
      for (std::size_t i = 0; i < c.n16.size(); ++i) c.n16[i] += act.points.n16[i];
      for (std::size_t i = 0; i < c.n8.size(); ++i) c.n8[i] += act.points.n8[i];
      c.n4 += act.points.n4;

      // Curve of genus g counted with weight 1 - g in the holomorphic formula
      // and Euler characteristic 2 - 2g in the topological one.
      const bool fixed1 = act.kernel == 1, fixed2 = act.kernel >= 1 && act.kernel <= 2,
                 fixed4 = act.kernel >= 1 && act.kernel <= 4;
      const int keff1 = c.curves1 + (fixed1 ? 1 - g : 0);
      const int keff2 = c.curves2 + (fixed2 ? 1 - g : 0);
      const int keff4 = c.curves4 + (fixed4 ? 1 - g : 0);
      if (!res16.is_zero(c.n16.data(), keff1)) continue;
      if (!res8.is_zero(c.n8.data(), keff2)) continue;
      if (!res4.is_zero(&c.n4, keff4)) continue;

      int n1 = 0, n2 = 0;
      for (int v : c.n16) n1 += v;
      for (int v : c.n8) n2 += v;
      const int d1 = n1 + 2 * keff1 - 2;
      const int d2 = n2 + 2 * keff2 - 2;
      const int d4 = c.n4 + 2 * keff4 - 2;
      bool ok = true;
      const int m1 = exact_div(rank - d4, 8, ok);
      const int q = rank - 4 * m1;
      const int m = exact_div(q - d2, 4, ok);
      const int p = q - 2 * m;
      const int l = exact_div(p - d1, 2, ok);
      const int r = p - l;
      if (!ok || m1 < 0 || m < 0 || l < 0 || r < 1) continue;

      Realization z;
      z.invariants.profile = {r, l, m, m1, m2};
      z.invariants.n16 = c.n16;
      z.invariants.k = c.curves1;
      z.invariants.n8 = c.n8;
      z.invariants.k2 = c.curves2;
      z.invariants.N4 = c.n4;
      z.invariants.k4 = c.curves4;
      z.invariants.sigma4_elliptic = g == 1 && fixed4;
      z.invariants.a = a;
      z.configuration.orbits = orbits;
      z.configuration.curve_genus = g;
      z.configuration.curve_kernel = act.kernel;
      z.configuration.quotient_genus = act.quotient_genus;
      z.configuration.on_curve = act.fixed;
      out.push_back(std::move(z));
    }
  }
  std::sort(out.begin(), out.end(), [](const Realization& x, const Realization& y) {
    if (x.invariants != y.invariants) return x.invariants < y.invariants;
    return x.configuration.describe() < y.configuration.describe();
  });
  return out;
}

}  // namespace k3
