#include "k3/point_solutions.hpp"

#include <algorithm>
#include <numeric>

#include "k3/error.hpp"

namespace k3 {

namespace {

bool relations_16(const PointCounts& n, int k) {
  const auto [a, b, c, d, e, g, h] = n;
  return a - g + h == 1 + 2 * k && a - b + c - d + e - g + h == 2 * k && c + d - 2 * e + 2 * g - h == 2 * k &&
         2 * b - 2 * c + 2 * e - h == 2 * k && b - c + d - e == 1;
}

// Fills positions pos..6 with every completion whose total stays <= budget.
void extend(PointCounts& n, int pos, int budget, int k, std::vector<PointSolution>& out) {
  if (pos == 7) {
    if (relations_16(n, k)) out.push_back({n, k});
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    n[static_cast<std::size_t>(pos)] = v;
    extend(n, pos + 1, budget - v, k, out);
  }
  n[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

int PointSolution::N() const { return std::accumulate(n.begin(), n.end(), 0); }
int Sigma2Solution::N() const { return std::accumulate(n.begin(), n.end(), 0); }

std::vector<PointSolution> enumerate_point_solutions(int max_k, Exec exec, int max_points) {
  if (max_k < 0 || max_points < 0) throw InvalidArgument("bounds must be non-negative");
  std::vector<PointSolution> out;
  const int first_values = max_points + 1;
  const int tasks = (max_k + 1) * first_values;
  if (exec == Exec::Serial) {
    for (int t = 0; t < tasks; ++t) {
      PointCounts n{};
      n[0] = t % first_values;
      extend(n, 1, max_points - n[0], t / first_values, out);
    }
  } else {
#pragma omp parallel
    {
      std::vector<PointSolution> local;
#pragma omp for schedule(dynamic, 1) nowait
      for (int t = 0; t < tasks; ++t) {
        PointCounts n{};
        n[0] = t % first_values;
        extend(n, 1, max_points - n[0], t / first_values, local);
      }
#pragma omp critical(k3_point_merge)
      out.insert(out.end(), local.begin(), local.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const PointSolution& x, const PointSolution& y) {
    const int nx = x.N(), ny = y.N();
    if (nx != ny) return nx < ny;
    return x < y;
  });
  return out;
}

std::vector<Sigma2Solution> enumerate_sigma2_solutions(int max_k, int max_points) {
  if (max_k < 0 || max_points < 0) throw InvalidArgument("bounds must be non-negative");
  std::vector<Sigma2Solution> out;
  for (int k = 0; k <= max_k; ++k)
    for (int a = 0; a <= max_points; ++a)
      for (int b = 0; a + b <= max_points; ++b)
        for (int c = 0; a + b + c <= max_points; ++c)
          if (a + b == 2 + 4 * k && c + a - b == 2 + 2 * k) out.push_back({{a, b, c}, k});
  std::sort(out.begin(), out.end(), [](const Sigma2Solution& x, const Sigma2Solution& y) {
    const int nx = x.N(), ny = y.N();
    if (nx != ny) return nx < ny;
    return x < y;
  });
  return out;
}

FixedLocusProfile to_fixed_locus(const PointSolution& s) {
  return make_fixed_locus(16, std::vector<int>(s.n.begin(), s.n.end()), s.k);
}

FixedLocusProfile to_fixed_locus(const Sigma2Solution& s) {
  return make_fixed_locus(8, std::vector<int>(s.n.begin(), s.n.end()), s.k);
}

}  // namespace k3
