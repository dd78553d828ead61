#pragma once

#include <array>
#include <compare>
#include <vector>

#include "k3/exec.hpp"
#include "k3/lefschetz.hpp"

namespace k3 {

// Counts of isolated sigma-fixed points by type, in the order
// (2,15), (3,14), (4,13), (5,12), (6,11), (7,10), (8,9).
using PointCounts = std::array<int, 7>;
// Counts of isolated sigma^2-fixed points: (2,7), (3,6), (4,5).
using Sigma2Counts = std::array<int, 3>;

struct PointSolution {
  PointCounts n{};
  int k = 0;

  int N() const;
  auto operator<=>(const PointSolution&) const = default;
};

struct Sigma2Solution {
  Sigma2Counts n{};
  int k = 0;

  int N() const;
  auto operator<=>(const Sigma2Solution&) const = default;
};

// All non-negative solutions of the five order-16 relations with k <= max_k
// and N <= max_points, sorted by (N, k, counts).
std::vector<PointSolution> enumerate_point_solutions(int max_k, Exec exec = Exec::Parallel, int max_points = 16);

// All non-negative solutions of the two order-8 relations with k <= max_k and
// N <= max_points, sorted by (N, k, counts).
std::vector<Sigma2Solution> enumerate_sigma2_solutions(int max_k, int max_points = 16);

FixedLocusProfile to_fixed_locus(const PointSolution& s);
FixedLocusProfile to_fixed_locus(const Sigma2Solution& s);

}  // namespace k3
