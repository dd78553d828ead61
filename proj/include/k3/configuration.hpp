#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "k3/lefschetz.hpp"
#include "k3/point_solutions.hpp"

namespace k3 {

// Riemann-Hurwitz for a cyclic group of the given order acting on a curve of
// genus g with quotient of genus h: 2g - 2 = order (2h - 2) + sum over orbits
// of (order / e)(e - 1), where e is the stabiliser order of the orbit. Fixed
// points are the orbits with e = order; branch_orders lists the others.
bool rh_fixed_point_feasible(int g, int order, int fixed_points, int quotient_genus,
                             const std::vector<int>& branch_orders);

// A class of sigma-orbits of rational sigma^8-fixed curves: each curve in the
// orbit has orbit length s and is pointwise fixed by sigma^t (s | t). For
// s = 1, t = 8 the two sigma-fixed points on the curve have types
// (2,15),(3,14) (variant A) or (6,11),(7,10) (variant B).
struct OrbitClass {
  int s = 1;
  int t = 1;
  char variant = ' ';
  std::string label() const;  // "s1t8A"
};

const std::vector<OrbitClass>& orbit_classes();

// How sigma permutes the sigma^8-fixed locus: number of orbits in each
// orbit class, and the action on the curve C of positive genus, if any.
struct Configuration {
  std::vector<int> orbits;     // indexed like orbit_classes()
  int curve_genus = 0;         // 0: no curve of positive genus
  int curve_kernel = 0;        // smallest t with sigma^t fixing C pointwise
  int quotient_genus = 0;      // genus of C / <sigma>
  std::array<int, 3> on_curve{};  // points of C fixed by sigma, sigma^2, sigma^4

  std::string describe() const;
};

// Invariants forced by a configuration that also pass every Lefschetz
// identity at orders 16, 8 and 4.
struct RealizedInvariants {
  EigenvalueProfile profile;
  PointCounts n16{};
  int k = 0;
  Sigma2Counts n8{};
  int k2 = 0;
  int N4 = 0;
  int k4 = 0;
  bool sigma4_elliptic = false;
  int a = 0;

  auto operator<=>(const RealizedInvariants&) const = default;
};

struct Realization {
  RealizedInvariants invariants;
  Configuration configuration;
};

// Every configuration over the involution fixed locus of a 2-elementary
// lattice (rank, a) whose forced fixed loci satisfy the holomorphic and
// topological Lefschetz formulas for sigma, sigma^2 and sigma^4. Sorted by
// invariants, then by configuration description.
std::vector<Realization> realize_configurations(int rank, int a);

}  // namespace k3
