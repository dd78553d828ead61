#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "k3/cyclo.hpp"

namespace k3 {

// Exponents (j, k) of the linearised action at an isolated fixed point of an
// automorphism of order n acting on the 2-form by z_n. Stored with j <= k.
struct LocalType {
  int order = 16;
  int j = 0;
  int k = 0;

  auto operator<=>(const LocalType&) const = default;
  // "2,15"
  std::string label() const;
};

// Validates 1 <= j, k <= n-1 and j + k = 1 (mod n), n in {4, 8, 16}.
LocalType make_local_type(int order, int j, int k);
// Parses "j,k".
LocalType parse_local_type(int order, std::string_view text);
// All isolated-point types of the given order in ascending j.
std::vector<LocalType> local_types(int order);

// Ranks of the eigenspaces of an automorphism on H^2: r for 1, l for -1,
// m pairs for +-i, m1 quadruples for primitive 8th roots, m2 octets for
// primitive 16th roots.
struct EigenvalueProfile {
  int r = 0;
  int l = 0;
  int m = 0;
  int m1 = 0;
  int m2 = 0;

  int total_rank() const { return r + l + 2 * m + 4 * m1 + 8 * m2; }
  auto operator<=>(const EigenvalueProfile&) const = default;
};

// Throws InvalidArgument unless the profile can belong to a purely
// non-symplectic automorphism of order 16: total rank 22, r >= 1, m2 in {1, 2}.
EigenvalueProfile make_sigma_profile(int r, int l, int m, int m1, int m2);

// Eigenspace ranks of sigma^e, e in {1, 2, 4, 8}.
EigenvalueProfile power_profile(const EigenvalueProfile& p, int e);

struct FixedLocusProfile {
  int order = 16;
  std::map<LocalType, int> points;
  int rational_curves = 0;
  std::vector<int> genera;  // fixed curves of positive genus

  int isolated_points() const;
  int count(int j, int k) const;
};

// Builds a profile from counts listed in local_types(order) order.
FixedLocusProfile make_fixed_locus(int order, const std::vector<int>& counts, int rational_curves,
                                   std::vector<int> genera = {});

// 2 + r - l - sum over fixed curves of (2 - 2g).
int topological_lefschetz_N(const EigenvalueProfile& p, int rational_curves, const std::vector<int>& genera = {});

Cyclo16 holomorphic_point_term(const LocalType& t);
// (1-g)/(1-w) - w(2g-2)/(1-w)^2 with w the primitive n-th root z^(16/n).
Cyclo16 holomorphic_curve_term(int genus, int order);
// 1 + w^{-1}.
Cyclo16 holomorphic_lefschetz_number(int order);
// Sum of local contributions minus the Lefschetz number; zero iff the
// holomorphic fixed-point identity holds.
Cyclo16 holomorphic_residual(const FixedLocusProfile& f);

// Order 16: flags for the seven linear relations, in the order
//   n215 - n710 + n89 = 1 + 2k
//   n215 - n314 + n413 - n512 + n611 - n710 + n89 = 2k
//   n413 + n512 - 2 n611 + 2 n710 - n89 = 2k
//   2 n314 - 2 n413 + 2 n611 - n89 = 2k
//   n314 - n413 + n512 - n611 = 1
//   N = n314 + n413 + n512 + n611 + 2 n710 + 2k + 1
//   N = 2 n314 + 2 n512 + 2 n710 + 2k
std::vector<bool> derived_equations_16(const FixedLocusProfile& f);
// Order 8: n27 + n36 = 2 + 4k, n45 + n27 - n36 = 2 + 2k.
std::vector<bool> derived_equations_8(const FixedLocusProfile& f);

struct OnFixedCurve {
  auto operator<=>(const OnFixedCurve&) const = default;
};
using PoweredType = std::variant<LocalType, OnFixedCurve>;

// Local type of the same point for sigma^e (e a power of two with
// order / e >= 4); OnFixedCurve when an exponent becomes 0.
PoweredType type_power_map(const LocalType& t, int e);

// A point on a chain of invariant curves: ordered exponents mod n, where
// (0,1) and (1,0) mark points on a fixed curve.
struct ChainPoint {
  int order = 16;
  int j = 0;
  int k = 1;
  auto operator<=>(const ChainPoint&) const = default;
  std::string label() const;  // "(15,2)"
};

ChainPoint make_chain_point(int order, int j, int k);
ChainPoint chain_next(const ChainPoint& p);
std::vector<ChainPoint> chain_sequence(const ChainPoint& start, int steps);

}  // namespace k3
