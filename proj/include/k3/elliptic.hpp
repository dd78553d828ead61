#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3/ratpoly.hpp"

namespace k3 {

// y^2 = x^3 + a(t) x + b(t) with deg a <= 8, deg b <= 12.
class WeierstrassModel {
 public:
  WeierstrassModel(RatPoly a, RatPoly b);

  const RatPoly& a() const noexcept { return a_; }
  const RatPoly& b() const noexcept { return b_; }

 private:
  RatPoly a_, b_;
};

// 4a^3 + 27b^2; throws DegenerateModel when it vanishes identically.
RatPoly discriminant(const WeierstrassModel& w);

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

// A rational point, an irreducible-or-squarefree factor of the discriminant,
// or the point at infinity.
using Place = std::variant<Rational, RatPoly, Infinity>;

std::string place_label(const Place& place);

struct VanishingOrders {
  int a = 0, b = 0, delta = 0;
  friend bool operator==(const VanishingOrders&, const VanishingOrders&) = default;
};

// At infinity the model is read in s = 1/t with weights (8, 12, 24). A finite
// place must be a root (or factor) of the discriminant, otherwise InvalidPlace.
VanishingOrders vanishing_orders(const WeierstrassModel& w, const Place& place);

enum class KodairaFamily { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::I;
  int n = 0;           // subscript for I_n and I_n*
  int reductions = 0;  // (4, 6, 12) steps removed before lookup

  std::string label() const;  // "I0*", "IV*", "I1", ...
  int euler() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

// Throws InconsistentOrders when no Kodaira row matches after reduction.
KodairaType kodaira_type(VanishingOrders orders);

struct FiberReport {
  Place place;
  KodairaType type;
  VanishingOrders orders;
  int cluster_degree = 1;  // number of fibers represented, > 1 only for irrational clusters

  int euler() const { return type.euler() * cluster_degree; }
};

// Singular fibers: rational places ascending, then infinity, then clusters of
// simple irrational roots. Throws UnresolvedCluster on a repeated irrational factor.
std::vector<FiberReport> fiber_analysis(const WeierstrassModel& w);

int euler_total(const std::vector<FiberReport>& reports);

}  // namespace k3
