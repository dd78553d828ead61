#include "k3/predicates.hpp"

#include <algorithm>

#include "k3/configuration.hpp"
#include "k3/error.hpp"

namespace k3 {

namespace {

bool even_nonneg(int x) { return x >= 0 && x % 2 == 0; }

bool sigma4_fixes_a_curve(const CandidateRow& row) { return row.k4 >= 1 || row.sigma4_elliptic; }

// sigma-orbits of isolated sigma^2- or sigma^4-fixed points that are not
// sigma-fixed (resp. sigma^2-fixed) have length 2 and carry one local type.
bool induced_points_pair_up(const CandidateRow& row) {
  const auto& n = row.sigma.n;
  const auto& n2 = row.sigma2.n;
  return even_nonneg(n2[0] - n[0] - n[5]) && even_nonneg(n2[1] - n[1] - n[4]) && even_nonneg(n2[2] - n[2] - n[3]) &&
         n[6] % 2 == 0 && even_nonneg(row.N4 - n2[0] - n2[1]);
}

// Isolated sigma^4-fixed points lie on sigma^8-fixed curves: two on each
// sigma^4-invariant rational curve that sigma^4 does not fix, the rest on the
// curve C of positive genus; rational curves swapped by sigma^4 come in a
// number of pairs divisible by 4.
bool interchanged_curves_in_fours(const CandidateRow& row) {
  const int g = row.involution.genus;
  const int rational8 = row.involution.rational_curves + (g == 0 ? 1 : 0);
  if (row.k4 > rational8) return false;
  std::vector<int> on_curve;
  if (g == 0 || row.sigma4_elliptic) {
    on_curve.push_back(0);
  } else {
    for (int f = 0; f <= 2 * g + 2; f += 2)
      for (int h = 0; h <= g; ++h)
        if (rh_fixed_point_feasible(g, 2, f, h, {})) {
          on_curve.push_back(f);
          break;
        }
  }
  for (int f : on_curve) {
    for (int invariant = 0; invariant <= rational8 - row.k4; ++invariant) {
      const int swapped = rational8 - row.k4 - invariant;
      if (swapped % 2 == 0 && (swapped / 2) % 4 == 0 && row.N4 == 2 * invariant + f) return true;
    }
  }
  return false;
}

bool order_four_on_elliptic_curve(const CandidateRow& row) {
  return !row.sigma4_elliptic || row.sigma.n[2] + row.sigma.n[3] >= 2;
}

bool invariant_curve_configuration(const CandidateRow& row) { return find_realization(row) != nullptr; }

}  // namespace

const std::vector<GeometricPredicate>& predicate_catalog() {
  static const std::vector<GeometricPredicate> catalog = {
      {"sigma4_fixes_a_curve", "Fix(sigma^4) contains at least a fixed curve", sigma4_fixes_a_curve},
      {"induced_points_pair_up",
       "n_{4,5} in 2Z (points of this type can occur only on the rational curves); points of type (8,9) are "
       "contained on a fixed curve for sigma^2",
       induced_points_pair_up},
      {"interchanged_curves_in_fours",
       "Let A be the number of pairs of rational curves interchanged by sigma^4 and fixed by sigma^8, then A in 4Z",
       interchanged_curves_in_fours},
      {"order_four_on_elliptic_curve",
       "if g(C) = 1 then sigma acts as an automorphism of order four on C; sigma must have two fixed points on C",
       order_four_on_elliptic_curve},
      {"invariant_curve_configuration",
       "isolated fixed points lie on invariant rational curves with local types (0,1), (15,2), (14,3), ...; "
       "Riemann-Hurwitz formula applied to the automorphism sigma on C",
       invariant_curve_configuration},
  };
  return catalog;
}

std::vector<std::string> all_predicate_ids() {
  std::vector<std::string> ids;
  for (const auto& p : predicate_catalog()) ids.push_back(p.id);
  return ids;
}

const GeometricPredicate& find_predicate(const std::string& id) {
  for (const auto& p : predicate_catalog())
    if (p.id == id) return p;
  throw UnknownPredicate("unknown predicate '" + id + "'");
}

PredicateOutcome apply_predicates(std::vector<CandidateRow> rows, const std::vector<std::string>& ids) {
  std::vector<const GeometricPredicate*> selected;
  for (const auto& id : ids) selected.push_back(&find_predicate(id));
  PredicateOutcome out;
  for (auto& row : rows) {
    const GeometricPredicate* failed = nullptr;
    for (const auto* p : selected) {
      if (!p->holds(row)) {
        failed = p;
        break;
      }
    }
    if (failed != nullptr) {
      out.eliminated.push_back({std::move(row), failed->id});
      continue;
    }
    for (const auto* p : selected) {
      if (std::find(row.predicates.begin(), row.predicates.end(), p->id) == row.predicates.end()) {
        row.predicates.push_back(p->id);
      }
    }
    out.kept.push_back(std::move(row));
  }
  return out;
}

}  // namespace k3
