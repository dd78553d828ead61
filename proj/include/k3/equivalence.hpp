#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3/cyclo.hpp"
#include "k3/exec.hpp"
#include "k3/lefschetz.hpp"

namespace k3 {

// One count vector where the holomorphic residual and the linear relations
// disagree.
struct EquivalenceMismatch {
  std::vector<int> counts;  // local_types(order) order
  int k = 0;
  bool residual_zero = false;
  bool equations_hold = false;
};

struct EquivalenceReport {
  int order = 16;
  int bound = 6;
  int max_k = 3;
  std::int64_t checked = 0;
  std::int64_t residual_zero = 0;
  std::int64_t equations_hold = 0;
  std::vector<EquivalenceMismatch> mismatches;  // sorted by (k, counts)

  bool equivalent() const { return mismatches.empty(); }
};

// The holomorphic residual scaled to integers: residual * denominator equals
// sum_t counts[t] * point[t] + k * curve - constant, coordinate-wise.
struct IntegerResidual {
  int order = 16;
  std::int64_t denominator = 1;
  std::vector<std::array<std::int64_t, 8>> point;
  std::array<std::int64_t, 8> curve{};
  std::array<std::int64_t, 8> constant{};

  bool is_zero(const int* counts, int k) const;
};

IntegerResidual integer_residual(int order);

// The linear relations that are claimed equivalent to the residual vanishing:
// the first four order-16 relations, or the first two order-8 relations.
bool linear_relations_hold(int order, const int* counts, int k);

// Checks every count vector with entries in 0..bound and k in 0..max_k.
EquivalenceReport verify_equivalence(int order, int bound, int max_k, Exec exec);

}  // namespace k3
