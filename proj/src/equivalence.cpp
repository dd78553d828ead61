#include "k3/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "k3/error.hpp"

namespace k3 {

namespace {

std::array<std::int64_t, 8> scaled(const Cyclo16& x, const Integer& denominator) {
  std::array<std::int64_t, 8> out{};
  for (int i = 0; i < Cyclo16::kDegree; ++i) {
    Rational v = x.coeff(i) * denominator;
    if (!is_integer(v) || !v.get_num().fits_slong_p()) throw InvalidArgument("residual coefficients overflow");
    out[static_cast<std::size_t>(i)] = v.get_num().get_si();
  }
  return out;
}

struct ScanResult {
  std::int64_t checked = 0;
  std::int64_t residual_zero = 0;
  std::int64_t equations_hold = 0;
  std::vector<EquivalenceMismatch> mismatches;
};

// Decodes idx in mixed radix: counts in [0, bound], then k in [0, max_k].
void decode(std::int64_t idx, int dims, int bound, int* counts, int& k) {
  for (int d = dims - 1; d >= 0; --d) {
    counts[d] = static_cast<int>(idx % (bound + 1));
    idx /= bound + 1;
  }
  k = static_cast<int>(idx);
}

void scan(const IntegerResidual& res, int bound, std::int64_t begin, std::int64_t end, ScanResult& out) {
  const int dims = static_cast<int>(res.point.size());
  int counts[8] = {};
  int k = 0;
  for (std::int64_t idx = begin; idx < end; ++idx) {
    decode(idx, dims, bound, counts, k);
    const bool zero = res.is_zero(counts, k);
    const bool hold = linear_relations_hold(res.order, counts, k);
    ++out.checked;
    out.residual_zero += zero;
    out.equations_hold += hold;
    if (zero != hold) out.mismatches.push_back({std::vector<int>(counts, counts + dims), k, zero, hold});
  }
}

}  // namespace

bool IntegerResidual::is_zero(const int* counts, int k) const {
  for (std::size_t i = 0; i < 8; ++i) {
    std::int64_t v = k * curve[i] - constant[i];
    for (std::size_t t = 0; t < point.size(); ++t) v += counts[t] * point[t][i];
    if (v != 0) return false;
  }
  return true;
}

IntegerResidual integer_residual(int order) {
  auto types = local_types(order);
  std::vector<Cyclo16> terms;
  for (const auto& t : types) terms.push_back(holomorphic_point_term(t));
  terms.push_back(holomorphic_curve_term(0, order));
  terms.push_back(holomorphic_lefschetz_number(order));

  Integer denominator = 1;
  for (const auto& x : terms)
    for (const auto& c : x.coeffs()) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
  if (!denominator.fits_slong_p()) throw InvalidArgument("residual denominator overflow");

  IntegerResidual res;
  res.order = order;
  res.denominator = denominator.get_si();
  for (std::size_t i = 0; i < types.size(); ++i) res.point.push_back(scaled(terms[i], denominator));
  res.curve = scaled(terms[types.size()], denominator);
  res.constant = scaled(terms[types.size() + 1], denominator);
  return res;
}

bool linear_relations_hold(int order, const int* n, int k) {
  if (order == 16) {
    const int a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], g = n[5], h = n[6];
    return a - g + h == 1 + 2 * k && a - b + c - d + e - g + h == 2 * k && c + d - 2 * e + 2 * g - h == 2 * k &&
           2 * b - 2 * c + 2 * e - h == 2 * k;
  }
  if (order == 8) {
    const int a = n[0], b = n[1], c = n[2];
    return a + b == 2 + 4 * k && c + a - b == 2 + 2 * k;
  }
  throw InvalidArgument("equivalence check supports orders 8 and 16");
}

EquivalenceReport verify_equivalence(int order, int bound, int max_k, Exec exec) {
  if (order != 8 && order != 16) throw InvalidArgument("equivalence check supports orders 8 and 16");
  if (bound < 0 || max_k < 0) throw InvalidArgument("bounds must be non-negative");
  const IntegerResidual res = integer_residual(order);
  const int dims = static_cast<int>(res.point.size());
  std::int64_t total = max_k + 1;
  for (int d = 0; d < dims; ++d) {
    if (total > std::numeric_limits<std::int64_t>::max() / (bound + 1)) throw InvalidArgument("search space too large");
    total *= bound + 1;
  }

  ScanResult merged;
  if (exec == Exec::Serial) {
    scan(res, bound, 0, total, merged);
  } else {
    const std::int64_t chunk = 1 << 14;
    const std::int64_t chunks = (total + chunk - 1) / chunk;
#pragma omp parallel
    {
      ScanResult local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::int64_t c = 0; c < chunks; ++c) scan(res, bound, c * chunk, std::min(total, (c + 1) * chunk), local);
#pragma omp critical(k3_equivalence_merge)
      {
        merged.checked += local.checked;
        merged.residual_zero += local.residual_zero;
        merged.equations_hold += local.equations_hold;
        merged.mismatches.insert(merged.mismatches.end(), local.mismatches.begin(), local.mismatches.end());
      }
    }
  }

  std::sort(merged.mismatches.begin(), merged.mismatches.end(), [](const auto& x, const auto& y) {
    return std::tie(x.k, x.counts) < std::tie(y.k, y.counts);
  });
  EquivalenceReport report;
  report.order = order;
  report.bound = bound;
  report.max_k = max_k;
  report.checked = merged.checked;
  report.residual_zero = merged.residual_zero;
  report.equations_hold = merged.equations_hold;
  report.mismatches = std::move(merged.mismatches);
  return report;
}

}  // namespace k3
