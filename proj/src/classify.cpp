#include "k3/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <tuple>

#include "k3/error.hpp"
#include "k3/known_tables.hpp"
#include "k3/predicates.hpp"

namespace k3 {

namespace {

constexpr int kMaxCurves = 3;

struct Prefix {
  int m1, m, l;
};

auto sort_key(const CandidateRow& x) {
  return std::make_tuple(x.rank(), -x.N(), x.k(), x.profile, x.sigma, x.sigma2, x.a, x.sigma4_elliptic);
}

void rows_for_prefix(int rank, const Prefix& pre, const std::vector<PointSolution>& sols,
                     const std::vector<Sigma2Solution>& sols2, const std::vector<PicardEntry>& catalog,
                     std::vector<CandidateRow>& out) {
  const int m2 = (22 - rank) / 8;
  const int r = 22 - pre.l - 2 * pre.m - 4 * pre.m1 - 8 * m2;
  if (r < 1) return;
  const EigenvalueProfile profile{r, pre.l, pre.m, pre.m1, m2};
  const EigenvalueProfile p2 = power_profile(profile, 2);
  const EigenvalueProfile p4 = power_profile(profile, 4);

  // sigma^4 has only (2,3) points, so its holomorphic formula gives
  // N4 = 4 + 2 k4 and the topological one N4 = 2 + r4 - l4 - 2 k4.
  const int twice_k4 = p4.r - p4.l - 2;
  if (twice_k4 < 0 || twice_k4 % 4 != 0) return;
  const int k4 = twice_k4 / 4;
  const int N4 = 4 + 2 * k4;

  for (const auto& s : sols) {
    if (s.N() != topological_lefschetz_N(profile, s.k)) continue;
    const auto& n = s.n;
    // Images of sigma-fixed points under type_power_map(., 2).
    const std::array<int, 3> induced{n[0] + n[5], n[1] + n[4], n[2] + n[3]};
    for (const auto& s2 : sols2) {
      if (s2.N() != topological_lefschetz_N(p2, s2.k)) continue;
      if (s2.n[0] < induced[0] || s2.n[1] < induced[1] || s2.n[2] < induced[2]) continue;
      if (n[6] > 0 && s2.k < 1) continue;  // (8,9) points lie on sigma^2-fixed curves
      if (s2.k < s.k) continue;
      if (k4 < s2.k) continue;
      if (N4 < s2.n[0] + s2.n[1]) continue;  // (2,7) and (3,6) points stay isolated for sigma^4
      for (const auto& pic : catalog) {
        const InvolutionFixedLocus inv = nikulin_fixed_locus(rank, pic.a);
        const int rational8 = inv.rational_curves + (inv.genus == 0 ? 1 : 0);
        for (int elliptic = 0; elliptic <= (inv.genus == 1 ? 1 : 0); ++elliptic) {
          if (s2.n[2] > 0 && k4 + elliptic < 1) continue;  // (4,5) points lie on sigma^4-fixed curves
          if (k4 > rational8) continue;
          CandidateRow row;
          row.profile = profile;
          row.sigma = s;
          row.sigma2 = s2;
          row.N4 = N4;
          row.k4 = k4;
          row.sigma4_elliptic = elliptic == 1;
          row.picard = pic.label;
          row.a = pic.a;
          row.involution = inv;
          out.push_back(std::move(row));
        }
      }
    }
  }
}

}  // namespace

const Realization* find_realization(const CandidateRow& row) {
  using Key = std::pair<int, int>;
  static const std::map<Key, std::vector<Realization>> cache = [] {
    std::map<Key, std::vector<Realization>> m;
    for (const auto& e : picard_catalog()) m[{e.rank, e.a}] = realize_configurations(e.rank, e.a);
    return m;
  }();
  auto it = cache.find({row.rank(), row.a});
  if (it == cache.end()) return nullptr;
  const RealizedInvariants key = row.invariants();
  auto hit = std::lower_bound(it->second.begin(), it->second.end(), key,
                              [](const Realization& z, const RealizedInvariants& v) { return z.invariants < v; });
  if (hit == it->second.end() || hit->invariants != key) return nullptr;
  return &*hit;
}

void attach_configurations(std::vector<CandidateRow>& rows) {
  for (auto& row : rows) {
    const Realization* z = find_realization(row);
    if (z == nullptr) continue;
    row.configuration = z->configuration.describe();
    if (z->configuration.curve_genus > 0) {
      row.curve_genus = z->configuration.curve_genus;
      row.points_on_curve = z->configuration.curve_kernel == 1 ? 0 : z->configuration.on_curve[0];
    }
  }
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::PaperRow: return "PaperRow";
    case RowStatus::ArithmeticallyFeasible: return "ArithmeticallyFeasible";
    case RowStatus::ExistenceOpen: return "ExistenceOpen";
  }
  return "?";
}

const std::vector<PicardEntry>& picard_catalog() {
  static const std::vector<PicardEntry> catalog = {
      {6, 2, "U+D4", "U+D4"},
      {6, 4, "U(2)+D4", "U(2)+D4"},
      {6, 6, "2-elementary(6,6)", "U(2)+A1+A1+A1+A1"},
      {14, 2, "U+D4+E8", "U+D4+E8"},
      {14, 4, "U(2)+D4+E8", "U(2)+D4+E8"},
      {14, 6, "2-elementary(14,6)", "U+D4+D4+D4"},
      {14, 8, "2-elementary(14,8)", "U(2)+D4+D4+D4"},
  };
  return catalog;
}

std::vector<PicardEntry> picard_catalog(int rank) {
  std::vector<PicardEntry> out;
  for (const auto& e : picard_catalog())
    if (e.rank == rank) out.push_back(e);
  return out;
}

RealizedInvariants CandidateRow::invariants() const {
  RealizedInvariants z;
  z.profile = profile;
  z.n16 = sigma.n;
  z.k = sigma.k;
  z.n8 = sigma2.n;
  z.k2 = sigma2.k;
  z.N4 = N4;
  z.k4 = k4;
  z.sigma4_elliptic = sigma4_elliptic;
  z.a = a;
  return z;
}

bool row_less(const CandidateRow& x, const CandidateRow& y) { return sort_key(x) < sort_key(y); }

std::vector<CandidateRow> enumerate_profiles(int rank, Exec exec) {
  if (rank != 6 && rank != 14) throw InvalidArgument("rank must be 6 or 14");
  const auto sols = enumerate_point_solutions(kMaxCurves, Exec::Serial);
  const auto sols2 = enumerate_sigma2_solutions(kMaxCurves);
  const auto catalog = picard_catalog(rank);

  std::vector<Prefix> prefixes;
  for (int m1 = 0; 4 * m1 <= rank; ++m1)
    for (int m = 0; 4 * m1 + 2 * m <= rank; ++m)
      for (int l = 0; 4 * m1 + 2 * m + l <= rank; ++l) prefixes.push_back({m1, m, l});

  std::vector<CandidateRow> out;
  if (exec == Exec::Serial) {
    for (const auto& pre : prefixes) rows_for_prefix(rank, pre, sols, sols2, catalog, out);
  } else {
    std::vector<std::vector<CandidateRow>> parts(prefixes.size());
    const int count = static_cast<int>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) rows_for_prefix(rank, prefixes[static_cast<std::size_t>(i)], sols, sols2, catalog,
                                                    parts[static_cast<std::size_t>(i)]);
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(), row_less);
  return out;
}

void annotate_known_rows(std::vector<CandidateRow>& rows) {
  for (auto& row : rows) {
    const KnownRow* known = match_known_row(row);
    if (known == nullptr) {
      row.status = RowStatus::ArithmeticallyFeasible;
      continue;
    }
    row.status = known->status;
    row.picard = known->picard;
    if (known->table_N != known->N) {
      row.table_N = known->table_N;
      row.flags.push_back("table_N_differs_from_topological_N");
    }
    if (known->status == RowStatus::ExistenceOpen) row.flags.push_back("existence_open");
    row.points_on_curve = known->points_on_curve;
    row.curve_genus = known->curve_genus;
    row.invariant_fiber = known->invariant_fiber;
  }
}

std::vector<CandidateRow> classify(int rank, bool geometry, Exec exec) {
  auto rows = enumerate_profiles(rank, exec);
  if (geometry) rows = apply_predicates(std::move(rows), all_predicate_ids()).kept;
  attach_configurations(rows);
  annotate_known_rows(rows);
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

}  // namespace k3
