#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/configuration.hpp"
#include "k3/exec.hpp"
#include "k3/lattice.hpp"
#include "k3/lefschetz.hpp"
#include "k3/point_solutions.hpp"

namespace k3 {

enum class RowStatus { PaperRow, ArithmeticallyFeasible, ExistenceOpen };

std::string to_string(RowStatus s);

// A 2-elementary hyperbolic lattice that can be the invariant lattice of
// sigma^8. `label` is what reports print; `expression` builds a lattice with
// the same (rank, a) through named_lattice.
struct PicardEntry {
  int rank = 0;
  int a = 0;
  std::string label;
  std::string expression;
};

const std::vector<PicardEntry>& picard_catalog();
std::vector<PicardEntry> picard_catalog(int rank);

struct CandidateRow {
  EigenvalueProfile profile;
  PointSolution sigma;        // isolated sigma-fixed points and fixed rational curves
  Sigma2Solution sigma2;      // the same for sigma^2
  int N4 = 0;                 // isolated sigma^4-fixed points
  int k4 = 0;                 // rational sigma^4-fixed curves
  bool sigma4_elliptic = false;
  std::string picard;
  int a = 0;
  InvolutionFixedLocus involution;

  std::vector<std::string> predicates;  // ids passed, catalog order
  RowStatus status = RowStatus::ArithmeticallyFeasible;

  // Annotations.
  std::optional<int> table_N;              // N as printed in the published table, when it differs
  std::vector<std::string> flags;
  std::optional<int> points_on_curve;      // sigma-fixed points on the curve of positive genus
  std::optional<int> curve_genus;          // genus of the sigma^8-fixed curve of positive genus
  std::optional<std::string> invariant_fiber;  // type of the invariant reducible fiber
  std::optional<std::string> configuration;

  int rank() const { return 22 - 8 * profile.m2; }
  int N() const { return sigma.N(); }
  int k() const { return sigma.k; }
  FixedLocusProfile fixed16() const { return to_fixed_locus(sigma); }
  FixedLocusProfile fixed8() const { return to_fixed_locus(sigma2); }
  RealizedInvariants invariants() const;
};

// Total order used by every report: rank, N descending, k, then the
// remaining fields.
bool row_less(const CandidateRow& x, const CandidateRow& y);

// Arithmetic candidates for Picard rank 6 or 14: every eigenvalue profile
// paired with point solutions for sigma and sigma^2 and sigma^4 data that
// satisfy the Lefschetz relations, the power maps between local types and
// the involution classification. Sorted by row_less.
std::vector<CandidateRow> enumerate_profiles(int rank, Exec exec = Exec::Parallel);

// A configuration of invariant curves realising the row, if any (first in
// realize_configurations order).
const Realization* find_realization(const CandidateRow& row);
// Records the realising configuration, the genus of the curve of positive
// genus and the sigma-fixed points on it.
void attach_configurations(std::vector<CandidateRow>& rows);

// Fills status and annotations from the published tables.
void annotate_known_rows(std::vector<CandidateRow>& rows);

// Candidates after the full predicate catalog (geometry on) or none
// (geometry off), annotated and sorted.
std::vector<CandidateRow> classify(int rank, bool geometry, Exec exec = Exec::Parallel);

}  // namespace k3
