#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/classify.hpp"

namespace k3 {

// One row of the published classification tables, with the fixed-point
// vector stated in the accompanying proofs.
struct KnownRow {
  EigenvalueProfile profile;
  int N = 0;        // from N = 2 + r - l - 2k
  int table_N = 0;  // as printed
  int k = 0;
  int a = 0;
  std::string picard;
  PointCounts points{};
  Sigma2Solution sigma2;  // forced by the sigma^2 relations and the text
  RowStatus status = RowStatus::PaperRow;
  std::optional<int> points_on_curve;
  std::optional<int> curve_genus;
  std::optional<std::string> invariant_fiber;
};

const std::vector<KnownRow>& known_rows();
std::vector<KnownRow> known_rows(int rank);
const KnownRow* match_known_row(const CandidateRow& row);

}  // namespace k3
