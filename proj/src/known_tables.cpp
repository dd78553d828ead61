#include "k3/known_tables.hpp"

namespace k3 {

const std::vector<KnownRow>& known_rows() {
  // clang-format off
  static const std::vector<KnownRow> rows = {
      // rank 6
      {{6, 0, 0, 0, 2}, 6, 6, 1, 2, "U+D4",       {4, 1, 0, 0, 0, 1, 0}, {{5, 1, 0}, 1}, RowStatus::PaperRow, 4, 7, std::nullopt},
      {{4, 2, 0, 0, 2}, 4, 4, 0, 4, "U(2)+D4",    {0, 1, 0, 0, 0, 1, 2}, {{5, 1, 0}, 1}, RowStatus::PaperRow, 2, 6, std::nullopt},
      // rank 14, sigma^4 fixes an elliptic curve
      {{9, 1, 0, 1, 1}, 8, 8, 1, 6, "2-elementary(14,6)", {3, 3, 2, 0, 0, 0, 0}, {{3, 3, 4}, 1}, RowStatus::PaperRow, 2, 1, "IV*"},
      {{7, 3, 0, 1, 1}, 6, 6, 0, 6, "2-elementary(14,6)", {0, 0, 0, 2, 1, 1, 2}, {{3, 3, 4}, 1}, RowStatus::PaperRow, 2, 1, "IV*"},
      // rank 14, sigma^8 fixes a curve of genus > 1; the printed N column
      // disagrees with N = 2 + r - l - 2k in all three rows
      {{13, 1, 0, 0, 1}, 12, 10, 1, 2, "U+D4+E8",    {3, 2, 1, 1, 1, 2, 2}, {{7, 3, 2}, 2}, RowStatus::PaperRow, 2, 3, std::nullopt},
      {{11, 1, 1, 0, 1}, 10, 8, 1, 4, "U(2)+D4+E8",  {3, 2, 2, 2, 1, 0, 0}, {{3, 3, 4}, 1}, RowStatus::ExistenceOpen, 2, 2, std::nullopt},
      {{7, 5, 1, 0, 1}, 4, 2, 0, 4, "U(2)+D4+E8",    {0, 1, 0, 0, 0, 1, 2}, {{3, 3, 4}, 1}, RowStatus::PaperRow, 2, 2, std::nullopt},
  };
  // clang-format on
  return rows;
}

std::vector<KnownRow> known_rows(int rank) {
  std::vector<KnownRow> out;
  for (const auto& row : known_rows())
    if (22 - 8 * row.profile.m2 == rank) out.push_back(row);
  return out;
}

const KnownRow* match_known_row(const CandidateRow& row) {
  for (const auto& known : known_rows()) {
    if (known.profile == row.profile && known.k == row.k() && known.N == row.N() && known.a == row.a &&
        known.points == row.sigma.n && known.sigma2 == row.sigma2 &&
        known.invariant_fiber.has_value() == row.sigma4_elliptic) {
      return &known;
    }
  }
  return nullptr;
}

}  // namespace k3
