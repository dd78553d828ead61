#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "k3/classify.hpp"
#include "k3/elliptic.hpp"
#include "k3/equivalence.hpp"
#include "k3/lattice.hpp"

namespace k3 {

enum class Format { Text, Json, Csv };

// "text", "json" or "csv"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

struct RankReport {
  int rank = 0;
  std::vector<CandidateRow> rows;
};

nlohmann::ordered_json to_json(const FixedLocusProfile& f);
nlohmann::ordered_json to_json(const CandidateRow& row);
nlohmann::ordered_json to_json(const RankReport& report);

// Quotes a field per RFC 4180 when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

// Rows are printed in row_less order whatever order they arrive in.
std::string report(const RankReport& report, Format format);
// Several ranks: text tables one after another, {"reports":[...]} for JSON,
// one header then all rows for CSV.
std::string report(const std::vector<RankReport>& reports, Format format);

// {"model":{"a","b"},"discriminant","fibers":[...],"euler_total"}; places
// carry "place", irrational clusters "cluster_degree".
nlohmann::ordered_json to_json(const WeierstrassModel& w, const std::vector<FiberReport>& fibers);
std::string fiber_report(const WeierstrassModel& w, Format format);

nlohmann::ordered_json lattice_json(const GramLattice& l);
std::string lattice_report(const GramLattice& l, Format format);

nlohmann::ordered_json to_json(const EquivalenceReport& rep);
std::string equivalence_report(const EquivalenceReport& rep, Format format);

}  // namespace k3
