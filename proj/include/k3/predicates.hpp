#pragma once

#include <functional>
#include <string>
#include <vector>

#include "k3/classify.hpp"

namespace k3 {

struct GeometricPredicate {
  std::string id;
  std::string citation;
  std::function<bool(const CandidateRow&)> holds;
};

const std::vector<GeometricPredicate>& predicate_catalog();
std::vector<std::string> all_predicate_ids();
// Throws UnknownPredicate.
const GeometricPredicate& find_predicate(const std::string& id);

struct EliminatedRow {
  CandidateRow row;
  std::string predicate;  // first failing id, in the order requested
};

struct PredicateOutcome {
  std::vector<CandidateRow> kept;
  std::vector<EliminatedRow> eliminated;
};

// Keeps the rows passing every listed predicate and appends the ids to
// row.predicates; other rows go to the side list with the first failure.
PredicateOutcome apply_predicates(std::vector<CandidateRow> rows, const std::vector<std::string>& ids);

}  // namespace k3
