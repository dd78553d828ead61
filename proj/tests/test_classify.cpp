#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "k3/classify.hpp"
#include "k3/configuration.hpp"
#include "k3/error.hpp"
#include "k3/known_tables.hpp"
#include "k3/predicates.hpp"

using namespace k3;

namespace {

using Key = std::tuple<int, int, int, int, int, int, int>;  // m2, m1, m, l, r, N, k

Key key(const CandidateRow& row) {
  return {row.profile.m2, row.profile.m1, row.profile.m, row.profile.l, row.profile.r, row.N(), row.k()};
}

std::multiset<Key> keys(const std::vector<CandidateRow>& rows) {
  std::multiset<Key> out;
  for (const auto& r : rows) out.insert(key(r));
  return out;
}

const std::vector<CandidateRow>& rank6() {
  static const auto rows = classify(6, true);
  return rows;
}

const std::vector<CandidateRow>& rank14() {
  static const auto rows = classify(14, true);
  return rows;
}

}  // namespace

TEST(Classify, RankSixRows) {
  EXPECT_EQ(keys(rank6()), (std::multiset<Key>{{2, 0, 0, 0, 6, 6, 1}, {2, 0, 0, 2, 4, 4, 0}}));
  for (const auto& r : rank6()) EXPECT_EQ(r.status, RowStatus::PaperRow);
  EXPECT_EQ(rank6()[0].picard, "U+D4");
  EXPECT_EQ(rank6()[1].picard, "U(2)+D4");
}

TEST(Classify, RankFourteenRows) {
  EXPECT_EQ(keys(rank14()), (std::multiset<Key>{{1, 1, 0, 1, 9, 8, 1},
                                                {1, 1, 0, 3, 7, 6, 0},
                                                {1, 0, 0, 1, 13, 12, 1},
                                                {1, 0, 1, 1, 11, 10, 1},
                                                {1, 0, 1, 5, 7, 4, 0}}));
  int open = 0;
  for (const auto& r : rank14()) {
    if (r.status == RowStatus::ExistenceOpen) {
      ++open;
      EXPECT_EQ(key(r), (Key{1, 0, 1, 1, 11, 10, 1}));
      EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "existence_open"), r.flags.end());
    }
  }
  EXPECT_EQ(open, 1);
}

TEST(Classify, PrintedPointCountsAreFlagged) {
  std::map<int, int> printed;  // r -> table N
  for (const auto& r : rank14()) {
    if (r.table_N) {
      printed[r.profile.r] = *r.table_N;
      EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "table_N_differs_from_topological_N"), r.flags.end());
    }
  }
  EXPECT_EQ(printed, (std::map<int, int>{{13, 10}, {11, 8}, {7, 2}}));
}

TEST(Classify, EllipticBranchOnlyGivesTwoRows) {
  std::multiset<Key> elliptic;
  for (const auto& r : rank14()) {
    if (!r.sigma4_elliptic) continue;
    elliptic.insert(key(r));
    EXPECT_EQ(r.invariant_fiber, "IV*");
    EXPECT_EQ(r.curve_genus, 1);
  }
  EXPECT_EQ(elliptic, (std::multiset<Key>{{1, 1, 0, 1, 9, 8, 1}, {1, 1, 0, 3, 7, 6, 0}}));
}

TEST(Classify, EveryRowPassedEveryPredicate) {
  for (const auto* rows : {&rank6(), &rank14()}) {
    for (const auto& r : *rows) EXPECT_EQ(r.predicates, all_predicate_ids());
  }
}

// Counts from an independent script implementing the same arithmetic rules.
TEST(Classify, ArithmeticSupersetSizes) {
  EXPECT_EQ(classify(6, false).size(), 4u);
  EXPECT_EQ(classify(14, false).size(), 105u);
}

TEST(Classify, SupersetContainsEveryPublishedRow) {
  for (int rank : {6, 14}) {
    const auto rows = classify(rank, false);
    for (const auto& known : known_rows(rank)) {
      const bool found = std::any_of(rows.begin(), rows.end(), [&](const CandidateRow& r) {
        return r.profile == known.profile && r.k() == known.k && r.sigma.n == known.points && r.a == known.a &&
               r.status == known.status;
      });
      EXPECT_TRUE(found) << "r=" << known.profile.r << " l=" << known.profile.l;
    }
  }
}

TEST(Classify, PublishedRowsSatisfyEveryPredicate) {
  for (int rank : {6, 14}) {
    for (const auto& r : enumerate_profiles(rank)) {
      if (match_known_row(r) == nullptr) continue;
      for (const auto& p : predicate_catalog()) EXPECT_TRUE(p.holds(r)) << p.id << " r=" << r.profile.r;
    }
  }
}

TEST(Classify, SerialMatchesParallel) {
  for (int rank : {6, 14}) {
    const auto s = enumerate_profiles(rank, Exec::Serial);
    const auto p = enumerate_profiles(rank, Exec::Parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].invariants(), p[i].invariants());
  }
}

TEST(Classify, RejectsOtherRanks) { EXPECT_THROW(classify(10, true), InvalidArgument); }

TEST(Picard, CatalogLatticesHaveTheStatedInvariants) {
  for (const auto& e : picard_catalog()) {
    const GramLattice l = named_lattice(e.expression);
    EXPECT_EQ(rank(l), e.rank) << e.label;
    EXPECT_EQ(two_elementary_a(l), e.a) << e.label;
    EXPECT_EQ(signature(l).positive, 1) << e.label;
    EXPECT_EQ(nikulin_fixed_locus(l), nikulin_fixed_locus(e.rank, e.a)) << e.label;
  }
  EXPECT_EQ(picard_catalog(6).size(), 3u);
  EXPECT_EQ(picard_catalog(14).size(), 4u);
}

TEST(Predicates, UnknownIdThrows) { EXPECT_THROW(find_predicate("nope"), UnknownPredicate); }

TEST(Predicates, EliminatedRowsRecordTheFirstFailure) {
  const auto outcome = apply_predicates(enumerate_profiles(14), all_predicate_ids());
  EXPECT_EQ(outcome.kept.size(), 5u);
  EXPECT_EQ(outcome.kept.size() + outcome.eliminated.size(), 105u);
  for (const auto& e : outcome.eliminated) EXPECT_FALSE(find_predicate(e.predicate).holds(e.row));
}

TEST(Configuration, RiemannHurwitz) {
  // Involution on a genus-7 curve with 16 fixed points and rational quotient.
  EXPECT_TRUE(rh_fixed_point_feasible(7, 2, 16, 0, {}));
  EXPECT_FALSE(rh_fixed_point_feasible(7, 2, 14, 0, {}));
  // Order 4 on an elliptic curve: two fixed points and one orbit of length 2.
  EXPECT_TRUE(rh_fixed_point_feasible(1, 4, 2, 0, {2}));
  EXPECT_THROW(rh_fixed_point_feasible(-1, 2, 0, 0, {}), InvalidArgument);
}

TEST(Configuration, EveryRowHasARealization) {
  for (const auto* rows : {&rank6(), &rank14()}) {
    for (const auto& r : *rows) {
      const Realization* z = find_realization(r);
      ASSERT_NE(z, nullptr);
      EXPECT_EQ(z->invariants, r.invariants());
      EXPECT_TRUE(r.configuration.has_value());
    }
  }
}
