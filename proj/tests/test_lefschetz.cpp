#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <array>
#include <complex>

#include "k3/error.hpp"
#include "k3/lefschetz.hpp"
#include "support.hpp"

using namespace k3;
using k3::testing::kPropertyCases;
using k3::testing::uniform;

namespace {

using cd = std::complex<double>;

cd embed(const Cyclo16& x) {
  cd sum = 0;
  for (int i = 0; i < Cyclo16::kDegree; ++i) sum += x.coeff(i).get_d() * std::polar(1.0, 2 * M_PI * i / 16.0);
  return sum;
}

// Fixed-point formula evaluated in floating point, directly from the local
// contributions.
cd numeric_residual(int order, const std::vector<int>& counts, int k, const std::vector<int>& genera) {
  const cd w = std::polar(1.0, 2 * M_PI / order);
  cd sum = 0;
  const auto types = local_types(order);
  for (std::size_t i = 0; i < types.size(); ++i) {
    sum += static_cast<double>(counts[i]) / ((1.0 - std::pow(w, types[i].j)) * (1.0 - std::pow(w, types[i].k)));
  }
  auto curve = [&](int g) { return (1.0 - g) / (1.0 - w) - w * (2.0 * g - 2.0) / ((1.0 - w) * (1.0 - w)); };
  sum += static_cast<double>(k) * curve(0);
  for (int g : genera) sum += curve(g);
  return sum - (1.0 + 1.0 / w);
}

}  // namespace

TEST(LocalType, Validation) {
  EXPECT_EQ(make_local_type(16, 15, 2), (LocalType{16, 2, 15}));
  EXPECT_EQ(parse_local_type(8, "3,6").label(), "3,6");
  EXPECT_THROW(make_local_type(16, 2, 14), InvalidArgument);
  EXPECT_THROW(make_local_type(16, 0, 1), InvalidArgument);
  EXPECT_THROW(make_local_type(12, 2, 11), InvalidArgument);
  EXPECT_THROW(parse_local_type(16, "2;15"), ParseError);
}

TEST(LocalType, Lists) {
  EXPECT_EQ(local_types(16).size(), 7u);
  EXPECT_EQ(local_types(8).size(), 3u);
  EXPECT_EQ(local_types(4).size(), 1u);
  EXPECT_EQ(local_types(16).front().label(), "2,15");
  EXPECT_EQ(local_types(16).back().label(), "8,9");
}

TEST(Profile, SigmaProfileValidation) {
  EXPECT_NO_THROW(make_sigma_profile(6, 0, 0, 0, 2));
  EXPECT_THROW(make_sigma_profile(5, 0, 0, 0, 2), InvalidArgument);
  EXPECT_THROW(make_sigma_profile(0, 6, 0, 0, 2), InvalidArgument);
  EXPECT_THROW(make_sigma_profile(22, 0, 0, 0, 0), InvalidArgument);
}

TEST(Profile, PowersPreserveRank) {
  const EigenvalueProfile p = make_sigma_profile(9, 1, 0, 1, 1);
  for (int e : {1, 2, 4, 8}) EXPECT_EQ(power_profile(p, e).total_rank(), 22) << e;
  EXPECT_EQ(power_profile(p, 8), (EigenvalueProfile{14, 8, 0, 0, 0}));
  EXPECT_THROW(power_profile(p, 3), InvalidArgument);
}

TEST(Topological, FixedPointCount) {
  EXPECT_EQ(topological_lefschetz_N(EigenvalueProfile{6, 0, 0, 0, 2}, 1), 6);
  EXPECT_EQ(topological_lefschetz_N(EigenvalueProfile{13, 1, 0, 0, 1}, 1), 12);
  EXPECT_EQ(topological_lefschetz_N(EigenvalueProfile{14, 8, 0, 0, 0}, 0, {1}), 8);
}

TEST(Holomorphic, LefschetzNumber) {
  EXPECT_EQ(holomorphic_lefschetz_number(16), Cyclo16(1) + root_power(-1));
  EXPECT_EQ(holomorphic_lefschetz_number(4), Cyclo16(1) + root_power(-4));
  EXPECT_THROW(holomorphic_lefschetz_number(2), InvalidArgument);
}

TEST(Holomorphic, PaperPointVectorsBalance) {
  for (auto [counts, k] : {std::pair{std::vector<int>{0, 1, 0, 0, 0, 1, 2}, 0},
                           std::pair{std::vector<int>{0, 0, 0, 2, 1, 1, 2}, 0},
                           std::pair{std::vector<int>{4, 1, 0, 0, 0, 1, 0}, 1}}) {
    const FixedLocusProfile f = make_fixed_locus(16, counts, k);
    EXPECT_TRUE(holomorphic_residual(f).is_zero());
    for (bool b : derived_equations_16(f)) EXPECT_TRUE(b);
  }
}

TEST(Holomorphic, CurveTermScalesWithEulerCharacteristic) {
  for (int order : {4, 8, 16}) {
    for (int g = 0; g <= 10; ++g) {
      EXPECT_EQ(holomorphic_curve_term(g, order), Rational(1 - g) * holomorphic_curve_term(0, order));
    }
  }
}

TEST(HolomorphicProperty, ResidualMatchesFloatingPointFormula) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const int order = std::array{4, 8, 16}[static_cast<std::size_t>(uniform(0, 2))];
    std::vector<int> counts(local_types(order).size());
    for (auto& c : counts) c = static_cast<int>(uniform(0, 6));
    const int k = static_cast<int>(uniform(0, 3));
    std::vector<int> genera;
    if (uniform(0, 1)) genera.push_back(static_cast<int>(uniform(1, 7)));
    const cd exact = embed(holomorphic_residual(make_fixed_locus(order, counts, k, genera)));
    ASSERT_LT(std::abs(exact - numeric_residual(order, counts, k, genera)), 1e-8);
  }
}

TEST(Chain, PaperSequence) {
  const auto seq = chain_sequence(make_chain_point(16, 0, 1), 3);
  std::string text;
  for (const auto& p : seq) text += p.label();
  EXPECT_EQ(text, "(0,1)(15,2)(14,3)(13,4)");
  EXPECT_THROW(make_chain_point(16, 2, 2), InvalidArgument);
  EXPECT_THROW(chain_sequence(make_chain_point(16, 0, 1), -1), InvalidArgument);
}

TEST(ChainProperty, SixteenStepsReturnToStart) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const int order = std::array{4, 8, 16}[static_cast<std::size_t>(uniform(0, 2))];
    const int j = static_cast<int>(uniform(0, order - 1));
    const ChainPoint start = make_chain_point(order, j, 1 - j);
    ChainPoint p = start;
    for (int s = 0; s < 16; ++s) {
      p = chain_next(p);
      ASSERT_EQ((p.j + p.k) % order, 1 % order);
    }
    ASSERT_EQ(p, start);
    ASSERT_EQ(chain_sequence(start, 16).back(), start);
  }
}

TEST(PowerMap, Examples) {
  EXPECT_EQ(std::get<LocalType>(type_power_map(make_local_type(16, 2, 15), 2)), make_local_type(8, 2, 7));
  EXPECT_EQ(std::get<LocalType>(type_power_map(make_local_type(16, 5, 12), 2)), make_local_type(8, 4, 5));
  EXPECT_TRUE(std::holds_alternative<OnFixedCurve>(type_power_map(make_local_type(16, 8, 9), 2)));
  EXPECT_EQ(std::get<LocalType>(type_power_map(make_local_type(16, 3, 14), 4)), make_local_type(4, 2, 3));
  EXPECT_THROW(type_power_map(make_local_type(16, 2, 15), 8), InvalidArgument);
  EXPECT_THROW(type_power_map(make_local_type(16, 2, 15), 3), InvalidArgument);
}

TEST(PowerMapProperty, ComposesAndKeepsTheCongruence) {
  const auto types = local_types(16);
  for (int i = 0; i < kPropertyCases; ++i) {
    const LocalType t = types[static_cast<std::size_t>(uniform(0, 6))];
    const PoweredType p2 = type_power_map(t, 2);
    const PoweredType p4 = type_power_map(t, 4);
    if (const auto* t2 = std::get_if<LocalType>(&p2)) {
      ASSERT_EQ(t2->order, 8);
      ASSERT_EQ((t2->j + t2->k) % 8, 1);
      ASSERT_EQ(type_power_map(*t2, 2), p4);
      const int a = t.j % 8, b = t.k % 8;
      ASSERT_EQ(t2->j, std::min(a, b));
      ASSERT_EQ(t2->k, std::max(a, b));
    } else {
      ASSERT_TRUE(std::holds_alternative<OnFixedCurve>(p4));
    }
    if (const auto* t4 = std::get_if<LocalType>(&p4)) ASSERT_EQ((t4->j + t4->k) % 4, 1);
  }
}
