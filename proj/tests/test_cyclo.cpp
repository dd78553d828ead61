#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "k3/cyclo.hpp"
#include "k3/error.hpp"
#include "support.hpp"

using namespace k3;
using k3::testing::kPropertyCases;
using k3::testing::random_cyclo;
using k3::testing::random_nonzero_cyclo;
using k3::testing::uniform;

namespace {

// Complex embedding z -> exp(2 pi i u / 16), u odd.
std::complex<double> embed(const Cyclo16& x, int u) {
  std::complex<double> sum = 0;
  for (int i = 0; i < Cyclo16::kDegree; ++i) {
    sum += x.coeff(i).get_d() * std::polar(1.0, 2 * M_PI * u * i / 16.0);
  }
  return sum;
}

long odd_unit() { return 2 * uniform(0, 7) + 1; }

}  // namespace

TEST(Cyclo16, RootsOfUnity) {
  EXPECT_EQ(root_power(8), Cyclo16(-1));
  EXPECT_EQ(root_power(16), Cyclo16(1));
  EXPECT_EQ(root_power(-1) * root_power(1), Cyclo16(1));
  EXPECT_EQ(Cyclo16::root_of_unity(4), root_power(4));
  EXPECT_EQ(Cyclo16::root_of_unity(8, 3), root_power(6));
  EXPECT_EQ(root_power(3).pow(16), Cyclo16(1));
  EXPECT_THROW(Cyclo16::root_of_unity(3), InvalidArgument);
}

TEST(Cyclo16, RootOfUnityOrder) {
  for (int e = 0; e < 16; ++e) {
    EXPECT_EQ(root_of_unity_order(root_power(e)), 16 / std::gcd(e, 16)) << e;
  }
  EXPECT_FALSE(root_of_unity_order(Cyclo16(2)).has_value());
  EXPECT_FALSE(root_of_unity_order(root_power(1) + Cyclo16(1)).has_value());
}

TEST(Cyclo16, PrimitiveRootTraceSumIsMoebius) {
  EXPECT_EQ(primitive_root_trace_sum(1), 1);
  EXPECT_EQ(primitive_root_trace_sum(2), -1);
  EXPECT_EQ(primitive_root_trace_sum(4), 0);
  EXPECT_EQ(primitive_root_trace_sum(8), 0);
  EXPECT_EQ(primitive_root_trace_sum(16), 0);
}

TEST(Cyclo16, InverseOfZeroThrows) { EXPECT_THROW(Cyclo16().inverse(), DivisionByZero); }

TEST(Cyclo16, EvenGaloisExponentThrows) { EXPECT_THROW(root_power(1).galois(2), InvalidAutomorphism); }

TEST(Cyclo16, KnownInverse) {
  // (1 - z)^-1 = (1 + z + ... + z^7) / 2 since (1 - z)(1 + ... + z^7) = 1 - z^8 = 2.
  Cyclo16::Coeffs c;
  for (auto& x : c) x = make_rational(1, 2);
  EXPECT_EQ((Cyclo16(1) - root_power(1)).inverse(), Cyclo16(c));
}

TEST(Cyclo16, TextRoundTrip) {
  const Cyclo16 x = Cyclo16::parse("(-1/2) + (3)*z^5");
  EXPECT_EQ(x.to_string(), "(-1/2) + (3)*z^5");
  EXPECT_EQ(Cyclo16().to_string(), "0");
  EXPECT_THROW(Cyclo16::parse("(1) + z^9"), ParseError);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 y = random_cyclo();
    ASSERT_EQ(Cyclo16::parse(y.to_string()), y) << y;
  }
}

TEST(Cyclo16Property, AdditiveGroup) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo(), y = random_cyclo(), w = random_cyclo();
    ASSERT_EQ((x + y) + w, x + (y + w));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x + Cyclo16(), x);
    ASSERT_TRUE((x + (-x)).is_zero());
  }
}

TEST(Cyclo16Property, MultiplicativeLaws) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo(), y = random_cyclo(), w = random_cyclo();
    ASSERT_EQ((x * y) * w, x * (y * w));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + w), x * y + x * w);
    ASSERT_EQ(x * Cyclo16(1), x);
  }
}

TEST(Cyclo16Property, InverseByMultiplication) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_nonzero_cyclo();
    ASSERT_EQ(x * x.inverse(), Cyclo16(1)) << x;
  }
}

// Independent route: complex embeddings turn inversion into 1/x.
TEST(Cyclo16Property, InverseMatchesComplexEmbedding) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_nonzero_cyclo();
    const int u = static_cast<int>(odd_unit());
    const auto ex = embed(x, u);
    ASSERT_LT(std::abs(embed(x.inverse(), u) * ex - 1.0), 1e-6) << x;
  }
}

TEST(Cyclo16Property, GaloisIsRingAutomorphism) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo(), y = random_cyclo();
    const long t = odd_unit();
    ASSERT_EQ((x + y).galois(t), x.galois(t) + y.galois(t));
    ASSERT_EQ((x * y).galois(t), x.galois(t) * y.galois(t));
    ASSERT_EQ(x.galois(1), x);
  }
}

TEST(Cyclo16Property, GaloisComposition) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo();
    const long s = odd_unit(), t = odd_unit();
    ASSERT_EQ(x.galois(t).galois(s), x.galois((s * t) % 16));
    ASSERT_EQ(root_power(1).galois(t), root_power(t));
  }
}

TEST(Cyclo16Property, GaloisMatchesEmbeddings) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo();
    const int u = static_cast<int>(odd_unit()), t = static_cast<int>(odd_unit());
    ASSERT_LT(std::abs(embed(x.galois(t), u) - embed(x, (u * t) % 16)), 1e-9);
  }
}

TEST(Cyclo16Property, GaloisFixedFieldIsRational) {
  // The trace over all eight automorphisms lands in Q.
  for (int i = 0; i < kPropertyCases; ++i) {
    const Cyclo16 x = random_cyclo();
    Cyclo16 trace;
    for (long t = 1; t < 16; t += 2) trace += x.galois(t);
    ASSERT_TRUE(trace.is_rational()) << x;
    ASSERT_EQ(trace.coeff(0), 8 * x.coeff(0));
  }
}
