#include <gtest/gtest.h>

#include "k3/error.hpp"
#include "k3/lattice.hpp"
#include "support.hpp"

using namespace k3;
using k3::testing::kPropertyCases;
using k3::testing::uniform;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size(), m = y.front().size(), inner = y.size();
  IntMatrix out(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

IntMatrix transpose(const IntMatrix& x) {
  IntMatrix out(x.front().size(), std::vector<Integer>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) out[j][i] = x[i][j];
  return out;
}

// Product of random elementary integer matrices; determinant +-1.
IntMatrix random_unimodular(int n) {
  IntMatrix u(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    const int i = static_cast<int>(uniform(0, n - 1));
    int j = static_cast<int>(uniform(0, n - 2));
    if (j >= i) ++j;
    const long c = uniform(-2, 2);
    for (int r = 0; r < n; ++r) u[r][j] += c * u[r][i];
    if (uniform(0, 3) == 0)
      for (int r = 0; r < n; ++r) u[r][i] = -u[r][i];
  }
  return u;
}

}  // namespace

TEST(Lattice, NamedRootLattices) {
  EXPECT_EQ(determinant(named_lattice("E8")), 1);
  EXPECT_EQ(determinant(named_lattice("E7")), -2);
  EXPECT_EQ(determinant(named_lattice("D4")), 4);
  EXPECT_EQ(determinant(named_lattice("A2")), 3);
  EXPECT_EQ(determinant(named_lattice("U")), -1);
  EXPECT_EQ(determinant(named_lattice("U(2)")), -4);
  EXPECT_EQ(signature(named_lattice("E8")), (Signature{0, 8}));
  EXPECT_EQ(signature(named_lattice("U")), (Signature{1, 1}));
}

TEST(Lattice, UPlusD4) {
  const GramLattice l = named_lattice("U+D4");
  EXPECT_EQ(rank(l), 6);
  EXPECT_EQ(determinant(l), -4);
  EXPECT_EQ(signature(l), (Signature{1, 5}));
  EXPECT_EQ(discriminant_group(l), ints({2, 2}));
  EXPECT_EQ(two_elementary_a(l), 2);
}

TEST(Lattice, TwistedHyperbolicPlusD4) {
  const GramLattice l = named_lattice("U(2) + D4");
  EXPECT_EQ(discriminant_group(l), ints({2, 2, 2, 2}));
  EXPECT_EQ(two_elementary_a(l), 4);
}

TEST(Lattice, A2IsNotTwoElementary) {
  EXPECT_EQ(discriminant_group(named_lattice("A2")), ints({3}));
  EXPECT_THROW(two_elementary_a(named_lattice("A2")), NotTwoElementary);
}

TEST(Lattice, ParserErrors) {
  EXPECT_THROW(named_lattice("X3"), ParseError);
  EXPECT_THROW(named_lattice("U+"), ParseError);
  EXPECT_THROW(named_lattice("D3"), UnsupportedLattice);
  EXPECT_THROW(named_lattice("E6"), UnsupportedLattice);
  EXPECT_THROW(named_lattice("U(0)"), UnsupportedLattice);
}

TEST(Lattice, GramValidation) {
  EXPECT_THROW(GramLattice(IntMatrix{{2, 1}, {0, 2}}), InvalidArgument);
  EXPECT_THROW(GramLattice(IntMatrix{{1}}), InvalidArgument);
  EXPECT_THROW(signature(GramLattice(IntMatrix{{0, 0}, {0, 0}})), DegenerateLattice);
}

TEST(Lattice, SmithDiagonal) {
  EXPECT_EQ(smith_diagonal(IntMatrix{{2, 4}, {6, 8}}), ints({2, 4}));
  EXPECT_EQ(smith_diagonal(IntMatrix{{4, 0}, {0, 6}}), ints({2, 12}));
}

TEST(Nikulin, CatalogInvariants) {
  struct Case {
    const char* expr;
    int rank, a, g, k;
  };
  for (const Case& c : {Case{"U+D4", 6, 2, 7, 2}, Case{"U(2)+D4", 6, 4, 6, 1}, Case{"U+D4+E8", 14, 2, 3, 6},
                        Case{"U(2)+D4+E8", 14, 4, 2, 5}}) {
    const GramLattice l = named_lattice(c.expr);
    EXPECT_EQ(rank(l), c.rank) << c.expr;
    EXPECT_EQ(two_elementary_a(l), c.a) << c.expr;
    const InvolutionFixedLocus f = nikulin_fixed_locus(l);
    EXPECT_EQ(f.kind, FixedLocusKind::CurveAndRationals);
    EXPECT_EQ(f.genus, c.g) << c.expr;
    EXPECT_EQ(f.rational_curves, c.k) << c.expr;
  }
}

TEST(Nikulin, ExceptionalLattices) {
  EXPECT_EQ(nikulin_fixed_locus(named_lattice("U(2)+E8(2)")).kind, FixedLocusKind::Empty);
  EXPECT_EQ(nikulin_fixed_locus(named_lattice("U+E8(2)")).kind, FixedLocusKind::TwoEllipticCurves);
}

TEST(Nikulin, RequiresHyperbolicTwoElementary) {
  EXPECT_THROW(nikulin_fixed_locus(named_lattice("E8")), InvalidArgument);
  EXPECT_THROW(nikulin_fixed_locus(named_lattice("U+A2")), NotTwoElementary);
}

TEST(Nikulin, FromRankAndA) {
  EXPECT_EQ(nikulin_fixed_locus(14, 6), (InvolutionFixedLocus{FixedLocusKind::CurveAndRationals, 1, 4}));
  EXPECT_EQ(nikulin_fixed_locus(1, 1), (InvolutionFixedLocus{FixedLocusKind::CurveAndRationals, 10, 0}));
  EXPECT_THROW(nikulin_fixed_locus(6, 3), InvalidArgument);
}

TEST(LatticeProperty, InvariantsUnderUnimodularChangeOfBasis) {
  const std::vector<const char*> exprs = {"U+D4", "U(2)+D4", "U+A1+A1", "U(2)+A1", "D4+A2", "U+E7"};
  for (int i = 0; i < kPropertyCases; ++i) {
    const GramLattice l = named_lattice(exprs[static_cast<std::size_t>(i) % exprs.size()]);
    const IntMatrix u = random_unimodular(rank(l));
    const GramLattice m(multiply(transpose(u), multiply(l.gram(), u)));
    ASSERT_EQ(determinant(m), determinant(l));
    ASSERT_EQ(signature(m), signature(l));
    ASSERT_EQ(discriminant_group(m), discriminant_group(l));
  }
}
