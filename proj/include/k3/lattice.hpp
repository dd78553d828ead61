#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

using IntMatrix = std::vector<std::vector<Integer>>;

// An even integral lattice given by its Gram matrix. Lattices built through
// named_lattice / direct_sum / twist remember their summands (for example
// {"D4", "U(2)"}, sorted), which is how the two exceptional involution lattices
// are recognised.
class GramLattice {
 public:
  // Validates squareness, symmetry and evenness.
  explicit GramLattice(IntMatrix gram, std::string name = {});

  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& summands() const noexcept { return summands_; }
  int rank() const noexcept { return static_cast<int>(gram_.size()); }

  friend GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
  friend GramLattice twist(const GramLattice& l, long m);
  friend GramLattice named_lattice(std::string_view expression);

 private:
  IntMatrix gram_;
  std::string name_;
  std::vector<std::string> summands_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class FixedLocusKind { Empty, TwoEllipticCurves, CurveAndRationals };

struct InvolutionFixedLocus {
  FixedLocusKind kind = FixedLocusKind::CurveAndRationals;
  int genus = 0;            // CurveAndRationals only
  int rational_curves = 0;  // CurveAndRationals only
  friend bool operator==(const InvolutionFixedLocus&, const InvolutionFixedLocus&) = default;
};

std::string to_string(FixedLocusKind kind);

// Grammar: expr := term ('+' term)*, term := name ('(' int ')')?,
// name := 'U' | 'A' int | 'D' int | 'E7' | 'E8'. Root lattices are negative
// definite; U is the hyperbolic plane.
GramLattice named_lattice(std::string_view expression);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice twist(const GramLattice& l, long m);

int rank(const GramLattice& l);
Integer determinant(const GramLattice& l);
Integer determinant(const IntMatrix& m);
// Throws DegenerateLattice when the determinant vanishes.
Signature signature(const GramLattice& l);

// Smith normal form diagonal of an arbitrary integer matrix, |d_1| | |d_2| | ...
std::vector<Integer> smith_diagonal(const IntMatrix& m);
// Invariant factors > 1 of the discriminant group, ascending.
std::vector<Integer> discriminant_group(const GramLattice& l);
// Throws NotTwoElementary unless every invariant factor equals 2.
int two_elementary_a(const GramLattice& l);

// Requires a 2-elementary lattice of signature (1, rank - 1).
InvolutionFixedLocus nikulin_fixed_locus(const GramLattice& l);
// Same classification from (rank, a) alone, for lattices that are not one of
// the two exceptional ones.
InvolutionFixedLocus nikulin_fixed_locus(int rank, int a);

}  // namespace k3
