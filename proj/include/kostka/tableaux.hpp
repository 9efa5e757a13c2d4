#pragma once

#include <cstdint>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/poly.hpp"
#include "kostka/ratfunc.hpp"

namespace kostka {

struct SkewShape {
  Partition outer, inner;  // inner contained in outer cellwise
  SkewShape() = default;
  SkewShape(Partition out, Partition in);
  int cells() const;
  int rows() const { return outer.length(); }
};

// Corner-to-corner concatenation of skew diagrams: the first argument sits
// on top, shifted right by the first row of the second argument's outer
// shape; disjoint rows and columns, so fillings stay independent.
SkewShape skew_star(const SkewShape& a, const SkewShape& b);

// Semistandard filling of a skew shape: rows weakly increase left to right,
// columns strictly increase top to bottom.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool is_straight() const { return shape_.inner.empty(); }
  std::vector<int> weight() const;  // letter multiplicities, 1-based letters

  // Reading word: rows right to left, top row to bottom row. This is the
  // orientation under which the lattice condition counts Littlewood-
  // Richardson tableaux and the charge statistic generates Kostka
  // polynomials; the two calibration identities are tested, not assumed.
  std::vector<int> word() const;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;  // rows_[i] holds columns inner[i]..outer[i]-1
};

struct MultiTableau {
  MultiPartition shape;
  std::vector<SkewTableau> components;  // straight shapes, one per level
  MultiTableau() = default;
  MultiTableau(MultiPartition shape, std::vector<SkewTableau> components);
  std::vector<int> weight() const;
};

// The r-tuple re-read as one skew tableau on the star of its shapes.
SkewTableau multi_to_skew(const MultiTableau& t);

// Exhaustive semistandard enumerations, deterministic order (lexicographic
// in the row-major reading of the filling).
std::vector<SkewTableau> enumerate_skew_sst(const SkewShape& shape, const std::vector<int>& weight);
std::vector<MultiTableau> enumerate_multi_sst(const MultiPartition& shape, const std::vector<int>& weight);

// Every prefix holds at least as many i as i+1, for all i.
bool is_lattice(const std::vector<int>& word);

// Lascoux-Schutzenberger charge of a word of partition weight: repeated
// cyclic extraction of standard subwords, index rule on each.
long charge(const std::vector<int>& word);

// Jeu de taquin rectification; the result is independent of the slide order
// (tested, not assumed). The seeded variant randomizes the corner choice.
SkewTableau rectify(const SkewTableau& t);
SkewTableau rectify_seeded(const SkewTableau& t, std::uint64_t seed);

struct ThetaResult {
  Partition nu;        // shape of the rectification
  SkewTableau s;       // the rectified tableau, in SST(nu, pi)
  bool lattice;        // whether the star word is a lattice permutation
};
ThetaResult theta(const MultiTableau& t, const Partition& pi);

long charge_of(const MultiTableau& t);  // charge of the rectification

// Number of semistandard tableaux of shape la and weight nu whose star word
// is a lattice permutation.
long long sst0_count(const MultiPartition& la, const Partition& nu);

// Charge generating function over SST(la, mu); equals the Kostka polynomial.
Poly ls_kostka_via_charge(const Partition& la, const Partition& mu);

// t^{b(mu) - b(la)} * sum over SST(la, xi) of t^{r * charge}, with
// mu = (-, ..., -, xi). Coefficients are integers; returned at order 1.
RatFunc thm314_rhs(const MultiPartition& la, const Partition& xi, int r);

}  // namespace kostka
