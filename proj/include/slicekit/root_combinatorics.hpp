#pragma once

#include <set>
#include <utility>
#include <vector>

#include "slicekit/partition.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

/// Root e_i - e_j of type A_{n-1}, 0-based, i != j.
struct Root {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct RootSystemA {
  int n = 2;

  std::vector<Root> roots() const;
  std::vector<Root> positive_roots() const;
  std::vector<Root> simple_roots() const;
  /// alpha(diag(h)) = h_i - h_j.
  static Rational evaluate(const Root& alpha, const std::vector<Rational>& h);
};

/// Block sizes (n_1, ..., n_k) of a standard Levi subalgebra; the roots of
/// the Levi are those with both indices in one block.
struct LeviSubset {
  Composition blocks;

  int n() const { return size_of(blocks); }
  /// Block index of every coordinate.
  std::vector<int> block_of() const;
  bool contains(const Root& alpha) const;
  std::vector<Root> roots() const;
};

struct LeviOrbitPair {
  Composition blocks;
  std::vector<Partition> orbit_parts;

  bool valid() const;
};

/// Componentwise sum of the orbit partitions, re-sorted. Throws
/// std::invalid_argument for an invalid pair.
Partition ls_induce(const LeviOrbitPair& pair);

/// Induction from the zero orbit: the transpose of the sorted block sizes.
Partition richardson(const Composition& blocks);

/// (n^2 - sum n_i^2) / 2: nilradical of a parabolic with this Levi.
int nilradical_dimension(const Composition& blocks);

/// Orbit of h under the product of symmetric groups on the blocks.
std::set<std::vector<Rational>> weyl_orbit(const std::vector<Rational>& h, const LeviSubset& levi);

}  // namespace slicekit
