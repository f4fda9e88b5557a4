#pragma once

#include <optional>
#include <vector>

#include "slicekit/classes.hpp"

namespace slicekit {

/// Restriction of y to the eigenspaces of the semisimple part of x, one
/// block per eigenvalue (ascending), in the basis of each eigenspace.
struct EigenspaceSplit {
  std::vector<Rational> eigenvalues;
  std::vector<RationalMatrix> bases;  // n x m_i, columns spanning ker(x_s - c_i)
};

EigenspaceSplit eigenspace_split(const RationalMatrix& x_s);
/// Matrix of y on the column span of `basis`, which y must preserve.
RationalMatrix restrict_to(const RationalMatrix& y, const RationalMatrix& basis);

/// S_x: I is the Levi g_{x_s}, one block per eigenvalue of x_s; each pair
/// assigns to every I-block a sub-label (J restricted to the block, O).
struct NaturalSliceDescriptor {
  LieElement x;
  std::vector<Rational> eigenvalues;
  LeviSubset levi;
  std::vector<Partition> orbit;           // Jordan type of x_n on each block
  std::vector<std::vector<ClassLabel>> pairs;  // pairs[p][i]: sub-label on block i

  bool lists(const std::vector<ClassLabel>& blockwise) const;
};

/// Every (J, O) up to G_I-conjugacy whose induction to g_I contains the
/// orbit of x_n in its closure (dominance, blockwise).
NaturalSliceDescriptor natural_slice(const LieElement& x);

/// alpha(h) != 0 for every root with alpha(x) != 0. PreconditionError on
/// non-diagonal input.
bool cartan_membership(const RationalMatrix& h, const RationalMatrix& x);

struct MembershipVerdict {
  bool descriptor = false;
  std::optional<bool> rank_test;  // only for semisimple x
  bool agree() const { return !rank_test || *rank_test == descriptor; }
  bool member() const { return descriptor; }
};

/// Descriptor path: y commutes with x_s, the eigenvalues of y_s on distinct
/// eigenspaces of x_s are distinct, and on each eigenspace the induced orbit
/// of y's local class dominates the Jordan type of x_n.
bool member_by_descriptor(const NaturalSliceDescriptor& d, const RationalMatrix& y);
/// Rank path for semisimple x: y in g_x and [g,y] + g_x = g.
bool member_by_rank(const LieAlgebraSpec& g, const RationalMatrix& y, const RationalMatrix& x);

MembershipVerdict membership_Sx(const LieElement& y, const LieElement& x);

}  // namespace slicekit
