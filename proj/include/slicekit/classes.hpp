#pragma once

#include <string>
#include <vector>

#include "slicekit/lie.hpp"
#include "slicekit/root_combinatorics.hpp"

namespace slicekit {

/// One Levi block: its size and the Jordan type of the nilpotent part on it.
struct LabelPair {
  int size = 0;
  Partition partition;
  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

/// Sorted by size descending, then partition lexicographically descending.
using ClassLabel = std::vector<LabelPair>;

ClassLabel canonical_label(ClassLabel label);
bool label_valid(const ClassLabel& label, int n);
std::string to_string(const ClassLabel& label);

/// Eigenvalue of x_s with its multiplicity and the Jordan type of x - c on
/// the generalized eigenspace.
struct EigenBlock {
  Rational eigenvalue;
  int multiplicity = 0;
  Partition type;
};

/// Ascending eigenvalues. Throws IrrationalSpectrum naming the factor of the
/// minimal polynomial of x_s that has no rational root.
std::vector<EigenBlock> spectral_blocks(const RationalMatrix& x);

ClassLabel classify(const LieElement& x);

/// dim [g,x] + dim z(l) for any representative. PreconditionError on an
/// invalid label.
int class_dimension(const ClassLabel& label, const LieAlgebraSpec& g);

/// Every label for g, in canonical order (labels for sl_n coincide with
/// those for gl_n).
std::vector<ClassLabel> enumerate_classes(const LieAlgebraSpec& g);

/// Coefficient of x^n in prod_m (1 - x^m)^{-p(m)}.
long class_count(int n);

/// Block-diagonal representative in canonical block form: block k carries
/// the scalar k (shifted to trace zero for sl) plus Jordan blocks.
RationalMatrix class_representative(const ClassLabel& label, const LieAlgebraSpec& g);

/// h diagonal and constant on the blocks of `levi`; true iff distinct blocks
/// carry distinct scalars. PreconditionError if h is not in z(l).
bool generic_locus_member(const RationalMatrix& h, const LeviSubset& levi);

struct GammaVerdict {
  bool gamma = false;           // block-permutation model
  bool canonical_form = false;  // rcf(e + x) == rcf(e + y)
  bool agree() const { return gamma == canonical_form; }
};

/// Whether y lies in the orbit of x under permutations of blocks with equal
/// (size, partition of e on the block).
GammaVerdict orbit_equal_via_gamma(const RationalMatrix& e, const RationalMatrix& x, const RationalMatrix& y,
                                   const LeviSubset& levi);

/// Trace-form annihilator of [g,x] + z(g_{x_s}).
Subspace class_perp(const LieElement& x);
/// n(x): centralizer of x_n in [g_{x_s}, g_{x_s}].
Subspace derived_levi_centralizer(const LieElement& x);

}  // namespace slicekit
