#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slicekit/matrix.hpp"

namespace slicekit {

struct Rref {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Within a column the pivot is the candidate
/// entry of smallest bit length.
Rref rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RationalMatrix> kernel_basis;  // cols x 1 columns
};

/// Kernel vectors are normalized against the RREF: each carries a 1 in its
/// own free column and 0 in every other free column.
RankKernel rank_kernel(const RationalMatrix& m);

/// Kernel basis as the columns of one matrix (cols x dim).
RationalMatrix kernel_matrix(const RationalMatrix& m);

/// Particular solution of m*x = b with every free variable set to 0, or
/// nullopt when the system is inconsistent. `b` may have several columns.
std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& b);

Rational determinant(const RationalMatrix& m);

/// Throws PreconditionError for singular or non-square input.
RationalMatrix inverse(const RationalMatrix& m);

// Column spans. A span is stored as a matrix whose columns form its
// canonical basis: the transposed nonzero rows of rref(m^T). Two matrices
// span the same space iff their canonical bases are equal.

RationalMatrix span_basis(const RationalMatrix& columns);
RationalMatrix span_sum(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix span_intersection(const RationalMatrix& a, const RationalMatrix& b);
bool span_contains(const RationalMatrix& span, const RationalMatrix& vectors);
bool span_equal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace slicekit
