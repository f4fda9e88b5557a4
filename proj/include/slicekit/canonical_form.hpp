#pragma once

#include <vector>

#include "slicekit/matrix.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

/// Monic invariant factors of m of positive degree, each dividing the next.
/// Computed from the Smith normal form of tI - m over Q[t].
std::vector<RationalPolynomial> invariant_factors(const RationalMatrix& m);

/// Companion matrix of a monic p: ones on the subdiagonal, last column
/// holding -p_0, ..., -p_{d-1}.
RationalMatrix companion(const RationalPolynomial& p);

/// Block diagonal of the companion matrices of the invariant factors, in
/// ascending order. Equal outputs iff GL_n(Q)-conjugate inputs.
RationalMatrix rational_canonical_form(const RationalMatrix& m);

}  // namespace slicekit
