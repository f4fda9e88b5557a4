#pragma once

#include "slicekit/lie.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

struct JordanDecomposition {
  LieElement x_s;
  LieElement x_n;
  /// x_s = witness(x), degree < n.
  RationalPolynomial witness;
};

/// Semisimple and nilpotent parts of a square rational matrix.
std::pair<RationalMatrix, RationalMatrix> jordan_parts(const RationalMatrix& x);

JordanDecomposition jordan_decompose(const LieElement& x);

/// True iff the minimal polynomial of x is squarefree.
bool is_semisimple(const RationalMatrix& x);

/// sl2-triple through the nilpotent e. Among admissible h a diagonal one is
/// preferred; otherwise the reduced-echelon particular solution is used.
/// Throws PreconditionError if e is zero or not nilpotent.
Sl2Triple jm_complete(const LieElement& e);

/// As jm_complete, with h and f additionally commuting with s. Requires
/// [e, s] = 0; the triple then lies in the derived algebra of g_s.
Sl2Triple jm_complete_in(const LieElement& e, const RationalMatrix& s);

}  // namespace slicekit
