#pragma once

#include <optional>
#include <vector>

#include "slicekit/natural_slice.hpp"
#include "slicekit/polynomial.hpp"
#include "slicekit/sampling.hpp"

namespace slicekit {

struct AffineSlice {
  LieElement base;
  Subspace directions;

  bool contains(const RationalMatrix& y) const;
  std::size_t dim() const { return directions.dim(); }
};

/// e + g_f.
AffineSlice slodowy_slice(const Sl2Triple& t, const LieAlgebraSpec& g);

/// ad_h eigenvalues on g_f with multiplicity, ascending.
std::vector<int> contracting_weights(const Sl2Triple& t, const LieAlgebraSpec& g);

/// Point of the principal slice E + span{I, F, ..., F^{d-1}} of gl_d with
/// characteristic polynomial q (monic of degree d >= 1).
RationalMatrix principal_slice_point(const RationalPolynomial& q);

/// The unique point of the principal Slodowy slice with the characteristic
/// polynomial of x. PreconditionError if x is not regular.
LieElement fundamental_rep(const LieElement& x);

struct PoissonVerdict {
  bool transversal_ok = false;
  bool symplectic_ok = false;
  std::size_t sum_rank = 0;           // rank([g,x] + T)
  std::size_t intersection_dim = 0;   // dim([g,x] cap T)
  std::size_t gram_rank = 0;
};

/// Tangent-level test at x of a slice with tangent space T.
PoissonVerdict poisson_slice_check(const Subspace& tangent, const LieElement& x);
/// As above; PreconditionError unless x lies on the slice.
PoissonVerdict poisson_slice_check(const AffineSlice& s, const LieElement& x);

struct ComplementarySlice {
  NaturalSliceDescriptor natural;
  AffineSlice slodowy;  // e + (g_{x_s})_f, or x_s + z(g_{x_s}) when x_n = 0
  std::optional<Sl2Triple> triple;

  bool contains(const RationalMatrix& y) const;
};

/// S_{x,T}. The triple must have e = x_n and commute with x_s. Pass nullopt
/// when x is semisimple.
ComplementarySlice complementary_slice(const LieElement& x, const std::optional<Sl2Triple>& t);
/// Uses jm_complete_in(x_n, x_s) when x_n != 0.
ComplementarySlice complementary_slice(const LieElement& x);

/// True iff x_s is diagonal with equal eigenvalues contiguous and x_n is a
/// direct sum of upper Jordan blocks of weakly decreasing size within each
/// eigenvalue block.
bool in_canonical_block_form(const RationalMatrix& x);

/// Random member of S_x: a listed (J, O) realised with random eigenvalues
/// inside each eigenspace of x_s, conjugated within the Levi.
RationalMatrix sample_natural_slice(const NaturalSliceDescriptor& d, Sampler& rng);

struct SaturationReport {
  std::size_t samples = 0;
  std::size_t covered = 0;
  std::vector<RationalMatrix> failures;
};

/// For each sampled y in S_x, look for s in S_{x,T} with s conjugate to y
/// under G_{x_s}(Q) (equal canonical forms on every eigenspace of x_s).
/// x must be in canonical block form.
SaturationReport saturation_search(const LieElement& x, std::size_t samples, Sampler& rng);
/// The witness for a single y: on every eigenspace of x_s, the Jordan blocks
/// of y are packed into runs of consecutive Jordan blocks of x_n, and each
/// run is filled with a cyclic point of the slice. nullopt if no packing
/// works.
std::optional<RationalMatrix> saturation_witness(const ComplementarySlice& c, const RationalMatrix& y);

}  // namespace slicekit
