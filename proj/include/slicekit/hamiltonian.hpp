#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slicekit/classes.hpp"
#include "slicekit/sampling.hpp"
#include "slicekit/slices.hpp"

namespace slicekit {

/// Adjoint orbit of base_point, identified with a coadjoint orbit through
/// the trace form; the moment map is the inclusion.
struct CoadjointOrbitSpace {
  LieElement base_point;
};

/// T^*(G/P) for the standard parabolic with the given block sizes.
struct CotangentFlagSpace {
  int n = 2;
  Composition blocks;
};

/// C^{2n} with omega(u, v) = u^T J v, J = [[0, I], [-I, 0]].
struct SymplecticVectorSpace {
  int n = 1;
};

using ExampleSpace = std::variant<CoadjointOrbitSpace, CotangentFlagSpace, SymplecticVectorSpace>;

struct PrincipalClass {
  std::optional<ClassLabel> label;  // absent outside type A
  std::string tag;
};

PrincipalClass principal_class(const ExampleSpace& space);

/// Diagonal points of the orbit of a regular semisimple diagonal base point:
/// all permutations of its entries. PreconditionError otherwise.
std::vector<LieElement> orbit_fiber_over_cartan(const CoadjointOrbitSpace& orbit);

RationalMatrix symplectic_form(int n);
/// Basis of sp_{2n} = {X : X^T J + J X = 0} inside gl_{2n}.
Subspace sp_algebra(int n);
bool in_sp(const RationalMatrix& x);
bool is_symplectic(const RationalMatrix& g);
/// Random element of Sp_{2n}(Q) from block generators.
RationalMatrix random_symplectic(int n, Sampler& rng);

/// mu(v) = -1/2 v v^T J, so that tr(mu(v) xi) = 1/2 omega(xi v, v).
RationalMatrix sp_moment(const std::vector<Rational>& v);

/// The quadratic identity diag(-2 mu(v) J^{-1}) = (v_i^2) checked on the
/// polarization for every pair of basis vectors; it forces mu(v) = 0 => v = 0.
bool sp_kernel_certificate(int n);

/// All w with mu(w) = mu(v) for v != 0: exactly {v, -v}.
std::vector<std::vector<Rational>> sp_fiber(const std::vector<Rational>& v);

struct SpTrivialActionReport {
  std::size_t dim_n = 0;           // dim n(x) = dim of the sp-centralizer of x
  bool n_kills_fiber = false;      // xi w = 0 for xi in n(x), w in {v, -v}
  bool minus_identity_stabilizes_x = false;
  bool minus_identity_moves_v = false;
};

SpTrivialActionReport sp_trivial_action(const std::vector<Rational>& v);

/// Cotangent groupoid T^*GL_n = GL_n x gl_n over gl_n.
struct GroupoidElement {
  RationalMatrix g;
  RationalMatrix xi;
  friend bool operator==(const GroupoidElement&, const GroupoidElement&) = default;
};

RationalMatrix source(const GroupoidElement& a);
RationalMatrix target(const GroupoidElement& a);
/// Defined when source(a) == target(b); PreconditionError otherwise.
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement identity_bisection(const RationalMatrix& x);
GroupoidElement inverse(const GroupoidElement& a);

struct GroupoidReport {
  std::size_t samples = 0;
  std::size_t failures[6] = {0, 0, 0, 0, 0, 0};  // axioms (i)..(vi)
  bool ok() const;
};

GroupoidReport groupoid_axiom_suite(int n, std::size_t samples, Sampler& rng);

struct SliceTheoremReport {
  std::size_t dim_M = 0;
  std::size_t dim_GS = 0;     // T_{(1,x)} s^{-1}(S)
  std::size_t dim_fiber = 0;  // T_x mu^{-1}(S)
  std::size_t dim_GSS = 0;    // T_{(1,x)} (s^{-1}(S) cap t^{-1}(S))
  bool closes = false;        // dim_GS + dim_fiber - dim_GSS == dim_M
  PoissonVerdict verdict;
  bool ok() const { return closes && verdict.transversal_ok && verdict.symplectic_ok; }
};

/// Tangent-level bookkeeping at the identity bisection over x, for the orbit
/// of x and the affine slice s through x.
SliceTheoremReport slice_theorem_tangent_check(const CoadjointOrbitSpace& space, const AffineSlice& s,
                                               const LieElement& x);

}  // namespace slicekit
