#include "slicekit/hamiltonian.hpp"

#include <algorithm>

#include "slicekit/canonical_form.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

PrincipalClass principal_class(const ExampleSpace& space) {
  if (const auto* o = std::get_if<CoadjointOrbitSpace>(&space))
    return {classify(o->base_point), "coadjoint orbit"};
  if (const auto* f = std::get_if<CotangentFlagSpace>(&space)) {
    if (size_of(f->blocks) != f->n) throw PreconditionError("principal_class: blocks do not sum to n");
    return {ClassLabel{{f->n, richardson(f->blocks)}}, "cotangent bundle of a partial flag variety"};
  }
  const auto& v = std::get<SymplecticVectorSpace>(space);
  return {std::nullopt, "minimal nilpotent orbit of sp_" + std::to_string(2 * v.n)};
}

std::vector<LieElement> orbit_fiber_over_cartan(const CoadjointOrbitSpace& orbit) {
  const RationalMatrix& b = orbit.base_point.matrix();
  if (!b.is_diagonal()) throw PreconditionError("orbit_fiber_over_cartan: base point must be diagonal");
  std::vector<Rational> d = b.diagonal_entries();
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end())
    throw PreconditionError("orbit_fiber_over_cartan: base point is not regular");
  std::vector<LieElement> out;
  do out.emplace_back(orbit.base_point.algebra(), RationalMatrix::diagonal(d));
  while (std::next_permutation(d.begin(), d.end()));
  return out;
}

RationalMatrix symplectic_form(int n) {
  RationalMatrix j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

Subspace sp_algebra(int n) {
  const int m = 2 * n;
  const RationalMatrix J = symplectic_form(n);
  // Linear map X -> X^T J + J X on flattened X.
  RationalMatrix a(m * m, m * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      RationalMatrix e = RationalMatrix::unit(m, p, q);
      RationalMatrix img = e.transpose() * J + J * e;
      for (int k = 0; k < m * m; ++k) a(k, p * m + q) = img.entries()[k];
    }
  return {LieAlgebraSpec::gl(m), kernel_matrix(a)};
}

bool in_sp(const RationalMatrix& x) {
  const RationalMatrix J = symplectic_form(static_cast<int>(x.rows() / 2));
  return (x.transpose() * J + J * x).is_zero();
}

bool is_symplectic(const RationalMatrix& g) {
  const RationalMatrix J = symplectic_form(static_cast<int>(g.rows() / 2));
  return g.transpose() * J * g == J;
}

RationalMatrix random_symplectic(int n, Sampler& rng) {
  const int m = 2 * n;
  RationalMatrix g = RationalMatrix::identity(m);
  for (int round = 0; round < 3; ++round) {
    RationalMatrix a = rng.invertible(n, 2);
    RationalMatrix a_inv_t = inverse(a).transpose();
    RationalMatrix levi(m, m), upper = RationalMatrix::identity(m), lower = RationalMatrix::identity(m);
    RationalMatrix s = rng.matrix(n, n, 2), t = rng.matrix(n, n, 2);
    s = s + s.transpose();
    t = t + t.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        levi(i, j) = a(i, j);
        levi(n + i, n + j) = a_inv_t(i, j);
        upper(i, n + j) = s(i, j);
        lower(n + i, j) = t(i, j);
      }
    g = g * levi * upper * lower;
  }
  return g;
}

RationalMatrix sp_moment(const std::vector<Rational>& v) {
  RationalMatrix col = RationalMatrix::column(v);
  return Rational(-1, 2) * (col * col.transpose() * symplectic_form(static_cast<int>(v.size() / 2)));
}

bool sp_kernel_certificate(int n) {
  const int m = 2 * n;
  const RationalMatrix J = symplectic_form(n);
  const RationalMatrix J_inv = inverse(J);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      RationalMatrix ea(m, 1), eb(m, 1);
      ea(a, 0) = 1;
      eb(b, 0) = 1;
      // Polarization of mu: B(u, w) = -1/4 (u w^T + w u^T) J.
      RationalMatrix bilinear = Rational(-1, 4) * ((ea * eb.transpose() + eb * ea.transpose()) * J);
      RationalMatrix probe = Rational(-2) * (bilinear * J_inv);
      for (int i = 0; i < m; ++i) {
        Rational expected = (a == i && b == i) ? 1 : 0;
        if (probe(i, i) != expected) return false;
      }
    }
  return true;
}

std::vector<std::vector<Rational>> sp_fiber(const std::vector<Rational>& v) {
  auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (pivot == v.end()) return {v};
  // w w^T = v v^T forces w_p = +-v_p and w_j = v_p v_j / w_p.
  const std::size_t p = static_cast<std::size_t>(pivot - v.begin());
  std::vector<std::vector<Rational>> out;
  for (int sign : {1, -1}) {
    std::vector<Rational> w(v.size());
    Rational wp = sign * v[p];
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[p] * v[j] / wp;
    if (sp_moment(w) == sp_moment(v)) out.push_back(w);
  }
  return out;
}

SpTrivialActionReport sp_trivial_action(const std::vector<Rational>& v) {
  const int m = static_cast<int>(v.size());
  const RationalMatrix x = sp_moment(v);
  if (x.is_zero()) throw PreconditionError("sp_trivial_action: v must be nonzero");
  // x is nilpotent, so n(x) is the full sp-centralizer of x.
  Subspace n_x = centralizer_in(sp_algebra(m / 2), x);
  SpTrivialActionReport r;
  r.dim_n = n_x.dim();
  r.n_kills_fiber = true;
  for (const auto& w : sp_fiber(v))
    for (const auto& xi : n_x.elements()) r.n_kills_fiber = r.n_kills_fiber && (xi * RationalMatrix::column(w)).is_zero();
  const RationalMatrix minus = Rational(-1) * RationalMatrix::identity(m);
  r.minus_identity_stabilizes_x = is_symplectic(minus) && minus * x * inverse(minus) == x;
  r.minus_identity_moves_v = !(minus * RationalMatrix::column(v) == RationalMatrix::column(v));
  return r;
}

RationalMatrix source(const GroupoidElement& a) { return a.xi; }

RationalMatrix target(const GroupoidElement& a) { return a.g * a.xi * inverse(a.g); }

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (!(source(a) == target(b))) throw PreconditionError("compose: pair is not composable");
  return {a.g * b.g, b.xi};
}

GroupoidElement identity_bisection(const RationalMatrix& x) { return {RationalMatrix::identity(x.rows()), x}; }

GroupoidElement inverse(const GroupoidElement& a) { return {inverse(a.g), target(a)}; }

bool GroupoidReport::ok() const {
  return std::all_of(std::begin(failures), std::end(failures), [](std::size_t f) { return f == 0; });
}

GroupoidReport groupoid_axiom_suite(int n, std::size_t samples, Sampler& rng) {
  GroupoidReport r;
  for (std::size_t k = 0; k < samples; ++k) {
    ++r.samples;
    // Composable triple a, b, c: source(a) = target(b), source(b) = target(c).
    GroupoidElement c{rng.invertible(n), rng.matrix(n, n, 4)};
    GroupoidElement b{rng.invertible(n), target(c)};
    GroupoidElement a{rng.invertible(n), target(b)};
    GroupoidElement ab = compose(a, b);
    if (!(source(ab) == source(b) && target(ab) == target(a))) ++r.failures[0];
    if (!(compose(ab, c) == compose(a, compose(b, c)))) ++r.failures[1];
    const RationalMatrix x = c.xi;
    if (!(source(identity_bisection(x)) == x && target(identity_bisection(x)) == x)) ++r.failures[2];
    if (!(compose(identity_bisection(target(a)), a) == a && compose(a, identity_bisection(source(a))) == a))
      ++r.failures[3];
    GroupoidElement ai = inverse(a);
    if (!(source(ai) == target(a) && target(ai) == source(a))) ++r.failures[4];
    if (!(compose(a, ai) == identity_bisection(target(a)) && compose(ai, a) == identity_bisection(source(a))))
      ++r.failures[5];
  }
  return r;
}

namespace {

// Rows whose common kernel is the column span of `basis`.
RationalMatrix defining_rows(const RationalMatrix& basis) {
  RationalMatrix k = kernel_matrix(basis.transpose());
  return k.transpose();
}

}  // namespace

SliceTheoremReport slice_theorem_tangent_check(const CoadjointOrbitSpace& space, const AffineSlice& s,
                                               const LieElement& x) {
  const LieAlgebraSpec& g = x.algebra();
  if (!s.contains(x.matrix())) throw PreconditionError("slice_theorem_tangent_check: x is not on the slice");
  if (!(rational_canonical_form(space.base_point.matrix()) == rational_canonical_form(x.matrix())))
    throw PreconditionError("slice_theorem_tangent_check: x is not on the orbit");
  const RationalMatrix B = whole_algebra(g).basis();
  const std::size_t N = B.rows(), d = B.cols();
  const RationalMatrix Q = defining_rows(s.directions.basis());
  // Tangent vectors (zeta, v) at (1, x): ds = v, dt = [zeta, x] + v.
  const RationalMatrix bracket_x = Rational(-1) * (ad_matrix(x.matrix()) * B);
  RationalMatrix ds(N, 2 * d), dt(N, 2 * d);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ds(i, d + j) = B(i, j);
      dt(i, j) = bracket_x(i, j);
      dt(i, d + j) = B(i, j);
    }
  SliceTheoremReport r;
  Subspace orbit_tangent = image_of_ad(whole_algebra(g), x.matrix());
  r.dim_M = orbit_tangent.dim();
  r.dim_GS = 2 * d - rank(Q * ds);
  r.dim_GSS = 2 * d - rank(vstack(Q * ds, Q * dt));
  r.dim_fiber = intersection(orbit_tangent, s.directions).dim();
  r.closes = r.dim_GS + r.dim_fiber == r.dim_M + r.dim_GSS;
  r.verdict = poisson_slice_check(s, x);
  return r;
}

}  // namespace slicekit
