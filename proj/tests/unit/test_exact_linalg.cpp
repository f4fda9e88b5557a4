#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "slicekit/canonical_form.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/polynomial.hpp"
#include "slicekit/sampling.hpp"

using namespace slicekit;

namespace {

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

RationalMatrix diag(std::vector<Rational> d) { return RationalMatrix::diagonal(d); }

}  // namespace

TEST_CASE("rationals stay reduced and round-trip through text") {
  CHECK(to_string(frac(6, -4)) == "-3/2");
  CHECK(to_string(frac(4, 2)) == "2");
  CHECK(parse_rational("-10/4") == frac(-5, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("1.5"), MalformedInput);
  CHECK_THROWS_AS(parse_rational(""), MalformedInput);
  CHECK_THROWS_AS(frac(1, 0), std::invalid_argument);
  Sampler rng(3);
  for (int k = 0; k < 200; ++k) {
    const Rational q = rng.rational(1000);
    CHECK(parse_rational(to_string(q)) == q);
    CHECK(q.get_den() > 0);
    CHECK(gcd(q.get_num(), q.get_den()) == 1);
  }
}

TEST_CASE("rank and kernel on small fixtures") {
  auto id = rank_kernel(RationalMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel_basis.empty());

  auto z = rank_kernel(RationalMatrix::zero(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.kernel_basis.size() == 3);

  auto k = rank_kernel({{1, 2}, {2, 4}});
  CHECK(k.rank == 1);
  REQUIRE(k.kernel_basis.size() == 1);
  CHECK(k.kernel_basis[0] == RationalMatrix{{-2}, {1}});
}

TEST_CASE("rank, kernel and determinant agree with the reference elimination") {
  Sampler rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = rng.integer(1, 5), c = rng.integer(1, 5);
    RationalMatrix m = rng.matrix(r, c, 3);
    // Force some rank deficiency.
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - (r > 2 ? m(1, j) : Rational(0));
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == oracle::rank(m));
    CHECK(rk.rank + rk.kernel_basis.size() == c);
    for (const auto& v : rk.kernel_basis) CHECK((m * v).is_zero());
    if (!rk.kernel_basis.empty()) CHECK(oracle::rank(hstack(rk.kernel_basis, c)) == rk.kernel_basis.size());
    if (r == c) CHECK(determinant(m) == oracle::determinant(m));
  }
}

TEST_CASE("row scaling leaves rank and kernel span unchanged") {
  Sampler rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng.integer(2, 4), c = rng.integer(2, 5);
    RationalMatrix m = rng.matrix(r, c, 2);
    RationalMatrix s = m;
    const std::size_t row = rng.integer(0, static_cast<long>(r) - 1);
    Rational f = 0;
    while (f == 0) f = rng.rational(5);
    for (std::size_t j = 0; j < c; ++j) s(row, j) *= f;
    CHECK(rank(s) == rank(m));
    CHECK(span_equal(kernel_matrix(s), kernel_matrix(m)));
    CHECK(kernel_matrix(s) == kernel_matrix(m));
  }
}

TEST_CASE("solve, inverse and span operations") {
  const RationalMatrix a{{2, 1}, {1, 1}};
  CHECK(inverse(a) * a == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), PreconditionError);
  auto x = solve(a, RationalMatrix{{3}, {2}});
  REQUIRE(x);
  CHECK(*x == RationalMatrix{{1}, {1}});
  CHECK_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, RationalMatrix{{1}, {2}}));

  const RationalMatrix u{{1, 0}, {0, 1}, {0, 0}};
  const RationalMatrix v{{0}, {1}, {1}};
  CHECK(span_sum(u, v).cols() == 3);
  CHECK(span_intersection(u, v).cols() == 0);
  CHECK(span_contains(u, RationalMatrix{{5}, {-1}, {0}}));
  CHECK_FALSE(span_contains(u, v));
  CHECK(span_equal(u, RationalMatrix{{1, 1}, {1, -1}, {0, 0}}));
}

TEST_CASE("minimal polynomial fixtures") {
  CHECK(min_poly(diag({1, 1, 2})) == poly({2, -3, 1}));
  CHECK(min_poly(RationalMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) == RationalPolynomial::monomial(3));
  CHECK(min_poly(RationalMatrix::identity(4)) == poly({-1, 1}));
}

TEST_CASE("characteristic polynomial matches interpolated determinants; min poly divides it") {
  Sampler rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.integer(1, 5);
    RationalMatrix m = trial % 2 ? rng.matrix(n, n, 3) : rng.rational_spectrum(n, LieAlgebraSpec::gl(n));
    const auto cp = charpoly(m);
    CHECK(cp.coefficients() == oracle::charpoly(m));
    const auto mp = min_poly(m);
    CHECK(mp.leading() == 1);
    CHECK(mp(m).is_zero());
    CHECK(divmod(cp, mp).second.is_zero());
    // No proper monic divisor of lower degree annihilates m: the powers
    // I, m, ..., m^{deg-1} are independent.
    std::vector<RationalMatrix> powers;
    RationalMatrix p = RationalMatrix::identity(n);
    for (int k = 0; k < mp.degree(); ++k) {
      powers.push_back(p.flatten());
      p = p * m;
    }
    CHECK(oracle::rank(hstack(powers, n * n)) == static_cast<std::size_t>(mp.degree()));
  }
}

TEST_CASE("squarefree part fixtures") {
  CHECK(squarefree_part(poly({1, -2, 1})) == poly({-1, 1}));
  CHECK(squarefree_part(poly({1, 0, 1})) == poly({1, 0, 1}));
  CHECK(squarefree_part(poly({0, 0, -1, 1})) == poly({0, -1, 1}));
  CHECK_THROWS(squarefree_part(RationalPolynomial()));
}

TEST_CASE("rational roots with multiplicities and an irrational residual") {
  // (t - 1/2)^2 (t + 3) (t^2 - 2)
  RationalPolynomial p = RationalPolynomial::linear(frac(1, 2)) * RationalPolynomial::linear(frac(1, 2)) *
                         RationalPolynomial::linear(-3) * poly({-2, 0, 1});
  const auto r = rational_roots(p);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].first == -3);
  CHECK(r.roots[0].second == 1);
  CHECK(r.roots[1].first == frac(1, 2));
  CHECK(r.roots[1].second == 2);
  CHECK(r.residual == poly({-2, 0, 1}));
  Sampler rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    RationalPolynomial q = RationalPolynomial::constant(rng.integer(1, 5));
    std::map<Rational, unsigned> expected;
    for (int k = 0; k < 4; ++k) {
      Rational c = rng.rational(6);
      q = q * RationalPolynomial::linear(c);
      ++expected[c];
    }
    const auto found = rational_roots(q);
    CHECK(found.residual.degree() == 0);
    std::map<Rational, unsigned> got(found.roots.begin(), found.roots.end());
    CHECK(got == expected);
  }
}

TEST_CASE("rational canonical form fixtures") {
  const auto c = companion(poly({2, -3, 1}));
  CHECK(rational_canonical_form(c) == c);
  CHECK(rational_canonical_form(diag({1, 2})) == c);
  const RationalMatrix j{{0, 1}, {0, 0}};
  CHECK(rational_canonical_form(j) == rational_canonical_form(j.transpose()));
  CHECK_FALSE(rational_canonical_form(j) == rational_canonical_form(RationalMatrix::zero(2, 2)));
  // diag(1,1,2): invariant factors t - 1 and (t - 1)(t - 2).
  const auto f = invariant_factors(diag({1, 1, 2}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == poly({-1, 1}));
  CHECK(f[1] == poly({2, -3, 1}));
}

TEST_CASE("rational canonical form is a conjugation invariant") {
  Sampler rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.integer(1, 5);
    const RationalMatrix m = trial % 2 ? rng.matrix(n, n, 3) : rng.rational_spectrum(n, LieAlgebraSpec::gl(n));
    const RationalMatrix g = rng.invertible(n);
    CHECK(rational_canonical_form(g * m * inverse(g)) == rational_canonical_form(m));
    // The product of the invariant factors is the characteristic polynomial.
    RationalPolynomial prod = RationalPolynomial::constant(1);
    for (const auto& p : invariant_factors(m)) prod = prod * p;
    CHECK(prod.coefficients() == oracle::charpoly(m));
  }
}

TEST_CASE("canonical form separates non-conjugate matrices with one characteristic polynomial") {
  // diag(1,1) + E_12 and diag(1,1) share t^2 - 2t + 1 but are not conjugate.
  CHECK_FALSE(rational_canonical_form(RationalMatrix{{1, 1}, {0, 1}}) ==
              rational_canonical_form(RationalMatrix::identity(2)));
  // J_2 + J_1 vs J_3 shifted: same characteristic polynomial t^3.
  RationalMatrix a(3, 3), b(3, 3);
  a(0, 1) = 1;
  b(0, 1) = 1;
  b(1, 2) = 1;
  CHECK_FALSE(rational_canonical_form(a) == rational_canonical_form(b));
}
