#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "slicekit/classes.hpp"
#include "slicekit/residual.hpp"

using namespace slicekit;

namespace {

ClassLabel label(std::initializer_list<LabelPair> pairs) { return canonical_label(ClassLabel(pairs)); }

// Component count of {t in (C^*)^r : prod t_j^{lambda_j} = 1}, by counting
// N-torsion points: the kernel has N^{r-1} |pi_0| of them once N is a
// multiple of every part.
long torsion_count(const Partition& lambda) {
  const int r = static_cast<int>(lambda.size());
  long modulus = 1;
  for (int part : lambda) modulus = std::lcm(modulus, static_cast<long>(part));
  std::vector<long> a(r, 0);
  long hits = 0, total = 0;
  while (true) {
    long s = 0;
    for (int j = 0; j < r; ++j) s += lambda[j] * a[j];
    if (s % modulus == 0) ++hits;
    ++total;
    int j = 0;
    while (j < r && ++a[j] == modulus) a[j++] = 0;
    if (j == r) break;
  }
  long per = 1;
  for (int j = 1; j < r; ++j) per *= modulus;
  return hits / per;
}

}  // namespace

TEST_CASE("residual group fixtures") {
  const auto gl3 = LieAlgebraSpec::gl(3);
  auto d = subquotient_data(LieElement(gl3, RationalMatrix::diagonal(std::vector<Rational>{1, 1, 2})));
  CHECK(d.rank_T == 2);
  CHECK(d.dim_L == 5);
  CHECK(d.dim_Lprime == 3);
  CHECK(d.C_order == 1);
  CHECK(d.sequence_consistent());

  for (int n = 2; n <= 5; ++n) {
    const auto sl = LieAlgebraSpec::sl(n);
    d = subquotient_data(LieElement(sl, nilpotent_representative({n})));
    CHECK(d.C_order == n);
    CHECK(d.rank_T == 0);
    const auto p = ax_presentation(LieElement(sl, nilpotent_representative({n})));
    CHECK(p.extension.free_rank == 0);
    CHECK(p.extension.torsion_order == n);
    CHECK(p.agree());
  }

  const auto sl2 = LieAlgebraSpec::sl(2);
  const auto a = ax_presentation(LieElement(sl2, RationalMatrix{{0, 1}, {0, 0}}));
  CHECK(a.fibered.free_rank == 0);
  CHECK(a.fibered.torsion_order == 2);
  CHECK(a.center_Lprime == std::vector<int>{2});

  // x = 0.
  d = subquotient_data(LieElement(gl3, RationalMatrix::zero(3, 3)));
  CHECK(d.rank_T == 1);
  CHECK(d.dim_A == 1);
  CHECK(d.C_order == 1);
  d = subquotient_data(LieElement(LieAlgebraSpec::sl(3), RationalMatrix::zero(3, 3)));
  CHECK(d.rank_T == 0);
  CHECK(d.dim_A == 0);
  CHECK(d.C_order == 1);

  // gl_4 with x_n of type (2,2): C = Z/2 even though GL is connected.
  d = subquotient_data(LieElement(LieAlgebraSpec::gl(4), nilpotent_representative({2, 2})));
  CHECK(d.C_factors == std::vector<int>{2});
  CHECK(d.rank_T == 1);
  // Two Levi blocks each with a (2,2) orbit: Z/2 x Z/2, not cyclic.
  const auto gl8 = LieAlgebraSpec::gl(8);
  d = subquotient_data(LieElement(gl8, class_representative(label({{4, {2, 2}}, {4, {2, 2}}}), gl8)));
  CHECK(d.C_order == 4);
  CHECK_FALSE(d.C_cyclic);
}

TEST_CASE("sequence bookkeeping and component orders for every class") {
  for (int n = 1; n <= 5; ++n)
    for (Family f : {Family::gl, Family::sl}) {
      if (f == Family::sl && n == 1) continue;
      const LieAlgebraSpec g{f, n};
      for (const auto& lab : enumerate_classes(g)) {
        const LieElement x(g, class_representative(lab, g));
        const auto d = subquotient_data(x);
        const int blocks = static_cast<int>(lab.size());
        CHECK(d.rank_G == g.rank());
        CHECK(d.rank_T == d.rank_G - d.rank_Lprime);
        CHECK(d.rank_T == (f == Family::gl ? blocks : blocks - 1));
        CHECK(d.sequence_consistent());
        // dim g_x and dim n(x) from the reference ranks.
        const int gx = static_cast<int>(oracle::centralizer_dim_gl(x.matrix())) - (f == Family::sl);
        int nx = 0;
        for (const auto& p : lab) nx += oracle::sum_squares_of_transpose(p.partition) - 1;
        CHECK(d.dim_gx == gx);
        CHECK(d.dim_N == nx);
        CHECK(d.dim_A == gx - nx);
        std::vector<int> expected;
        long order = 1;
        for (const auto& p : lab) {
          const long c = torsion_count(p.partition);
          expected.push_back(static_cast<int>(c));
          order *= c;
        }
        CHECK(d.C_factors == expected);
        CHECK(d.C_order == order);
        CHECK(component_orders_from_torus(x) == d.C_factors);
        CHECK(ax_presentation(x).agree());
      }
    }
}

TEST_CASE("the trivial-action core is an equality of subspaces") {
  for (int n = 1; n <= 4; ++n)
    for (Family f : {Family::gl, Family::sl}) {
      if (f == Family::sl && n == 1) continue;
      const LieAlgebraSpec g{f, n};
      for (const auto& lab : enumerate_classes(g)) {
        const LieElement x(g, class_representative(lab, g));
        const auto c = trivial_action_core(x);
        CHECK(c.perp_in_n);
        CHECK(c.n_in_perp);
        CHECK(c.equal());
        CHECK(c.perp == c.n_x);
      }
    }
}
