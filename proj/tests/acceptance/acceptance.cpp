// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "slicekit/canonical_form.hpp"
#include "slicekit/hamiltonian.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/residual.hpp"
#include "slicekit/sampling.hpp"
#include "slicekit/slices.hpp"

using namespace slicekit;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::string first_failure;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

std::string text(const RationalMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

RationalMatrix traceless(RationalMatrix m, const LieAlgebraSpec& g) {
  if (g.family == Family::sl) m -= (m.trace() / g.n) * RationalMatrix::identity(g.n);
  return m;
}

std::vector<LieAlgebraSpec> algebras(int lo, int hi) {
  std::vector<LieAlgebraSpec> out;
  for (int n = lo; n <= hi; ++n) {
    out.push_back(LieAlgebraSpec::gl(n));
    if (n >= 2) out.push_back(LieAlgebraSpec::sl(n));
  }
  return out;
}

// Diagonalizable over Q: the eigenspaces of the rational roots fill Q^n.
bool split_semisimple(const RationalMatrix& s) {
  const auto roots = rational_roots(charpoly(s));
  if (roots.residual.degree() > 0) return true;  // not decidable this way; checked by min poly instead
  std::size_t total = 0;
  for (const auto& [c, mult] : roots.roots) {
    RationalMatrix shifted = s;
    shifted -= c * RationalMatrix::identity(s.rows());
    total += s.rows() - oracle::rank(shifted);
  }
  return total == s.rows();
}

RationalMatrix irrational_block(int n, Sampler& rng) {
  // [[C, I], [0, C]] with C the companion of t^2 - 2, padded by a scalar.
  std::vector<RationalMatrix> blocks;
  int used = 0;
  if (n >= 4) {
    blocks.push_back(RationalMatrix{{0, 2, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 1, 0}});
    used = 4;
  } else if (n >= 2) {
    blocks.push_back(RationalMatrix{{0, 2}, {1, 0}});
    used = 2;
  }
  if (used < n) blocks.push_back(RationalMatrix::diagonal(std::vector<Rational>(n - used, rng.integer(-3, 3))));
  return rng.conjugate(block_diagonal(blocks));
}

Outcome jordan_chevalley() {
  Outcome o;
  Sampler rng(1001);
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    const auto g = LieAlgebraSpec::gl(n);
    const auto labels = enumerate_classes(g);
    for (int k = 0; k < 100; ++k) {
      RationalMatrix x;
      switch (k % 4) {
        case 0: x = rng.matrix(n, n, 4); break;
        case 1: x = rng.with_label(labels[rng.integer(0, static_cast<long>(labels.size()) - 1)], g); break;
        case 2: x = rng.rational_spectrum(n, g); break;
        default: x = irrational_block(n, rng); break;
      }
      const auto d = jordan_decompose(LieElement(g, x));
      const auto& s = d.x_s.matrix();
      const auto& nil = d.x_n.matrix();
      const auto where = " at " + text(x);
      o.expect(s + nil == x, "sum" + where);
      o.expect(s * nil == nil * s, "commutation" + where);
      const auto mp = min_poly(s);
      o.expect(squarefree_part(mp) == mp, "squarefree minimal polynomial" + where);
      o.expect(split_semisimple(s), "semisimple part diagonalizable" + where);
      RationalMatrix p = RationalMatrix::identity(n);
      for (int i = 0; i < n; ++i) p = p * nil;
      o.expect(p.is_zero(), "nilpotency" + where);
      o.expect(oracle::charpoly(s) == oracle::charpoly(x), "same characteristic polynomial" + where);
      o.expect(d.witness.degree() < n && d.witness(x) == s, "polynomial witness" + where);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 30.0, "runtime under 30 s");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << secs << " s";
  o.note = os.str();
  return o;
}

Outcome jacobson_morozov() {
  Outcome o;
  for (const auto& g : algebras(2, 6))
    for (const auto& lam : oracle::partitions(g.n)) {
      if (lam.size() == static_cast<std::size_t>(g.n)) continue;
      const auto e = nilpotent_representative(lam);
      const auto t = jm_complete(LieElement(g, e));
      const auto& E = t.e.matrix();
      const auto& H = t.h.matrix();
      const auto& F = t.f.matrix();
      const auto where = " for " + to_string(lam) + " in " + g.name();
      o.expect(E * F - F * E == H, "[e,f] = h" + where);
      o.expect(H * E - E * H == Rational(2) * E, "[h,e] = 2e" + where);
      o.expect(H * F - F * H == Rational(-2) * F, "[h,f] = -2f" + where);
      const std::size_t dim = oracle::centralizer_dim_gl(e) - (g.family == Family::sl ? 1 : 0);
      o.expect(slodowy_slice(t, g).dim() == dim, "slice dimension" + where);
    }
  return o;
}

Outcome slodowy_transversality() {
  Outcome o;
  Sampler rng(1003);
  for (const auto& g : algebras(2, 4))
    for (const auto& lam : oracle::partitions(g.n)) {
      if (lam.size() == static_cast<std::size_t>(g.n)) continue;
      const auto s = slodowy_slice(jm_complete(LieElement(g, nilpotent_representative(lam))), g);
      for (int k = 0; k < 50; ++k) {
        const LieElement y(g, s.base.matrix() + rng.element_of(s.directions, 3));
        const auto v = poisson_slice_check(s, y);
        const auto where = " for " + to_string(lam) + " in " + g.name() + " at " + text(y.matrix());
        o.expect(v.transversal_ok, "transversal" + where);
        o.expect(v.symplectic_ok, "symplectic" + where);
      }
    }
  return o;
}

Outcome fundamental_domain() {
  Outcome o;
  Sampler rng(1004);
  for (int n = 1; n <= 5; ++n) {
    const auto g = LieAlgebraSpec::gl(n);
    std::vector<std::pair<std::vector<Rational>, RationalMatrix>> seen;
    int made = 0;
    while (made < 50) {
      const RationalMatrix x = made % 2 ? rng.matrix(n, n, 3) : rng.rational_spectrum(n, g);
      if (min_poly(x).degree() != n) continue;  // not regular
      ++made;
      const auto rep = fundamental_rep(LieElement(g, x)).matrix();
      const auto cp = oracle::charpoly(x);
      const auto where = " at " + text(x);
      o.expect(rep == principal_slice_point(RationalPolynomial(cp)), "lies on the principal slice" + where);
      o.expect(rational_canonical_form(rep) == rational_canonical_form(x), "same canonical form" + where);
      o.expect(fundamental_rep(LieElement(g, rng.conjugate(x))).matrix() == rep, "constant on the orbit" + where);
      seen.emplace_back(cp, rep);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (std::size_t j = i + 1; j < seen.size(); ++j)
        o.expect((seen[i].first == seen[j].first) == (seen[i].second == seen[j].second), "injectivity");
  }
  return o;
}

Outcome contracting_action() {
  Outcome o;
  for (const auto& g : algebras(2, 6))
    for (const auto& lam : oracle::partitions(g.n)) {
      if (lam.size() == static_cast<std::size_t>(g.n)) continue;
      const auto t = jm_complete(LieElement(g, nilpotent_representative(lam)));
      const auto w = contracting_weights(t, g);
      const auto where = " for " + to_string(lam) + " in " + g.name();
      o.expect(w.size() == slodowy_slice(t, g).dim(), "one weight per direction" + where);
      for (int v : w) o.expect(v <= 0, "ad_h weight on g_f" + where);
      // Recount the weights: dim {y : [f,y] = 0, [h,y] = k y} by the
      // reference rank, with the trace row for sl.
      const std::size_t n = g.n, nn = n * n;
      const RationalMatrix af = oracle::ad(t.f.matrix()), ah = oracle::ad(t.h.matrix());
      std::size_t counted = 0;
      for (int k = -2 * g.n; k <= 2 * g.n; ++k) {
        RationalMatrix m(2 * nn + 1, nn);
        for (std::size_t i = 0; i < nn; ++i)
          for (std::size_t j = 0; j < nn; ++j) {
            m(i, j) = af(i, j);
            m(nn + i, j) = ah(i, j) - (i == j ? Rational(k) : Rational(0));
          }
        if (g.family == Family::sl)
          for (std::size_t i = 0; i < n; ++i) m(2 * nn, i * n + i) = 1;
        const std::size_t mult = nn - oracle::rank(m);
        counted += mult;
        o.expect(static_cast<std::size_t>(std::count(w.begin(), w.end(), k)) == mult,
                 "weight " + std::to_string(k) + " multiplicity" + where);
        // t . (e + y) = t^2 Ad(t^{-h}) (e + y) scales a weight k vector by t^{2-k}.
        if (mult > 0) o.expect(2 - k >= 2, "contracting weight on the slice" + where);
      }
      o.expect(counted == w.size(), "all weights accounted for" + where);
    }
  return o;
}

Outcome induction() {
  Outcome o;
  for (int n = 1; n <= 8; ++n)
    for (const auto& blocks : compositions_of(n)) {
      Partition sorted = blocks;
      std::sort(sorted.rbegin(), sorted.rend());
      o.expect(richardson(blocks) == transpose(sorted), "richardson for " + to_string(blocks));
    }
  auto dim = [](const Partition& lam) {
    const int m = size_of(lam);
    return m * m - oracle::sum_squares_of_transpose(lam);
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& blocks : compositions_of(n)) {
      std::vector<LeviOrbitPair> pairs{{blocks, {}}};
      for (int b : blocks) {
        std::vector<LeviOrbitPair> next;
        for (const auto& p : pairs)
          for (const auto& lam : oracle::partitions(b)) {
            auto q = p;
            q.orbit_parts.push_back(lam);
            next.push_back(q);
          }
        pairs = next;
      }
      for (const auto& p : pairs) {
        int levi = 0;
        for (const auto& lam : p.orbit_parts) levi += dim(lam);
        o.expect(dim(ls_induce(p)) == levi + 2 * nilradical_dimension(blocks),
                 "dimension identity for " + to_string(blocks));
      }
    }
  // Borel induction at n = 3: random strictly upper triangular matrices.
  Sampler rng(1006);
  Partition best{1, 1, 1};
  for (int k = 0; k < 20; ++k) {
    RationalMatrix x(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) x(i, j) = rng.integer(-3, 3);
    const Partition type = oracle::jordan_type(x);
    o.expect(dominance_leq(type, {3}), "Borel nilradical stays in the closure");
    if (dominance_leq(best, type)) best = type;
  }
  o.expect(best == Partition{3}, "Borel saturation reaches the regular orbit");
  o.expect(ls_induce({{1, 1, 1}, {{1}, {1}, {1}}}) == Partition{3}, "Borel induction is (3)");
  return o;
}

int class_dim_by_rank(const ClassLabel& lab, const LieAlgebraSpec& g) {
  const RationalMatrix x = class_representative(lab, g);
  const std::size_t n = g.n;
  const RationalMatrix a = oracle::ad(x);
  RationalMatrix m(n * n, a.cols() + lab.size());
  for (std::size_t i = 0; i < n * n; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < lab.size(); ++k) {
    for (int i = 0; i < lab[k].size; ++i) m((offset + i) * n + offset + i, a.cols() + k) = 1;
    offset += lab[k].size;
  }
  return static_cast<int>(oracle::rank(m));
}

Outcome decomposition_classes() {
  Outcome o;
  const auto gl2 = LieAlgebraSpec::gl(2);
  const auto labels = enumerate_classes(gl2);
  o.expect(labels.size() == 3, "three classes in gl_2");
  std::multiset<int> dims, oracle_dims;
  for (const auto& lab : labels) {
    dims.insert(class_dimension(lab, gl2));
    oracle_dims.insert(class_dim_by_rank(lab, gl2));
  }
  o.expect(dims == oracle_dims, "gl_2 dimensions match the rank computation");
  o.expect(dims == std::multiset<int>{1, 3, 4}, "gl_2 dimensions are {4, 3, 1}");
  Sampler rng(1007);
  for (int k = 0; k < 1000; ++k) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const auto g = k % 2 ? LieAlgebraSpec::gl(n) : LieAlgebraSpec::sl(n);
    const RationalMatrix x = rng.rational_spectrum(n, g);
    const auto l = classify(LieElement(g, x));
    const auto all = enumerate_classes(g);
    const auto where = " at " + text(x);
    o.expect(std::find(all.begin(), all.end(), l) != all.end(), "label enumerated" + where);
    o.expect(classify(LieElement(g, rng.conjugate(x))) == l, "conjugation invariance" + where);
    Rational c = 0;
    while (c == 0) c = rng.rational(5);
    o.expect(classify(LieElement(g, c * x)) == l, "scaling invariance" + where);
  }
  return o;
}

Outcome perp_identity() {
  Outcome o;
  for (const auto& g : algebras(1, 4))
    for (const auto& lab : enumerate_classes(g)) {
      const LieElement x(g, class_representative(lab, g));
      const auto c = trivial_action_core(x);
      o.expect(c.equal(), "perp equals n(x) for " + to_string(lab) + " in " + g.name());
      const int expected = g.dimension() - class_dimension(lab, g);
      o.expect(static_cast<int>(c.perp.dim()) == expected, "perp dimension for " + to_string(lab));
    }
  return o;
}

Outcome natural_slice_criterion() {
  Outcome o;
  Sampler rng(1009);
  for (const auto& g : algebras(2, 4)) {
    const auto labels = enumerate_classes(g);
    for (int k = 0; k < 100; ++k) {
      // Semisimple x from a random Levi, y from the slice, the Levi or anywhere.
      const auto& lab = labels[rng.integer(0, static_cast<long>(labels.size()) - 1)];
      ClassLabel ss;
      for (const auto& p : lab) ss.push_back({p.size, Partition(p.size, 1)});
      const LieElement x(g, class_representative(canonical_label(ss), g));
      const auto d = natural_slice(x);
      RationalMatrix y;
      switch (k % 3) {
        case 0: y = sample_natural_slice(d, rng); break;
        case 1: {
          std::vector<RationalMatrix> parts;
          for (const int m : d.levi.blocks) {
            parts.push_back(RationalMatrix::diagonal(rng.rational_spectrum(m, LieAlgebraSpec::gl(m)).diagonal_entries()));
          }
          y = traceless(block_diagonal(parts), g);
          break;
        }
        default: y = rng.rational_spectrum(g.n, g); break;
      }
      const auto v = membership_Sx(LieElement(g, y), x);
      o.expect(v.rank_test.has_value(), "rank test available");
      o.expect(v.agree(), "descriptor and rank test agree at x = " + text(x.matrix()) + ", y = " + text(y));
    }
  }
  const auto gl3 = LieAlgebraSpec::gl(3);
  const auto reg = natural_slice(LieElement(gl3, nilpotent_representative({3})));
  std::set<ClassLabel> got;
  for (const auto& p : reg.pairs) {
    ClassLabel merged;
    for (const auto& b : p) merged.insert(merged.end(), b.begin(), b.end());
    got.insert(canonical_label(merged));
  }
  const std::set<ClassLabel> expected{canonical_label({{3, {3}}}), canonical_label({{2, {2}}, {1, {1}}}),
                                      canonical_label({{1, {1}}, {1, {1}}, {1, {1}}})};
  o.expect(reg.pairs.size() == 3 && got == expected, "gl_3 regular nilpotent pair list");
  return o;
}

long torsion_count(const Partition& lambda) {
  const int r = static_cast<int>(lambda.size());
  long modulus = 1;
  for (int part : lambda) modulus = std::lcm(modulus, static_cast<long>(part));
  std::vector<long> a(r, 0);
  long hits = 0;
  while (true) {
    long s = 0;
    for (int j = 0; j < r; ++j) s += lambda[j] * a[j];
    if (s % modulus == 0) ++hits;
    int j = 0;
    while (j < r && ++a[j] == modulus) a[j++] = 0;
    if (j == r) break;
  }
  for (int j = 1; j < r; ++j) hits /= modulus;
  return hits;
}

Outcome residual_groups() {
  Outcome o;
  for (const auto& g : algebras(1, 5))
    for (const auto& lab : enumerate_classes(g)) {
      const LieElement x(g, class_representative(lab, g));
      const auto d = subquotient_data(x);
      const auto where = " for " + to_string(lab) + " in " + g.name();
      o.expect(d.rank_T == d.rank_G - d.rank_Lprime, "rank_T = rank G - rank L'" + where);
      o.expect(d.sequence_consistent(), "sequence" + where);
      o.expect(ax_presentation(x).agree(), "A(x) presentations" + where);
      if (g.n <= 3) {
        std::vector<int> explicit_orders;
        for (const auto& p : lab) explicit_orders.push_back(static_cast<int>(torsion_count(p.partition)));
        o.expect(d.C_factors == explicit_orders, "C(x) against torsion points" + where);
        o.expect(component_orders_from_torus(x) == d.C_factors, "C(x) against the torus" + where);
      }
    }
  return o;
}

Outcome weyl_fiber() {
  Outcome o;
  Sampler rng(1011);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      const LieElement x(LieAlgebraSpec::gl(n), RationalMatrix::diagonal(rng.distinct_rationals(n, 9)));
      const auto fiber = orbit_fiber_over_cartan({x});
      std::set<std::vector<Rational>> distinct;
      bool ok = true;
      for (const auto& y : fiber) {
        ok = ok && y.matrix().is_diagonal() && oracle::charpoly(y.matrix()) == oracle::charpoly(x.matrix());
        distinct.insert(y.matrix().diagonal_entries());
      }
      o.expect(ok, "fiber points are diagonal and on the orbit");
      o.expect(static_cast<long>(fiber.size()) == oracle::factorial(n) && distinct.size() == fiber.size(),
               "n! points at " + text(x.matrix()));
    }
  return o;
}

Outcome sp_example() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.expect(sp_kernel_certificate(n), "kernel certificate n = " + std::to_string(n));
  Sampler rng(1012);
  std::size_t witnesses = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = static_cast<int>(rng.integer(1, 4));
    std::vector<Rational> v(2 * n);
    for (auto& c : v) c = rng.rational(4);
    const auto m = sp_moment(v);
    o.expect(in_sp(m), "moment in sp");
    o.expect(oracle::rank(m) <= 1, "rank at most one");
    o.expect((m * m).is_zero(), "nilpotent");
    if (m.is_zero() || k % 10) continue;
    const auto t = sp_trivial_action(v);
    o.expect(sp_fiber(v).size() == 2, "fiber {v, -v}");
    o.expect(t.n_kills_fiber, "n(x) acts trivially");
    o.expect(t.minus_identity_stabilizes_x && t.minus_identity_moves_v, "-I witness");
    ++witnesses;
  }
  o.expect(witnesses > 0, "witnesses checked");
  return o;
}

Outcome groupoid_and_slice_theorem() {
  Outcome o;
  Sampler rng(1013);
  for (int n = 1; n <= 3; ++n) {
    const auto rep = groupoid_axiom_suite(n, 100, rng);
    for (int i = 0; i < 6; ++i)
      o.expect(rep.failures[i] == 0, "groupoid axiom " + std::to_string(i + 1) + " at n = " + std::to_string(n));
    o.expect(rep.samples == 100, "sample count");
  }
  const auto g2 = LieAlgebraSpec::gl(2);
  const LieElement base(g2, RationalMatrix::diagonal(std::vector<Rational>{1, 2}));
  auto r = slice_theorem_tangent_check({base}, slodowy_slice(jm_complete(LieElement(g2, nilpotent_representative({2}))), g2),
                                       fundamental_rep(base));
  o.expect(r.closes && r.ok() && r.dim_GS + r.dim_fiber - r.dim_GSS == r.dim_M, "principal slice fixture");
  const auto g3 = LieAlgebraSpec::gl(3);
  const LieElement x(g3, class_representative(enumerate_classes(g3).front(), g3));
  r = slice_theorem_tangent_check({x}, AffineSlice{x, whole_algebra(g3)}, x);
  o.expect(r.closes && r.ok() && r.dim_GS == 18 && r.dim_GSS == 18, "whole algebra fixture");
  const LieElement e(g2, nilpotent_representative({2}));
  r = slice_theorem_tangent_check({e}, AffineSlice{e, diagonal_subalgebra(g2)}, e);
  o.expect(r.closes && !r.ok() && r.verdict.sum_rank == 3, "Cartan at the regular nilpotent is rejected");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"jordan decomposition certificates", jordan_chevalley},
      {"sl2-triples and slice dimensions", jacobson_morozov},
      {"slodowy slices are poisson transversals", slodowy_transversality},
      {"principal slice is a fundamental domain", fundamental_domain},
      {"contracting action on slodowy slices", contracting_action},
      {"induction, richardson and the dimension identity", induction},
      {"decomposition classes", decomposition_classes},
      {"perp of the class tangent space", perp_identity},
      {"natural slice membership", natural_slice_criterion},
      {"residual groups", residual_groups},
      {"weyl group fiber", weyl_fiber},
      {"sp moment map", sp_example},
      {"groupoid axioms and slice theorem", groupoid_and_slice_theorem},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    std::string error;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool pass = error.empty() && o.failed == 0 && o.checks > 0;
    if (!pass) ++failures;
    std::printf("%s  %2zu  %s  (%zu checks", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.checks);
    if (!o.note.empty()) std::printf(", %s", o.note.c_str());
    std::printf(")\n");
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (o.failed) std::printf("      %zu failed, first: %s\n", o.failed, o.first_failure.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
