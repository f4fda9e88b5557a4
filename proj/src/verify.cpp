#include "slicekit/verify.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "slicekit/canonical_form.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/hamiltonian.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  return j;
}

namespace {

LieAlgebraSpec spec_of(const SuiteOptions& opt) { return {opt.family, opt.n}; }

SuiteReport start(const std::string& name, const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = name;
  r.n = opt.n;
  r.seed = opt.seed;
  r.samples = opt.samples;
  return r;
}

RationalMatrix traceless(RationalMatrix m, const LieAlgebraSpec& g) {
  if (g.family == Family::sl) m -= (m.trace() / g.n) * RationalMatrix::identity(g.n);
  return m;
}

std::string where(const RationalMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// Matrix with an irrational block when possible: companion(t^2 - 2) repeated
// with an off-diagonal identity, so the semisimple part is not diagonalizable
// over Q and the nilpotent part is nonzero.
RationalMatrix irrational_sample(int n, Sampler& rng) {
  const RationalPolynomial q({-2, 0, 1});
  std::vector<RationalMatrix> blocks;
  int used = 0;
  if (n >= 4) {
    RationalMatrix m(4, 4);
    const RationalMatrix c = companion(q);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        m(i, j) = c(i, j);
        m(i + 2, j + 2) = c(i, j);
      }
    m(0, 2) = 1;
    m(1, 3) = 1;
    blocks.push_back(m);
    used = 4;
  } else if (n >= 2) {
    blocks.push_back(companion(q));
    used = 2;
  }
  if (used < n) blocks.push_back(RationalMatrix::diagonal(std::vector<Rational>(n - used, rng.integer(-3, 3))));
  return rng.conjugate(block_diagonal(blocks));
}

std::vector<Sl2Triple> triples_for(const LieAlgebraSpec& g) {
  std::vector<Sl2Triple> out;
  for (const auto& p : partitions_of(g.n)) {
    if (p.size() == static_cast<std::size_t>(g.n)) continue;
    out.push_back(jm_complete(LieElement(g, nilpotent_representative(p))));
  }
  return out;
}

std::vector<LieElement> class_representatives(const LieAlgebraSpec& g) {
  std::vector<LieElement> out;
  for (const auto& label : enumerate_classes(g)) out.emplace_back(g, class_representative(label, g));
  return out;
}

// Block diagonal element of g_x for x with the given block sizes, each block
// with a small rational spectrum so that eigenvalues collide across blocks.
RationalMatrix sample_in_levi(const Composition& blocks, Sampler& rng, bool diagonal) {
  std::vector<RationalMatrix> parts;
  for (int m : blocks) {
    RationalMatrix b = rng.rational_spectrum(m, LieAlgebraSpec::gl(m));
    if (diagonal) b = RationalMatrix::diagonal(b.diagonal_entries());
    parts.push_back(b);
  }
  return block_diagonal(parts);
}

}  // namespace

SuiteReport verify_jordan(const SuiteOptions& opt) {
  auto r = start("jordan", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  const auto labels = enumerate_classes(g);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    RationalMatrix x;
    switch (k % 4) {
      case 0: x = rng.matrix(g.n, g.n, 4); break;
      case 1: x = rng.with_label(labels[rng.integer(0, static_cast<long>(labels.size()) - 1)], g); break;
      case 2: x = rng.rational_spectrum(g.n, g); break;
      default: x = irrational_sample(g.n, rng); break;
    }
    x = traceless(x, g);
    const auto d = jordan_decompose(LieElement(g, x));
    const auto& s = d.x_s.matrix();
    const auto& nil = d.x_n.matrix();
    const auto tag = " at " + where(x);
    r.expect(s + nil == x, "sum" + tag);
    r.expect(commutator(s, nil).is_zero(), "commutation" + tag);
    const auto mp = min_poly(s);
    r.expect(squarefree_part(mp) == mp, "squarefree minimal polynomial" + tag);
    r.expect(power(nil, g.n).is_zero(), "nilpotency" + tag);
    r.expect(d.witness.degree() < g.n && d.witness(x) == s, "polynomial witness" + tag);
  }
  return r;
}

SuiteReport verify_jm(const SuiteOptions& opt) {
  auto r = start("jm", opt);
  for (const auto g : {LieAlgebraSpec::gl(opt.n), LieAlgebraSpec::sl(opt.n)}) {
    for (const auto& t : triples_for(g)) {
      const auto tag = " for " + to_string(jordan_type(t.e.matrix())) + " in " + g.name();
      r.expect(bracket(t.h, t.e).matrix() == 2 * t.e.matrix(), "[h,e] = 2e" + tag);
      r.expect(bracket(t.h, t.f).matrix() == -2 * t.f.matrix(), "[h,f] = -2f" + tag);
      r.expect(bracket(t.e, t.f).matrix() == t.h.matrix(), "[e,f] = h" + tag);
      r.expect(slodowy_slice(t, g).dim() == centralizer(t.e).dim(), "slice dimension" + tag);
    }
  }
  return r;
}

SuiteReport verify_slodowy(const SuiteOptions& opt) {
  auto r = start("slodowy", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  for (const auto& t : triples_for(g)) {
    const auto s = slodowy_slice(t, g);
    const auto tag = " on slice of " + to_string(jordan_type(t.e.matrix()));
    for (std::size_t k = 0; k < opt.samples; ++k) {
      const RationalMatrix y = t.e.matrix() + rng.element_of(s.directions, 3);
      const auto v = poisson_slice_check(s, LieElement(g, y));
      r.expect(v.transversal_ok, "transversality" + tag + " at " + where(y));
      r.expect(v.symplectic_ok, "symplectic intersection" + tag + " at " + where(y));
    }
  }
  return r;
}

SuiteReport verify_fundamental(const SuiteOptions& opt) {
  auto r = start("fundamental", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  std::map<std::vector<Rational>, RationalMatrix> seen;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    RationalMatrix x;
    if (k % 2 == 0) {
      x = traceless(rng.matrix(g.n, g.n, 4), g);
    } else {
      // Regular with repeated eigenvalues: one Jordan block per eigenvalue.
      auto c = rng.distinct_rationals(g.n, 3);
      auto p = compositions_of(g.n);
      const auto& blocks = p[rng.integer(0, static_cast<long>(p.size()) - 1)];
      std::vector<RationalMatrix> parts;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        parts.push_back(c[i] * RationalMatrix::identity(blocks[i]) + jordan_blocks({blocks[i]}));
      x = traceless(rng.conjugate(block_diagonal(parts)), g);
    }
    if (centralizer(LieAlgebraSpec::gl(g.n), x).dim() != static_cast<std::size_t>(g.n)) continue;
    const auto s = fundamental_rep(LieElement(g, x)).matrix();
    const auto tag = " at " + where(x);
    r.expect(charpoly(s) == charpoly(x), "characteristic polynomial" + tag);
    r.expect(rational_canonical_form(s) == rational_canonical_form(x), "canonical form" + tag);
    r.expect(fundamental_rep(LieElement(g, rng.conjugate(x))).matrix() == s, "conjugation invariance" + tag);
    const auto key = charpoly(x).coefficients();
    auto [it, fresh] = seen.emplace(key, s);
    r.expect(fresh || it->second == s, "uniqueness" + tag);
  }
  std::set<std::vector<Rational>> images;
  for (const auto& [key, s] : seen) images.emplace(s.entries().begin(), s.entries().end());
  r.expect(images.size() == seen.size(), "injectivity on distinct characteristic polynomials");
  return r;
}

SuiteReport verify_contracting(const SuiteOptions& opt) {
  auto r = start("contracting", opt);
  for (const auto g : {LieAlgebraSpec::gl(opt.n), LieAlgebraSpec::sl(opt.n)}) {
    for (const auto& t : triples_for(g)) {
      const auto w = contracting_weights(t, g);
      const auto tag = " for " + to_string(jordan_type(t.e.matrix())) + " in " + g.name();
      r.expect(w.size() == slodowy_slice(t, g).dim(), "weight count" + tag);
      for (int m : w) {
        r.expect(m <= 0, "weight on g_f" + tag);
        r.expect(2 - m >= 2, "dilation weight" + tag);
      }
    }
  }
  return r;
}

SuiteReport verify_induction(const SuiteOptions& opt) {
  auto r = start("induction", opt);
  const int n = opt.n;
  for (const auto& c : compositions_of(n)) {
    const auto rich = richardson(c);
    r.expect(rich == transpose(normalized(c)), "richardson transpose for " + to_string(c));
    std::vector<Partition> zero;
    for (int m : c) zero.push_back(Partition(m, 1));
    r.expect(ls_induce({c, zero}) == rich, "zero-orbit induction for " + to_string(c));
  }
  for (const auto& c : compositions_of(n)) {
    std::vector<std::vector<Partition>> choices(1);
    for (int m : c) {
      std::vector<std::vector<Partition>> next;
      for (const auto& prefix : choices)
        for (const auto& p : partitions_of(m)) {
          auto q = prefix;
          q.push_back(p);
          next.push_back(q);
        }
      choices = std::move(next);
    }
    for (const auto& parts : choices) {
      const LeviOrbitPair pair{c, parts};
      int dim_levi_orbit = 0;
      for (std::size_t i = 0; i < c.size(); ++i) dim_levi_orbit += orbit_dimension(parts[i], c[i]);
      const auto ind = ls_induce(pair);
      r.expect(orbit_dimension(ind, n) == dim_levi_orbit + 2 * nilradical_dimension(c),
               "dimension identity for " + to_string(c));
    }
  }
  if (n <= 4) {
    // Borel induction: a generic strictly upper triangular matrix is regular.
    Sampler rng(opt.seed);
    Partition best;
    for (std::size_t k = 0; k < std::max<std::size_t>(opt.samples, 1); ++k) {
      RationalMatrix u(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u(i, j) = rng.integer(-2, 2);
      const auto p = jordan_type(u);
      if (best.empty() || dominance_leq(best, p)) best = p;
    }
    r.expect(best == richardson(Composition(n, 1)), "Borel saturation reaches the regular orbit");
  }
  return r;
}

SuiteReport verify_classes(const SuiteOptions& opt) {
  auto r = start("classes", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  const auto labels = enumerate_classes(g);
  r.expect(static_cast<long>(labels.size()) == class_count(g.n), "class count");
  const std::set<ClassLabel> known(labels.begin(), labels.end());
  int open = 0;
  for (const auto& label : labels) {
    const auto x = class_representative(label, g);
    const LieElement xe(g, x);
    r.expect(classify(xe) == label, "representative of " + to_string(label));
    // (u, z) -> [u, x] + z on g x z(l).
    const auto d = jordan_decompose(xe);
    const auto tangent = image_of_ad(whole_algebra(g), x) + center(centralizer(d.x_s));
    r.expect(static_cast<int>(tangent.dim()) == class_dimension(label, g), "dimension of " + to_string(label));
    if (class_dimension(label, g) == g.dimension()) {
      ++open;
      r.expect(label.size() == static_cast<std::size_t>(g.n), "open class is regular semisimple");
    }
  }
  r.expect(open == 1, "unique open class");
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto x = rng.rational_spectrum(g.n, g);
    const auto label = classify(LieElement(g, x));
    const auto tag = " at " + where(x);
    r.expect(known.count(label) == 1, "label enumerated" + tag);
    r.expect(classify(LieElement(g, rng.conjugate(x))) == label, "conjugation invariance" + tag);
    Rational c = 0;
    while (c == 0) c = rng.rational(4);
    r.expect(classify(LieElement(g, c * x)) == label, "scaling invariance" + tag);
  }
  return r;
}

SuiteReport verify_perp(const SuiteOptions& opt) {
  auto r = start("perp", opt);
  for (const auto g : {LieAlgebraSpec::gl(opt.n), LieAlgebraSpec::sl(opt.n)})
    for (const auto& x : class_representatives(g)) {
      const auto c = trivial_action_core(x);
      const auto tag = " for " + to_string(classify(x)) + " in " + g.name();
      r.expect(c.perp_in_n, "perp inside n(x)" + tag);
      r.expect(c.n_in_perp, "n(x) inside perp" + tag);
    }
  return r;
}

SuiteReport verify_natural(const SuiteOptions& opt) {
  auto r = start("natural", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  const auto comps = compositions_of(g.n);
  std::size_t members = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto& blocks = comps[rng.integer(0, static_cast<long>(comps.size()) - 1)];
    const auto c = rng.distinct_rationals(blocks.size(), 5);
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < blocks.size(); ++i) diag.insert(diag.end(), blocks[i], c[i]);
    const auto x = traceless(RationalMatrix::diagonal(diag), g);
    const bool diagonal = k % 3 == 0;
    const auto y = traceless(sample_in_levi(blocks, rng, diagonal), g);
    const auto v = membership_Sx(LieElement(g, y), LieElement(g, x));
    const auto tag = " at x = " + where(x) + ", y = " + where(y);
    r.expect(v.rank_test.has_value() && v.agree(), "descriptor and rank paths" + tag);
    if (diagonal) r.expect(cartan_membership(y, x) == v.member(), "root criterion" + tag);
    Rational s = 0;
    while (s == 0) s = rng.rational(3);
    r.expect(membership_Sx(LieElement(g, s * y), LieElement(g, x)).member() == v.member(), "scaling" + tag);
    members += v.member();
  }
  r.notes.push_back(std::to_string(members) + " of " + std::to_string(opt.samples) + " samples in S_x");
  return r;
}

SuiteReport verify_saturation(const SuiteOptions& opt) {
  auto r = start("saturation", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  for (const auto& x : class_representatives(g)) {
    if (jordan_decompose(x).x_n.matrix().is_zero()) continue;
    const auto rep = saturation_search(x, opt.samples, rng);
    const auto label = to_string(classify(x));
    r.notes.push_back(label + ": " + std::to_string(rep.covered) + "/" + std::to_string(rep.samples));
    r.expect(rep.covered == rep.samples, "saturation coverage at " + label);
    const auto c = complementary_slice(x);
    r.expect(c.contains(x.matrix()), "x in S_{x,T} at " + label);
  }
  return r;
}

SuiteReport verify_residual(const SuiteOptions& opt) {
  auto r = start("residual", opt);
  for (const auto g : {LieAlgebraSpec::gl(opt.n), LieAlgebraSpec::sl(opt.n)})
    for (const auto& x : class_representatives(g)) {
      const auto d = subquotient_data(x);
      const auto a = ax_presentation(x);
      const auto tag = " for " + to_string(classify(x)) + " in " + g.name();
      r.expect(d.rank_T == d.rank_G - d.rank_Lprime, "torus rank" + tag);
      r.expect(d.sequence_consistent(), "exact sequence" + tag);
      r.expect(a.agree(), "A(x) presentations" + tag);
      r.expect(component_orders_from_torus(x) == d.C_factors, "component orders" + tag);
    }
  return r;
}

SuiteReport verify_weyl(const SuiteOptions& opt) {
  auto r = start("weyl", opt);
  const auto g = spec_of(opt);
  Sampler rng(opt.seed);
  long fact = 1;
  for (int i = 2; i <= g.n; ++i) fact *= i;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto x = traceless(RationalMatrix::diagonal(rng.distinct_rationals(g.n, 9)), g);
    const auto fiber = orbit_fiber_over_cartan({LieElement(g, x)});
    const auto tag = " at " + where(x);
    r.expect(static_cast<long>(fiber.size()) == fact, "fiber count" + tag);
    const auto rcf = rational_canonical_form(x);
    std::set<std::vector<Rational>> distinct;
    for (const auto& p : fiber) {
      r.expect(p.matrix().is_diagonal() && rational_canonical_form(p.matrix()) == rcf, "fiber point on orbit" + tag);
      distinct.emplace(p.matrix().entries().begin(), p.matrix().entries().end());
    }
    r.expect(distinct.size() == fiber.size(), "fiber points distinct" + tag);
  }
  return r;
}

SuiteReport verify_sp(const SuiteOptions& opt) {
  auto r = start("sp", opt);
  const int n = opt.n;
  Sampler rng(opt.seed);
  r.expect(sp_kernel_certificate(n), "kernel certificate");
  std::vector<Rational> zero(2 * n, 0);
  r.expect(sp_moment(zero).is_zero(), "moment of zero");
  const auto sp = sp_algebra(n);
  const auto J = symplectic_form(n);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    std::vector<Rational> v(2 * n);
    for (auto& c : v) c = rng.rational(4);
    const auto m = sp_moment(v);
    const auto col = RationalMatrix::column(v);
    r.expect(in_sp(m), "moment in sp");
    r.expect(rank(m) <= 1, "rank at most one");
    r.expect((m * m).is_zero(), "nilpotency");
    const auto xi = rng.element_of(sp, 3);
    const Rational lhs = (m * xi).trace();
    const Rational rhs = Rational(1, 2) * (((xi * col).transpose() * J * col)(0, 0));
    r.expect(lhs == rhs, "Hamiltonian identity");
    if (k < 20) {
      const auto s = random_symplectic(n, rng);
      const auto gv = s * col;
      std::vector<Rational> w(2 * n);
      for (int i = 0; i < 2 * n; ++i) w[i] = gv(i, 0);
      r.expect(sp_moment(w) == s * m * inverse(s), "equivariance");
    }
    if (m.is_zero()) continue;
    const auto fiber = sp_fiber(v);
    r.expect(fiber.size() == 2, "fiber {v, -v}");
    const auto t = sp_trivial_action(v);
    r.expect(t.n_kills_fiber, "n(x) acts trivially on the fiber");
    r.expect(t.minus_identity_stabilizes_x && t.minus_identity_moves_v, "-I witness");
  }
  return r;
}

SuiteReport verify_groupoid(const SuiteOptions& opt) {
  auto r = start("groupoid", opt);
  Sampler rng(opt.seed);
  const auto rep = groupoid_axiom_suite(opt.n, opt.samples, rng);
  const char* names[6] = {"(i) source and target of products", "(ii) associativity", "(iii) identity bisection",
                          "(iv) left and right units", "(v) source and target of inverses",
                          "(vi) inverse products"};
  for (int i = 0; i < 6; ++i)
    r.expect(rep.failures[i] == 0, std::string(names[i]) + ": " + std::to_string(rep.failures[i]) + " failures");
  return r;
}

SuiteReport verify_slice_theorem(const SuiteOptions& opt) {
  auto r = start("slice_theorem", opt);
  const auto g2 = LieAlgebraSpec::gl(2);
  {
    const auto base = LieElement(g2, RationalMatrix::diagonal(std::vector<Rational>{1, 2}));
    const auto t = jm_complete(LieElement(g2, nilpotent_representative({2})));
    const auto x = fundamental_rep(base);
    const auto rep = slice_theorem_tangent_check({base}, slodowy_slice(t, g2), x);
    r.expect(rep.closes && rep.ok(), "principal slice through the orbit of diag(1,2)");
    r.notes.push_back("principal: " + std::to_string(rep.dim_GS) + " + " + std::to_string(rep.dim_fiber) + " - " +
                      std::to_string(rep.dim_GSS) + " = " + std::to_string(rep.dim_M));
  }
  {
    const auto g = spec_of(opt);
    const auto x = LieElement(g, class_representative(enumerate_classes(g).front(), g));
    const auto rep = slice_theorem_tangent_check({x}, AffineSlice{x, whole_algebra(g)}, x);
    r.expect(rep.closes && rep.ok(), "whole algebra");
    r.expect(rep.dim_GS == static_cast<std::size_t>(2 * g.dimension()) && rep.dim_GSS == rep.dim_GS &&
                 rep.dim_fiber == rep.dim_M,
             "whole algebra dimensions");
  }
  {
    const auto e = LieElement(g2, nilpotent_representative({2}));
    const auto rep = slice_theorem_tangent_check({e}, AffineSlice{e, diagonal_subalgebra(g2)}, e);
    r.expect(rep.closes && !rep.verdict.transversal_ok && !rep.ok(), "Cartan at the regular nilpotent is rejected");
    r.notes.push_back("cartan: rank " + std::to_string(rep.verdict.sum_rank) + " of 4");
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"jordan",  "jm",         "slodowy",  "fundamental", "contracting", "induction", "classes",      "perp",
          "natural", "saturation", "residual", "weyl",        "sp",          "groupoid",  "slice_theorem"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> table = {
      {"jordan", verify_jordan},           {"jm", verify_jm},
      {"slodowy", verify_slodowy},         {"fundamental", verify_fundamental},
      {"contracting", verify_contracting}, {"induction", verify_induction},
      {"classes", verify_classes},         {"perp", verify_perp},
      {"natural", verify_natural},         {"saturation", verify_saturation},
      {"residual", verify_residual},       {"weyl", verify_weyl},
      {"sp", verify_sp},                   {"groupoid", verify_groupoid},
      {"slice_theorem", verify_slice_theorem}};
  const auto it = table.find(name);
  if (it == table.end()) throw MalformedInput("unknown suite: " + name);
  return it->second(opt);
}

}  // namespace slicekit
