#include "slicekit/slices.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "slicekit/canonical_form.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

bool AffineSlice::contains(const RationalMatrix& y) const { return directions.contains(y - base.matrix()); }

AffineSlice slodowy_slice(const Sl2Triple& t, const LieAlgebraSpec& g) {
  if (!t.is_valid() || !(t.e.algebra() == g)) throw PreconditionError("slodowy_slice: invalid triple");
  return {t.e, centralizer(g, t.f.matrix())};
}

std::vector<int> contracting_weights(const Sl2Triple& t, const LieAlgebraSpec& g) {
  if (!t.is_valid() || !(t.e.algebra() == g)) throw PreconditionError("contracting_weights: invalid triple");
  Subspace gf = centralizer(g, t.f.matrix());
  const RationalMatrix ad_h = ad_matrix(t.h.matrix());
  const std::size_t N = ad_h.rows();
  const int bound = 2 * g.n;
  std::vector<int> weights;
  for (int w = -bound; w <= bound; ++w) {
    RationalMatrix shifted = ad_h - Rational(w) * RationalMatrix::identity(N);
    std::size_t mult = gf.dim() - rank(shifted * gf.basis());
    weights.insert(weights.end(), mult, w);
  }
  if (weights.size() != gf.dim()) throw std::logic_error("contracting_weights: ad_h not diagonalizable on g_f");
  return weights;
}

namespace {

// Standard principal triple of gl_d with h diagonal.
RationalMatrix principal_f(std::size_t d) {
  RationalMatrix f(d, d);
  for (std::size_t i = 1; i < d; ++i) f(i, i - 1) = static_cast<long>(i * (d - i));
  return f;
}

}  // namespace

RationalMatrix principal_slice_point(const RationalPolynomial& q) {
  if (q.degree() < 1 || q.leading() != 1) throw PreconditionError("principal_slice_point: q must be monic of positive degree");
  const std::size_t d = static_cast<std::size_t>(q.degree());
  const RationalMatrix e = jordan_blocks({static_cast<int>(d)});
  const RationalMatrix f = principal_f(d);
  std::vector<RationalMatrix> dirs{RationalMatrix::identity(d)};
  for (std::size_t k = 1; k < d; ++k) dirs.push_back(dirs.back() * f);
  // The coefficient of t^{d-j} is affine in u_{j-1} once u_0..u_{j-2} are fixed.
  std::vector<Rational> u(d);
  auto point = [&]() {
    RationalMatrix s = e;
    for (std::size_t k = 0; k < d; ++k) s += u[k] * dirs[k];
    return s;
  };
  for (std::size_t j = 1; j <= d; ++j) {
    const unsigned idx = static_cast<unsigned>(d - j);
    u[j - 1] = 0;
    Rational a = charpoly(point()).coefficient(idx);
    u[j - 1] = 1;
    Rational b = charpoly(point()).coefficient(idx);
    if (a == b) throw std::logic_error("principal_slice_point: degenerate triangular system");
    u[j - 1] = (q.coefficient(idx) - a) / (b - a);
  }
  RationalMatrix s = point();
  if (!(charpoly(s) == q)) throw std::logic_error("principal_slice_point: characteristic polynomial mismatch");
  return s;
}

LieElement fundamental_rep(const LieElement& x) {
  const std::size_t n = x.matrix().rows();
  if (centralizer(LieAlgebraSpec::gl(x.n()), x.matrix()).dim() != n)
    throw PreconditionError("fundamental_rep: x is not regular");
  return {x.algebra(), principal_slice_point(charpoly(x.matrix()))};
}

PoissonVerdict poisson_slice_check(const Subspace& tangent, const LieElement& x) {
  const LieAlgebraSpec& g = x.algebra();
  const RationalMatrix& X = x.matrix();
  Subspace orbit_tangent = image_of_ad(whole_algebra(g), X);
  PoissonVerdict v;
  v.sum_rank = (orbit_tangent + tangent).dim();
  v.transversal_ok = static_cast<int>(v.sum_rank) == g.dimension();
  Subspace w = intersection(orbit_tangent, tangent);
  v.intersection_dim = w.dim();
  const RationalMatrix ad_x = ad_matrix(X);
  std::vector<RationalMatrix> ys;
  const std::size_t n = X.rows();
  for (std::size_t k = 0; k < w.dim(); ++k) {
    // [y, x] = u  <=>  ad_x(y) = -u
    auto y = solve(ad_x, -w.basis().column_at(k));
    if (!y) throw std::logic_error("poisson_slice_check: no ad preimage");
    ys.push_back(RationalMatrix::unflatten(*y, n, n));
  }
  RationalMatrix gram(ys.size(), ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) gram(i, j) = (X * commutator(ys[i], ys[j])).trace();
  v.gram_rank = rank(gram);
  v.symplectic_ok = v.gram_rank == ys.size();
  return v;
}

PoissonVerdict poisson_slice_check(const AffineSlice& s, const LieElement& x) {
  if (!s.contains(x.matrix())) throw PreconditionError("poisson_slice_check: x is not on the slice");
  return poisson_slice_check(s.directions, x);
}

bool ComplementarySlice::contains(const RationalMatrix& y) const {
  return slodowy.contains(y) && member_by_descriptor(natural, y);
}

ComplementarySlice complementary_slice(const LieElement& x, const std::optional<Sl2Triple>& t) {
  const LieAlgebraSpec& g = x.algebra();
  auto [s, nil] = jordan_parts(x.matrix());
  NaturalSliceDescriptor nat = natural_slice(x);
  Subspace levi = centralizer(g, s);
  if (nil.is_zero()) {
    if (t) throw PreconditionError("complementary_slice: x is semisimple; no triple expected");
    return {std::move(nat), AffineSlice{LieElement(g, s), center(levi)}, std::nullopt};
  }
  if (!t) throw PreconditionError("complementary_slice: a triple for x_n is required");
  if (!(t->e.matrix() == nil) || !t->is_valid() || !commutator(t->h.matrix(), s).is_zero() ||
      !commutator(t->f.matrix(), s).is_zero())
    throw PreconditionError("complementary_slice: triple does not match x_n inside g_{x_s}");
  return {std::move(nat), AffineSlice{t->e, centralizer_in(levi, t->f.matrix())}, t};
}

ComplementarySlice complementary_slice(const LieElement& x) {
  auto [s, nil] = jordan_parts(x.matrix());
  if (nil.is_zero()) return complementary_slice(x, std::nullopt);
  return complementary_slice(x, jm_complete_in(LieElement(x.algebra(), nil), s));
}

namespace {

struct Run {
  std::size_t begin, end;
};

std::vector<Run> diagonal_runs(const RationalMatrix& s) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (runs.empty() || s(i, i) != s(runs.back().begin, runs.back().begin)) runs.push_back({i, i + 1});
    else runs.back().end = i + 1;
  }
  return runs;
}

RationalMatrix sub(const RationalMatrix& m, std::size_t a, std::size_t b) {
  RationalMatrix out(b - a, b - a);
  for (std::size_t i = a; i < b; ++i)
    for (std::size_t j = a; j < b; ++j) out(i - a, j - a) = m(i, j);
  return out;
}

}  // namespace

bool in_canonical_block_form(const RationalMatrix& x) {
  auto [s, nil] = jordan_parts(x);
  if (!s.is_diagonal()) return false;
  auto runs = diagonal_runs(s);
  std::set<Rational> values;
  for (const auto& r : runs)
    if (!values.insert(s(r.begin, r.begin)).second) return false;
  for (const auto& r : runs) {
    RationalMatrix block = sub(nil, r.begin, r.end);
    if (!(block == nilpotent_representative(jordan_type(block)))) return false;
  }
  return true;
}

RationalMatrix sample_natural_slice(const NaturalSliceDescriptor& d, Sampler& rng) {
  auto [s, nil] = jordan_parts(d.x.matrix());
  const std::size_t n = s.rows();
  const auto& pair = d.pairs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(d.pairs.size()) - 1))];
  std::size_t count = 0;
  for (const auto& label : pair) count += label.size();
  auto values = rng.distinct_rationals(count);
  std::vector<RationalMatrix> bases, blocks;
  std::size_t next = 0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    bases.push_back(kernel_matrix(s - d.eigenvalues[i] * RationalMatrix::identity(n)));
    std::vector<RationalMatrix> parts;
    for (const auto& lp : pair[i])
      parts.push_back(values[next++] * RationalMatrix::identity(lp.size) + nilpotent_representative(lp.partition));
    blocks.push_back(rng.conjugate(block_diagonal(parts)));
  }
  RationalMatrix p = hstack(bases, n);
  RationalMatrix y = p * block_diagonal(blocks) * inverse(p);
  if (d.x.algebra().family == Family::sl) y -= (y.trace() / static_cast<long>(n)) * RationalMatrix::identity(n);
  return y;
}

namespace {

struct Item {
  Rational value;
  int size;
};

// Cyclic point of e + D on the index range [a, b) with characteristic
// polynomial q, where the Jordan blocks of e in the range are chained by
// superdiagonal couplings. Entries are solved band by band below the
// superdiagonal: the coefficient of t^{d-k} of the characteristic polynomial
// is affine in band k once the lower bands are fixed.
std::optional<RationalMatrix> chained_point(const Subspace& directions, const RationalMatrix& nil, std::size_t a,
                                            std::size_t b, const RationalPolynomial& q) {
  const std::size_t n = nil.rows(), d = b - a;
  const auto gl = directions.ambient();
  RationalMatrix m = sub(nil, a, b);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (m(i, i + 1) != 0) continue;
    if (!directions.contains(RationalMatrix::unit(n, a + i, a + i + 1))) return std::nullopt;
    m(i, i + 1) = 1;
  }
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<RationalMatrix> units;
    for (std::size_t c = 0; c + k - 1 < d; ++c) units.push_back(RationalMatrix::unit(n, a + c + k - 1, a + c));
    const Subspace band = intersection(directions, span_of(gl, units));
    const Rational current = charpoly(m).coefficient(static_cast<unsigned>(d - k));
    bool solved = false;
    for (const auto& x : band.elements()) {
      const RationalMatrix local = sub(x, a, b);
      const Rational slope = charpoly(m + local).coefficient(static_cast<unsigned>(d - k)) - current;
      if (slope == 0) continue;
      m += ((q.coefficient(static_cast<unsigned>(d - k)) - current) / slope) * local;
      solved = true;
      break;
    }
    if (!solved) return std::nullopt;
  }
  return m;
}

// Assigns every item to a group so that each group is filled exactly and
// carries each eigenvalue at most once.
bool pack_items(const std::vector<Item>& items, const std::vector<int>& sizes, std::vector<std::vector<Item>>& content) {
  std::vector<int> room(sizes);
  content.assign(sizes.size(), {});
  std::function<bool(std::size_t)> pack = [&](std::size_t k) {
    if (k == items.size()) return true;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
      if (room[g] < items[k].size) continue;
      bool clash = false;
      for (const auto& it : content[g]) clash = clash || it.value == items[k].value;
      if (clash) continue;
      room[g] -= items[k].size;
      content[g].push_back(items[k]);
      if (pack(k + 1)) return true;
      content[g].pop_back();
      room[g] += items[k].size;
    }
    return false;
  };
  return pack(0);
}

}  // namespace

std::optional<RationalMatrix> saturation_witness(const ComplementarySlice& c, const RationalMatrix& y) {
  const RationalMatrix& x = c.natural.x.matrix();
  if (!in_canonical_block_form(x)) throw PreconditionError("saturation_witness: x must be in canonical block form");
  auto [s, nil] = jordan_parts(x);
  if (!commutator(y, s).is_zero()) return std::nullopt;
  const std::size_t n = x.rows();
  if (!c.triple) return c.contains(y) ? std::optional<RationalMatrix>(y) : std::nullopt;
  const auto gl = LieAlgebraSpec::gl(static_cast<int>(n));
  const Subspace directions = intersection(centralizer(gl, s), centralizer(gl, c.triple->f.matrix()));
  RationalMatrix witness(n, n);
  for (const auto& run : diagonal_runs(s)) {
    const Partition bins = jordan_type(sub(nil, run.begin, run.end));
    const RationalMatrix local = sub(y, run.begin, run.end);
    std::vector<Item> items;
    for (const auto& b : spectral_blocks(local))
      for (int part : b.type) items.push_back({b.eigenvalue, part});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.size > b.size; });
    const RationalMatrix target = rational_canonical_form(local);
    // Groupings of consecutive bins, fewest merges first.
    const std::size_t cuts = bins.size() - 1;
    std::vector<unsigned long> masks(1ul << cuts);
    std::iota(masks.begin(), masks.end(), 0ul);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned long a, unsigned long b) { return __builtin_popcountl(a) < __builtin_popcountl(b); });
    bool done = false;
    for (unsigned long merge : masks) {
      std::vector<int> sizes{bins[0]};
      for (std::size_t i = 1; i < bins.size(); ++i) {
        if (merge >> (i - 1) & 1) sizes.back() += bins[i];
        else sizes.push_back(bins[i]);
      }
      std::vector<std::vector<Item>> content;
      if (!pack_items(items, sizes, content)) continue;
      RationalMatrix trial = witness;
      std::size_t offset = run.begin;
      bool built = true;
      for (std::size_t g = 0; g < sizes.size() && built; ++g) {
        RationalPolynomial q = RationalPolynomial::constant(1);
        for (const auto& it : content[g])
          for (int k = 0; k < it.size; ++k) q = q * RationalPolynomial::linear(it.value);
        const auto block = chained_point(directions, nil, offset, offset + sizes[g], q);
        if (!block) {
          built = false;
          break;
        }
        for (int i = 0; i < sizes[g]; ++i)
          for (int j = 0; j < sizes[g]; ++j) trial(offset + i, offset + j) = (*block)(i, j);
        offset += sizes[g];
      }
      if (built && rational_canonical_form(sub(trial, run.begin, run.end)) == target) {
        witness = trial;
        done = true;
        break;
      }
    }
    if (!done) return std::nullopt;
  }
  if (!c.contains(witness)) return std::nullopt;
  return witness;
}

SaturationReport saturation_search(const LieElement& x, std::size_t samples, Sampler& rng) {
  ComplementarySlice c = complementary_slice(x);
  SaturationReport report;
  for (std::size_t k = 0; k < samples; ++k) {
    RationalMatrix y = sample_natural_slice(c.natural, rng);
    ++report.samples;
    if (saturation_witness(c, y)) ++report.covered;
    else report.failures.push_back(y);
  }
  return report;
}

}  // namespace slicekit
