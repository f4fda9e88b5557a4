#include "slicekit/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "slicekit/linalg.hpp"

namespace slicekit {

long Sampler::integer(long lo, long hi) {
  // Rejection sampling keeps the draw independent of the library's
  // distribution implementation.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Rational Sampler::rational(long bound) { return frac(integer(-bound, bound), integer(1, bound)); }

RationalMatrix Sampler::matrix(std::size_t rows, std::size_t cols, long bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
  return m;
}

RationalMatrix Sampler::invertible(std::size_t n, long bound) {
  RationalMatrix lower = RationalMatrix::identity(n), upper = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = integer(-bound, bound);
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = integer(-bound, bound);
    Rational d;
    do d = rational(bound);
    while (sgn(d) == 0);
    upper(i, i) = d;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(integer(0, static_cast<long>(i) - 1))]);
  RationalMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * lower * upper;
}

std::vector<Rational> Sampler::distinct_rationals(std::size_t k, long bound) {
  std::vector<Rational> out;
  while (out.size() < k) {
    Rational r = integer(-bound, bound);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    if (out.size() < k && static_cast<long>(out.size()) >= 2 * bound + 1) ++bound;
  }
  return out;
}

RationalMatrix Sampler::element_of(const Subspace& s, long bound) {
  RationalMatrix c(s.dim(), 1);
  for (std::size_t k = 0; k < s.dim(); ++k) c(k, 0) = integer(-bound, bound);
  const int n = s.ambient().n;
  return RationalMatrix::unflatten(s.basis() * c, n, n);
}

RationalMatrix Sampler::conjugate(const RationalMatrix& c, long bound) {
  RationalMatrix g = invertible(c.rows(), bound);
  return g * c * inverse(g);
}

RationalMatrix Sampler::with_label(const ClassLabel& label, const LieAlgebraSpec& g) {
  auto values = distinct_rationals(label.size());
  std::vector<RationalMatrix> blocks;
  Rational tr = 0;
  for (std::size_t k = 0; k < label.size(); ++k) {
    blocks.push_back(values[k] * RationalMatrix::identity(label[k].size) + nilpotent_representative(label[k].partition));
    tr += values[k] * label[k].size;
  }
  RationalMatrix x = block_diagonal(blocks);
  if (g.family == Family::sl) x -= (tr / g.n) * RationalMatrix::identity(g.n);
  return conjugate(x);
}

RationalMatrix Sampler::rational_spectrum(std::size_t n, const LieAlgebraSpec& g) {
  const long pool = integer(1, static_cast<long>(n));
  RationalMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = integer(0, pool - 1);
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = integer(0, 2) == 0 ? 0 : integer(-2, 2);
  }
  if (g.family == Family::sl) t -= (t.trace() / static_cast<long>(n)) * RationalMatrix::identity(n);
  return conjugate(t);
}

}  // namespace slicekit
