#include "slicekit/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "slicekit/canonical_form.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

ClassLabel canonical_label(ClassLabel label) {
  std::sort(label.begin(), label.end(), std::greater<>());
  return label;
}

bool label_valid(const ClassLabel& label, int n) {
  int total = 0;
  for (const auto& p : label) {
    if (p.size <= 0 || !is_partition(p.partition) || size_of(p.partition) != p.size) return false;
    total += p.size;
  }
  return total == n && !label.empty();
}

std::string to_string(const ClassLabel& label) {
  std::string s = "{";
  for (std::size_t i = 0; i < label.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(label[i].size) + "," + to_string(label[i].partition) + ")";
  return s + "}";
}

std::vector<EigenBlock> spectral_blocks(const RationalMatrix& x) {
  const RationalPolynomial cp = charpoly(x);
  RationalRoots rr = rational_roots(cp);
  if (rr.residual.degree() > 0) throw IrrationalSpectrum(squarefree_part(rr.residual).to_string());
  const std::size_t n = x.rows();
  std::vector<EigenBlock> out;
  for (const auto& [c, mult] : rr.roots) {
    RationalMatrix y = x - c * RationalMatrix::identity(n);
    // Blocks of size >= k on this eigenspace: rank y^{k-1} - rank y^k.
    Partition at_least;
    int counted = 0;
    std::size_t prev = n;
    RationalMatrix p = RationalMatrix::identity(n);
    while (counted < static_cast<int>(mult)) {
      p = p * y;
      std::size_t r = rank(p);
      int blocks = static_cast<int>(prev - r);
      at_least.push_back(blocks);
      counted += blocks;
      prev = r;
    }
    out.push_back({c, static_cast<int>(mult), transpose(at_least)});
  }
  return out;
}

ClassLabel classify(const LieElement& x) {
  ClassLabel label;
  for (const auto& b : spectral_blocks(x.matrix())) label.push_back({b.multiplicity, b.type});
  return canonical_label(label);
}

int class_dimension(const ClassLabel& label, const LieAlgebraSpec& g) {
  if (!label_valid(label, g.n)) throw PreconditionError("invalid class label " + to_string(label));
  int c = 0;
  for (const auto& p : label) c += centralizer_dimension(p.partition);
  int d = g.n * g.n - c + static_cast<int>(label.size());
  return g.family == Family::gl ? d : d - 1;
}

namespace {

void enumerate_rec(const std::vector<LabelPair>& pairs, std::size_t start, int remaining, ClassLabel& cur,
                   std::vector<ClassLabel>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pairs.size(); ++i) {
    if (pairs[i].size > remaining) continue;
    cur.push_back(pairs[i]);
    enumerate_rec(pairs, i, remaining - pairs[i].size, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ClassLabel> enumerate_classes(const LieAlgebraSpec& g) {
  std::vector<LabelPair> pairs;
  for (int m = g.n; m >= 1; --m)
    for (const auto& p : partitions_of(m)) pairs.push_back({m, p});
  std::vector<ClassLabel> out;
  ClassLabel cur;
  enumerate_rec(pairs, 0, g.n, cur, out);
  return out;
}

long class_count(int n) {
  // Euler transform of the partition numbers.
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long pm = partition_count(m);
    for (long r = 0; r < pm; ++r)
      for (int k = m; k <= n; ++k) c[k] += c[k - m];
  }
  return c[n];
}

RationalMatrix class_representative(const ClassLabel& label, const LieAlgebraSpec& g) {
  if (!label_valid(label, g.n)) throw PreconditionError("invalid class label " + to_string(label));
  std::vector<RationalMatrix> blocks;
  Rational tr = 0;
  for (std::size_t k = 0; k < label.size(); ++k) {
    const int m = label[k].size;
    blocks.push_back(Rational(static_cast<long>(k)) * RationalMatrix::identity(m) +
                     nilpotent_representative(label[k].partition));
    tr += Rational(static_cast<long>(k)) * m;
  }
  RationalMatrix x = block_diagonal(blocks);
  if (g.family == Family::sl) x -= (tr / g.n) * RationalMatrix::identity(g.n);
  return x;
}

bool generic_locus_member(const RationalMatrix& h, const LeviSubset& levi) {
  if (!h.is_square() || static_cast<int>(h.rows()) != levi.n() || !h.is_diagonal())
    throw PreconditionError("generic_locus_member: h must be diagonal of the Levi's size");
  std::vector<Rational> scalars;
  std::size_t offset = 0;
  for (int b : levi.blocks) {
    for (int k = 1; k < b; ++k)
      if (h(offset + k, offset + k) != h(offset, offset))
        throw PreconditionError("generic_locus_member: h is not in the center of the Levi");
    scalars.push_back(h(offset, offset));
    offset += b;
  }
  std::sort(scalars.begin(), scalars.end());
  return std::adjacent_find(scalars.begin(), scalars.end()) == scalars.end();
}

GammaVerdict orbit_equal_via_gamma(const RationalMatrix& e, const RationalMatrix& x, const RationalMatrix& y,
                                   const LeviSubset& levi) {
  if (!generic_locus_member(x, levi) || !generic_locus_member(y, levi))
    throw PreconditionError("orbit_equal_via_gamma: x and y must lie in the generic locus");
  // e must be block diagonal and nilpotent.
  auto block = levi.block_of();
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (block[i] != block[j] && sgn(e(i, j)) != 0)
        throw PreconditionError("orbit_equal_via_gamma: e does not lie in the Levi");
  if (!is_nilpotent(e)) throw PreconditionError("orbit_equal_via_gamma: e must be nilpotent");

  using Key = std::pair<int, Partition>;
  std::multiset<std::pair<Key, Rational>> mx, my;
  std::size_t offset = 0;
  for (int b : levi.blocks) {
    RationalMatrix eb(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) eb(i, j) = e(offset + i, offset + j);
    Key key{b, jordan_type(eb)};
    mx.insert({key, x(offset, offset)});
    my.insert({key, y(offset, offset)});
    offset += b;
  }
  GammaVerdict v;
  v.gamma = mx == my;
  v.canonical_form = rational_canonical_form(e + x) == rational_canonical_form(e + y);
  return v;
}

Subspace class_perp(const LieElement& x) {
  spectral_blocks(x.matrix());
  auto [s, nil] = jordan_parts(x.matrix());
  const LieAlgebraSpec& g = x.algebra();
  Subspace tangent = image_of_ad(whole_algebra(g), x.matrix()) + center(centralizer(g, s));
  return annihilator(tangent);
}

Subspace derived_levi_centralizer(const LieElement& x) {
  spectral_blocks(x.matrix());
  auto [s, nil] = jordan_parts(x.matrix());
  return centralizer_in(derived_algebra(centralizer(x.algebra(), s)), nil);
}

}  // namespace slicekit
