#include "slicekit/root_combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace slicekit {

std::vector<Root> RootSystemA::roots() const {
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

std::vector<Root> RootSystemA::positive_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Root> RootSystemA::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back({i, i + 1});
  return out;
}

Rational RootSystemA::evaluate(const Root& alpha, const std::vector<Rational>& h) { return h[alpha.i] - h[alpha.j]; }

std::vector<int> LeviSubset::block_of() const {
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int k = 0; k < blocks[b]; ++k) out.push_back(static_cast<int>(b));
  return out;
}

bool LeviSubset::contains(const Root& alpha) const {
  auto b = block_of();
  return b[alpha.i] == b[alpha.j];
}

std::vector<Root> LeviSubset::roots() const {
  std::vector<Root> out;
  for (const auto& r : RootSystemA{n()}.roots())
    if (contains(r)) out.push_back(r);
  return out;
}

bool LeviOrbitPair::valid() const {
  if (blocks.size() != orbit_parts.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] <= 0 || !is_partition(orbit_parts[i]) || size_of(orbit_parts[i]) != blocks[i]) return false;
  return true;
}

Partition ls_induce(const LeviOrbitPair& pair) {
  if (!pair.valid()) throw std::invalid_argument("ls_induce: invalid (blocks, orbits) pair");
  std::vector<int> sum;
  for (const auto& p : pair.orbit_parts) {
    if (p.size() > sum.size()) sum.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) sum[i] += p[i];
  }
  return normalized(sum);
}

Partition richardson(const Composition& blocks) { return transpose(normalized(blocks)); }

int nilradical_dimension(const Composition& blocks) {
  int n = size_of(blocks);
  int sq = 0;
  for (int b : blocks) sq += b * b;
  return (n * n - sq) / 2;
}

std::set<std::vector<Rational>> weyl_orbit(const std::vector<Rational>& h, const LeviSubset& levi) {
  if (levi.n() != static_cast<int>(h.size())) throw std::invalid_argument("weyl_orbit: size mismatch");
  std::set<std::vector<Rational>> orbit{{}};
  std::size_t offset = 0;
  for (int b : levi.blocks) {
    std::vector<Rational> part(h.begin() + offset, h.begin() + offset + b);
    std::sort(part.begin(), part.end());
    std::set<std::vector<Rational>> next;
    do {
      for (const auto& prefix : orbit) {
        auto v = prefix;
        v.insert(v.end(), part.begin(), part.end());
        next.insert(std::move(v));
      }
    } while (std::next_permutation(part.begin(), part.end()));
    orbit = std::move(next);
    offset += b;
  }
  return orbit;
}

}  // namespace slicekit
