#include "slicekit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace slicekit {

int size_of(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition normalized(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int i = 1; i <= p.front(); ++i) {
    int c = 0;
    for (int part : p)
      if (part >= i) ++c;
    t.push_back(c);
  }
  return t;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, Composition& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 1; --k) {
    cur.push_back(k);
    compositions_rec(remaining - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition cur;
  if (n >= 0) compositions_rec(n, cur, out);
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (size_of(a) != size_of(b)) throw std::invalid_argument("dominance_leq: partitions of different integers");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

int centralizer_dimension(const Partition& lambda) {
  const Partition p = normalized(lambda);
  int d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += static_cast<int>(2 * i + 1) * p[i];
  return d;
}

int orbit_dimension(const Partition& lambda, int m) {
  if (size_of(lambda) != m) throw std::invalid_argument("orbit_dimension: partition does not match m");
  return m * m - centralizer_dimension(lambda);
}

std::string to_string(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

}  // namespace slicekit
