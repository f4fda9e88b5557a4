#include "slicekit/residual.hpp"

#include <numeric>
#include <set>

#include "slicekit/classes.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/natural_slice.hpp"

namespace slicekit {

namespace {

int gcd_of(const std::vector<int>& v) {
  int g = 0;
  for (int a : v) g = std::gcd(g, a);
  return g;
}

bool pairwise_coprime(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(v[i], v[j]) != 1) return false;
  return true;
}

// Order of the quotient of prod Z/orders[i] by the subgroup generated by
// `gens`, by explicit enumeration of the subgroup.
long quotient_order(const std::vector<int>& orders, const std::vector<std::vector<int>>& gens) {
  long total = 1;
  for (int o : orders) total *= o;
  std::set<std::vector<int>> sub{std::vector<int>(orders.size(), 0)};
  std::vector<std::vector<int>> frontier(sub.begin(), sub.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        std::vector<int> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = ((v[i] + g[i]) % orders[i] + orders[i]) % orders[i];
        if (sub.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return total / static_cast<long>(sub.size());
}

}  // namespace

SubquotientData subquotient_data(const LieElement& x) {
  const LieAlgebraSpec& g = x.algebra();
  auto blocks = spectral_blocks(x.matrix());
  auto [s, nil] = jordan_parts(x.matrix());
  Subspace l = centralizer(g, s);
  Subspace lp = derived_algebra(l);
  SubquotientData d;
  d.dim_L = static_cast<int>(l.dim());
  d.dim_Lprime = static_cast<int>(lp.dim());
  d.rank_G = g.rank();
  for (const auto& b : blocks) d.rank_Lprime += b.multiplicity - 1;
  d.rank_T = d.rank_G - d.rank_Lprime;
  d.dim_center_L = static_cast<int>(center(l).dim());
  d.dim_gx = static_cast<int>(centralizer(g, x.matrix()).dim());
  d.dim_N = static_cast<int>(centralizer_in(lp, nil).dim());
  d.dim_A = d.dim_gx - d.dim_N;
  for (const auto& b : blocks) {
    d.C_factors.push_back(gcd_of(b.type));
    d.C_order *= d.C_factors.back();
  }
  d.C_cyclic = pairwise_coprime(d.C_factors);
  return d;
}

TrivialActionCertificate trivial_action_core(const LieElement& x) {
  Subspace perp = class_perp(x);
  Subspace n = derived_levi_centralizer(x);
  TrivialActionCertificate c{perp, n, n.contains(perp), perp.contains(n)};
  return c;
}

AxPresentations ax_presentation(const LieElement& x) {
  const LieAlgebraSpec& g = x.algebra();
  auto blocks = spectral_blocks(x.matrix());
  AxPresentations p;
  std::vector<int> sizes;
  int all_parts_gcd = 0;
  for (const auto& b : blocks) {
    sizes.push_back(b.multiplicity);
    p.center_Lprime.push_back(b.multiplicity);
    p.C_factors.push_back(gcd_of(b.type));
    all_parts_gcd = std::gcd(all_parts_gcd, gcd_of(b.type));
  }
  const int k = static_cast<int>(blocks.size());
  // Z(L) = scalars per block; for SL_n cut by prod t_i^{m_i} = 1.
  p.rank_center_L = g.family == Family::gl ? k : k - 1;
  p.components_center_L = g.family == Family::gl ? 1 : gcd_of(sizes);

  // pi_0(A) = (pi_0 Z(L) x C) / image of Z(L'); the generator of the i-th
  // factor mu_{m_i} maps to 1 in pi_0 Z(L) and to -1 in Z/d_i.
  std::vector<int> orders{static_cast<int>(p.components_center_L)};
  orders.insert(orders.end(), p.C_factors.begin(), p.C_factors.end());
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> gen(orders.size(), 0);
    gen[0] = 1;
    gen[1 + i] = -1;
    gens.push_back(gen);
  }
  p.fibered = {p.rank_center_L, quotient_order(orders, gens)};

  // pi_0(A) = pi_0(G_x): trivial for GL_n, Z/gcd(all parts) for SL_n.
  int rank_Lprime = 0;
  for (const auto& b : blocks) rank_Lprime += b.multiplicity - 1;
  p.extension = {g.rank() - rank_Lprime, g.family == Family::gl ? 1L : static_cast<long>(all_parts_gcd)};
  return p;
}

std::vector<int> component_orders_from_torus(const LieElement& x) {
  auto [s, nil] = jordan_parts(x.matrix());
  auto split = eigenspace_split(s);
  std::vector<int> out;
  for (const auto& basis : split.bases) {
    RationalMatrix local = restrict_to(nil, basis);
    // Work with the Jordan form of the local nilpotent part so that the
    // torus of its centralizer is diagonal.
    RationalMatrix e = nilpotent_representative(jordan_type(local));
    const int m = static_cast<int>(e.rows());
    Subspace torus = intersection(centralizer(LieAlgebraSpec::gl(m), e), diagonal_subalgebra(LieAlgebraSpec::gl(m)));
    int g = 0;
    for (const auto& idem : torus.elements()) {
      if (!(idem * idem == idem)) throw std::logic_error("torus basis is not idempotent");
      g = std::gcd(g, static_cast<int>(rank(idem)));
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace slicekit
