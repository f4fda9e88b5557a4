#pragma once

#include <vector>

#include "slicekit/lie.hpp"

namespace slicekit {

/// Dimensions and component data of L(x) = G_{x_s}, L(x)' = [L, L],
/// T(x) = L/L', N(x) = L'_{x_n}, A(x) = G_x / N(x)^0 and
/// C(x) = N(x)/N(x)^0 for G = GL_n or SL_n.
struct SubquotientData {
  int dim_L = 0;
  int dim_Lprime = 0;
  int rank_G = 0;
  int rank_Lprime = 0;
  int rank_T = 0;       // rank_G - rank_Lprime
  int dim_center_L = 0;  // dim z(l), computed from the centralizer
  int dim_gx = 0;
  int dim_N = 0;        // dim n(x)
  int dim_A = 0;        // dim_gx - dim_N
  std::vector<int> C_factors;  // C(x) = prod Z/C_factors[i], one per Levi block
  long C_order = 1;
  bool C_cyclic = true;  // factor orders pairwise coprime

  /// {e} -> C -> A -> T -> {e}: dim A = rank T and C finite.
  bool sequence_consistent() const { return dim_A == rank_T && dim_center_L == rank_T && C_order >= 1; }
};

SubquotientData subquotient_data(const LieElement& x);

struct TrivialActionCertificate {
  Subspace perp;     // annihilator of [g,x] + z(g_{x_s})
  Subspace n_x;      // centralizer of x_n in [g_{x_s}, g_{x_s}]
  bool perp_in_n = false;
  bool n_in_perp = false;
  bool equal() const { return perp_in_n && n_in_perp; }
};

TrivialActionCertificate trivial_action_core(const LieElement& x);

struct APresentation {
  int free_rank = 0;
  long torsion_order = 1;  // |pi_0(A)|
};

struct AxPresentations {
  int rank_center_L = 0;            // rank of the torus Z(L)^0
  long components_center_L = 1;     // |pi_0(Z(L))|
  std::vector<int> center_Lprime;   // Z(L') = prod Z/m_i
  std::vector<int> C_factors;
  APresentation fibered;    // Z(L) x_{Z(L')} C(x)
  APresentation extension;  // C(x) -> A(x) -> T(x)
  bool agree() const {
    return fibered.free_rank == extension.free_rank && fibered.torsion_order == extension.torsion_order;
  }
};

AxPresentations ax_presentation(const LieElement& x);

/// C(x) factors recomputed from a maximal torus of the centralizer of x_n
/// in each Levi block: gcd of the ranks of the torus idempotents.
std::vector<int> component_orders_from_torus(const LieElement& x);

}  // namespace slicekit
