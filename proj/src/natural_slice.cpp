#include "slicekit/natural_slice.hpp"

#include <algorithm>
#include <set>

#include "slicekit/errors.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

EigenspaceSplit eigenspace_split(const RationalMatrix& x_s) {
  EigenspaceSplit out;
  const std::size_t n = x_s.rows();
  for (const auto& b : spectral_blocks(x_s)) {
    out.eigenvalues.push_back(b.eigenvalue);
    out.bases.push_back(kernel_matrix(x_s - b.eigenvalue * RationalMatrix::identity(n)));
  }
  return out;
}

RationalMatrix restrict_to(const RationalMatrix& y, const RationalMatrix& basis) {
  auto c = solve(basis, y * basis);
  if (!c) throw PreconditionError("restrict_to: subspace is not invariant");
  return *c;
}

bool NaturalSliceDescriptor::lists(const std::vector<ClassLabel>& blockwise) const {
  return std::find(pairs.begin(), pairs.end(), blockwise) != pairs.end();
}

NaturalSliceDescriptor natural_slice(const LieElement& x) {
  auto [s, nil] = jordan_parts(x.matrix());
  auto blocks = spectral_blocks(x.matrix());
  NaturalSliceDescriptor d{x, {}, {}, {}, {}};
  std::vector<std::vector<ClassLabel>> choices;
  for (const auto& b : blocks) {
    d.eigenvalues.push_back(b.eigenvalue);
    d.levi.blocks.push_back(b.multiplicity);
    d.orbit.push_back(b.type);
    std::vector<ClassLabel> admissible;
    for (const auto& label : enumerate_classes(LieAlgebraSpec::gl(b.multiplicity))) {
      LeviOrbitPair p;
      for (const auto& lp : label) {
        p.blocks.push_back(lp.size);
        p.orbit_parts.push_back(lp.partition);
      }
      if (dominance_leq(b.type, ls_induce(p))) admissible.push_back(label);
    }
    choices.push_back(std::move(admissible));
  }
  std::vector<ClassLabel> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      d.pairs.push_back(cur);
      return;
    }
    for (const auto& c : choices[i]) {
      cur.push_back(c);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return d;
}

bool cartan_membership(const RationalMatrix& h, const RationalMatrix& x) {
  if (!h.is_square() || !x.is_square() || h.rows() != x.rows() || !h.is_diagonal() || !x.is_diagonal())
    throw PreconditionError("cartan_membership: inputs must be diagonal of one size");
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && x(i, i) != x(j, j) && h(i, i) == h(j, j)) return false;
  return true;
}

bool member_by_descriptor(const NaturalSliceDescriptor& d, const RationalMatrix& y) {
  auto [s, nil] = jordan_parts(d.x.matrix());
  if (!commutator(y, s).is_zero()) return false;
  const std::size_t n = y.rows();
  std::set<Rational> seen;
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    RationalMatrix basis = kernel_matrix(s - d.eigenvalues[i] * RationalMatrix::identity(n));
    auto local = spectral_blocks(restrict_to(y, basis));
    LeviOrbitPair p;
    for (const auto& b : local) {
      if (!seen.insert(b.eigenvalue).second) return false;
      p.blocks.push_back(b.multiplicity);
      p.orbit_parts.push_back(b.type);
    }
    if (!dominance_leq(d.orbit[i], ls_induce(p))) return false;
  }
  return true;
}

bool member_by_rank(const LieAlgebraSpec& g, const RationalMatrix& y, const RationalMatrix& x) {
  if (!commutator(x, y).is_zero()) return false;
  Subspace sum = image_of_ad(whole_algebra(g), y) + centralizer(g, x);
  return static_cast<int>(sum.dim()) == g.dimension();
}

MembershipVerdict membership_Sx(const LieElement& y, const LieElement& x) {
  if (!(x.algebra() == y.algebra())) throw PreconditionError("membership_Sx: mismatched algebras");
  spectral_blocks(y.matrix());
  MembershipVerdict v;
  v.descriptor = member_by_descriptor(natural_slice(x), y.matrix());
  if (is_semisimple(x.matrix())) v.rank_test = member_by_rank(x.algebra(), y.matrix(), x.matrix());
  return v;
}

}  // namespace slicekit
