#pragma once

#include <string>
#include <vector>

#include "slicekit/matrix.hpp"
#include "slicekit/partition.hpp"

namespace slicekit {

enum class Family { gl, sl };

struct LieAlgebraSpec {
  Family family = Family::gl;
  int n = 2;

  static LieAlgebraSpec gl(int n) { return {Family::gl, n}; }
  static LieAlgebraSpec sl(int n) { return {Family::sl, n}; }

  int dimension() const { return family == Family::gl ? n * n : n * n - 1; }
  int rank() const { return family == Family::gl ? n : n - 1; }
  std::string name() const;

  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

/// Throws MalformedInput for names other than "gl" / "sl".
Family parse_family(const std::string& name);

/// A square matrix in gl_n or sl_n. Construction enforces the shape and,
/// for sl_n, the trace condition (PreconditionError otherwise).
class LieElement {
 public:
  LieElement(LieAlgebraSpec algebra, RationalMatrix matrix);

  const LieAlgebraSpec& algebra() const noexcept { return algebra_; }
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  int n() const noexcept { return algebra_.n; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  LieAlgebraSpec algebra_;
  RationalMatrix matrix_;
};

/// Linear subspace of an algebra, stored as the canonical basis of its
/// flattened (row-major, n^2) vectors.
class Subspace {
 public:
  Subspace(LieAlgebraSpec ambient, const RationalMatrix& columns);

  const LieAlgebraSpec& ambient() const noexcept { return ambient_; }
  const RationalMatrix& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  RationalMatrix element(std::size_t k) const;
  std::vector<RationalMatrix> elements() const;

  bool contains(const RationalMatrix& x) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  LieAlgebraSpec ambient_;
  RationalMatrix basis_;
};

struct Sl2Triple {
  LieElement e, h, f;
  /// [e,f] = h, [h,e] = 2e, [h,f] = -2f, all traceless, one algebra.
  bool is_valid() const;
};

LieElement bracket(const LieElement& x, const LieElement& y);
Rational trace_form(const LieElement& x, const LieElement& y);

/// Matrix of Y -> [x, Y] on row-major flattened n x n matrices.
RationalMatrix ad_matrix(const RationalMatrix& x);

Subspace whole_algebra(const LieAlgebraSpec& g);
Subspace zero_subspace(const LieAlgebraSpec& g);
Subspace span_of(const LieAlgebraSpec& g, const std::vector<RationalMatrix>& elements);
Subspace center_of_algebra(const LieAlgebraSpec& g);
Subspace diagonal_subalgebra(const LieAlgebraSpec& g);

/// g_x = {y in g : [y, x] = 0}.
Subspace centralizer(const LieElement& x);
Subspace centralizer(const LieAlgebraSpec& g, const RationalMatrix& x);
/// {y in s : [y, x] = 0}.
Subspace centralizer_in(const Subspace& s, const RationalMatrix& x);
/// [s, x] = {[y, x] : y in s}.
Subspace image_of_ad(const Subspace& s, const RationalMatrix& x);
/// Trace-form annihilator of s inside its ambient algebra.
Subspace annihilator(const Subspace& s);
/// [s, s] for a subalgebra s.
Subspace derived_algebra(const Subspace& s);
/// Elements of the subalgebra s commuting with all of s.
Subspace center(const Subspace& s);
Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

bool is_nilpotent(const RationalMatrix& x);
/// Direct sum of upper Jordan blocks of the given sizes, in the given order.
RationalMatrix jordan_blocks(const std::vector<int>& sizes);
/// x_lambda: Jordan blocks in decreasing order.
RationalMatrix nilpotent_representative(const Partition& lambda);
/// Jordan type of a nilpotent matrix from the ranks of its powers.
/// Throws PreconditionError if x is not nilpotent.
Partition jordan_type(const RationalMatrix& x);

}  // namespace slicekit
