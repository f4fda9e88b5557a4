#include "slicekit/lie.hpp"

#include "slicekit/errors.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

std::string LieAlgebraSpec::name() const {
  return (family == Family::gl ? "gl_" : "sl_") + std::to_string(n);
}

Family parse_family(const std::string& name) {
  if (name == "gl") return Family::gl;
  if (name == "sl") return Family::sl;
  throw MalformedInput("unknown algebra family '" + name + "'");
}

LieElement::LieElement(LieAlgebraSpec algebra, RationalMatrix matrix)
    : algebra_(algebra), matrix_(std::move(matrix)) {
  if (algebra_.n < 1 || (algebra_.family == Family::sl && algebra_.n < 2))
    throw PreconditionError("invalid algebra " + algebra_.name());
  if (matrix_.rows() != static_cast<std::size_t>(algebra_.n) || !matrix_.is_square())
    throw PreconditionError("matrix shape does not match " + algebra_.name());
  if (algebra_.family == Family::sl && sgn(matrix_.trace()) != 0)
    throw PreconditionError("element of sl_n must be traceless");
}

namespace {

RationalMatrix trace_row(int n) {
  RationalMatrix r(1, n * n);
  for (int i = 0; i < n; ++i) r(0, i * n + i) = 1;
  return r;
}

// Linear conditions cutting the algebra out of gl_n (flattened).
RationalMatrix algebra_constraints(const LieAlgebraSpec& g) {
  if (g.family == Family::sl) return trace_row(g.n);
  return RationalMatrix(0, g.n * g.n);
}

}  // namespace

Subspace::Subspace(LieAlgebraSpec ambient, const RationalMatrix& columns)
    : ambient_(ambient), basis_(span_basis(columns)) {}

RationalMatrix Subspace::element(std::size_t k) const {
  return RationalMatrix::unflatten(basis_.column_at(k), ambient_.n, ambient_.n);
}

std::vector<RationalMatrix> Subspace::elements() const {
  std::vector<RationalMatrix> out;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(element(k));
  return out;
}

bool Subspace::contains(const RationalMatrix& x) const { return span_contains(basis_, x.flatten()); }

bool Subspace::contains(const Subspace& other) const { return span_contains(basis_, other.basis_); }

bool Sl2Triple::is_valid() const {
  const auto& g = e.algebra();
  if (!(h.algebra() == g && f.algebra() == g)) return false;
  const auto& E = e.matrix();
  const auto& H = h.matrix();
  const auto& F = f.matrix();
  if (sgn(E.trace()) || sgn(H.trace()) || sgn(F.trace())) return false;
  return commutator(E, F) == H && commutator(H, E) == Rational(2) * E && commutator(H, F) == Rational(-2) * F;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!(x.algebra() == y.algebra())) throw PreconditionError("bracket: mismatched algebras");
  return {x.algebra(), commutator(x.matrix(), y.matrix())};
}

Rational trace_form(const LieElement& x, const LieElement& y) {
  if (!(x.algebra() == y.algebra())) throw PreconditionError("trace_form: mismatched algebras");
  return (x.matrix() * y.matrix()).trace();
}

RationalMatrix ad_matrix(const RationalMatrix& x) {
  const std::size_t n = x.rows();
  RationalMatrix ad(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (xY)_ij picks up x_ik Y_kj; (Yx)_ij picks up Y_ik x_kj.
        ad(i * n + j, k * n + j) += x(i, k);
        ad(i * n + j, i * n + k) -= x(k, j);
      }
  return ad;
}

Subspace whole_algebra(const LieAlgebraSpec& g) {
  if (g.family == Family::gl) return {g, RationalMatrix::identity(g.n * g.n)};
  return {g, kernel_matrix(trace_row(g.n))};
}

Subspace zero_subspace(const LieAlgebraSpec& g) { return {g, RationalMatrix(g.n * g.n, 0)}; }

Subspace span_of(const LieAlgebraSpec& g, const std::vector<RationalMatrix>& elements) {
  std::vector<RationalMatrix> cols;
  for (const auto& e : elements) cols.push_back(e.flatten());
  return {g, hstack(cols, g.n * g.n)};
}

Subspace center_of_algebra(const LieAlgebraSpec& g) {
  if (g.family == Family::sl) return zero_subspace(g);
  return span_of(g, {RationalMatrix::identity(g.n)});
}

Subspace diagonal_subalgebra(const LieAlgebraSpec& g) {
  std::vector<RationalMatrix> diag;
  for (int i = 0; i < g.n; ++i) diag.push_back(RationalMatrix::unit(g.n, i, i));
  return intersection(span_of(g, diag), whole_algebra(g));
}

Subspace centralizer(const LieElement& x) { return centralizer(x.algebra(), x.matrix()); }

Subspace centralizer(const LieAlgebraSpec& g, const RationalMatrix& x) {
  return {g, kernel_matrix(vstack(ad_matrix(x), algebra_constraints(g)))};
}

Subspace centralizer_in(const Subspace& s, const RationalMatrix& x) {
  const RationalMatrix& b = s.basis();
  return {s.ambient(), b * kernel_matrix(ad_matrix(x) * b)};
}

Subspace image_of_ad(const Subspace& s, const RationalMatrix& x) {
  return {s.ambient(), ad_matrix(x) * s.basis()};
}

Subspace annihilator(const Subspace& s) {
  const int n = s.ambient().n;
  // tr(Y S) = sum_ij Y_ij S_ji, so the functional of S is vec(S^T).
  RationalMatrix rows(s.dim(), n * n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    RationalMatrix st = s.element(k).transpose();
    for (int a = 0; a < n * n; ++a) rows(k, a) = st.entries()[a];
  }
  return {s.ambient(), kernel_matrix(vstack(rows, algebra_constraints(s.ambient())))};
}

Subspace derived_algebra(const Subspace& s) {
  auto elems = s.elements();
  std::vector<RationalMatrix> brackets;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) brackets.push_back(commutator(elems[i], elems[j]));
  return brackets.empty() ? zero_subspace(s.ambient()) : span_of(s.ambient(), brackets);
}

Subspace center(const Subspace& s) {
  Subspace out = s;
  for (const auto& y : s.elements()) out = centralizer_in(out, y);
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (!(a.ambient() == b.ambient())) throw PreconditionError("subspace sum: mismatched algebras");
  return {a.ambient(), span_sum(a.basis(), b.basis())};
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (!(a.ambient() == b.ambient())) throw PreconditionError("subspace intersection: mismatched algebras");
  return {a.ambient(), span_intersection(a.basis(), b.basis())};
}

bool is_nilpotent(const RationalMatrix& x) {
  return x.is_square() && power(x, static_cast<unsigned>(x.rows())).is_zero();
}

RationalMatrix jordan_blocks(const std::vector<int>& sizes) {
  int n = size_of(sizes);
  RationalMatrix m(n, n);
  int offset = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) m(offset + i, offset + i + 1) = 1;
    offset += s;
  }
  return m;
}

RationalMatrix nilpotent_representative(const Partition& lambda) { return jordan_blocks(normalized(lambda)); }

Partition jordan_type(const RationalMatrix& x) {
  if (!is_nilpotent(x)) throw PreconditionError("jordan_type: matrix is not nilpotent");
  const std::size_t n = x.rows();
  // r_k = rank x^k; blocks of size >= k number r_{k-1} - r_k.
  std::vector<int> r{static_cast<int>(n)};
  RationalMatrix p = RationalMatrix::identity(n);
  while (r.back() > 0) {
    p = p * x;
    r.push_back(static_cast<int>(rank(p)));
  }
  Partition transposed;
  for (std::size_t k = 1; k < r.size(); ++k) transposed.push_back(r[k - 1] - r[k]);
  return transpose(transposed);
}

}  // namespace slicekit
