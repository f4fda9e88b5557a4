#include "slicekit/jordan.hpp"

#include <stdexcept>

#include "slicekit/errors.hpp"
#include "slicekit/linalg.hpp"

namespace slicekit {

std::pair<RationalMatrix, RationalMatrix> jordan_parts(const RationalMatrix& x) {
  if (!x.is_square()) throw PreconditionError("jordan decomposition of a non-square matrix");
  const RationalPolynomial p = squarefree_part(charpoly(x));
  const RationalPolynomial dp = p.derivative();
  RationalMatrix y = x;
  // Newton iteration; p'(y) stays invertible and the iteration terminates
  // after about log2(n) steps in exact arithmetic.
  for (std::size_t step = 0; step <= x.rows() + 1; ++step) {
    RationalMatrix py = p(y);
    if (py.is_zero()) return {y, x - y};
    y = y - py * inverse(dp(y));
  }
  throw std::logic_error("jordan decomposition did not converge");
}

JordanDecomposition jordan_decompose(const LieElement& x) {
  auto [s, nil] = jordan_parts(x.matrix());
  const std::size_t n = x.matrix().rows();
  std::vector<RationalMatrix> powers;
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers.push_back(p.flatten());
    p = p * x.matrix();
  }
  auto c = solve(hstack(powers, n * n), s.flatten());
  if (!c) throw std::logic_error("semisimple part is not a polynomial in x");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back((*c)(i, 0));
  return {LieElement(x.algebra(), s), LieElement(x.algebra(), nil), RationalPolynomial(coeffs)};
}

bool is_semisimple(const RationalMatrix& x) {
  RationalPolynomial m = min_poly(x);
  return squarefree_part(m) == m;
}

namespace {

RationalMatrix functional_rows(const std::vector<RationalMatrix>& elements, std::size_t n) {
  RationalMatrix rows(elements.size(), n * n);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    RationalMatrix t = elements[k].transpose();
    for (std::size_t a = 0; a < n * n; ++a) rows(k, a) = t.entries()[a];
  }
  return rows;
}

RationalMatrix offdiagonal_rows(std::size_t n) {
  RationalMatrix rows(n * n - n, n * n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) rows(r++, i * n + j) = 1;
  return rows;
}

}  // namespace

Sl2Triple jm_complete_in(const LieElement& e, const RationalMatrix& s) {
  const RationalMatrix& E = e.matrix();
  const std::size_t n = E.rows();
  if (E.is_zero()) throw PreconditionError("jm_complete: e must be nonzero");
  if (!is_nilpotent(E)) throw PreconditionError("jm_complete: e must be nilpotent");
  if (!commutator(E, s).is_zero()) throw PreconditionError("jm_complete: e must commute with s");

  const LieAlgebraSpec gl = LieAlgebraSpec::gl(static_cast<int>(n));
  const RationalMatrix ad_s = ad_matrix(s);
  const RationalMatrix ad_e = ad_matrix(E);
  // h in [g_s, e]: [h, s] = 0 and h orthogonal to (g_e cap g_s); plus [h, e] = 2e.
  Subspace ges = centralizer_in(centralizer(gl, s), E);
  RationalMatrix a = vstack(vstack(ad_s, functional_rows(ges.elements(), n)), -ad_e);
  RationalMatrix rhs(a.rows(), 1);
  for (std::size_t k = 0; k < n * n; ++k) rhs(a.rows() - n * n + k, 0) = 2 * E.entries()[k];

  auto h = solve(vstack(a, offdiagonal_rows(n)), vstack(rhs, RationalMatrix(n * n - n, 1)));
  if (!h) h = solve(a, rhs);
  if (!h) throw std::logic_error("jm_complete: no admissible h");
  const RationalMatrix H = RationalMatrix::unflatten(*h, n, n);

  RationalMatrix b = vstack(vstack(ad_s, ad_e), ad_matrix(H) + Rational(2) * RationalMatrix::identity(n * n));
  RationalMatrix rhs_f(b.rows(), 1);
  for (std::size_t k = 0; k < n * n; ++k) rhs_f(n * n + k, 0) = H.entries()[k];
  auto f = solve(b, rhs_f);
  if (!f) throw std::logic_error("jm_complete: no admissible f");

  Sl2Triple t{e, LieElement(e.algebra(), H), LieElement(e.algebra(), RationalMatrix::unflatten(*f, n, n))};
  if (!t.is_valid()) throw std::logic_error("jm_complete: bracket relations failed");
  return t;
}

Sl2Triple jm_complete(const LieElement& e) {
  return jm_complete_in(e, RationalMatrix::zero(e.n(), e.n()));
}

}  // namespace slicekit
