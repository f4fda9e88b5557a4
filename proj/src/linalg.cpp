#include "slicekit/linalg.hpp"

#include <stdexcept>

#include "slicekit/errors.hpp"

namespace slicekit {

Rref rref(const RationalMatrix& m) {
  Rref out{m, {}};
  RationalMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      std::size_t bits = bit_length(a(i, c));
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(r, j)) == 0) continue;
        t = factor * a(r, j);
        a(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RankKernel rank_kernel(const RationalMatrix& m) {
  Rref r = rref(m);
  RankKernel out;
  out.rank = r.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalMatrix v(m.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v(r.pivots[i], 0) = -r.reduced(i, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

RationalMatrix kernel_matrix(const RationalMatrix& m) {
  auto k = rank_kernel(m);
  return hstack(k.kernel_basis, m.cols());
}

std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: row mismatch");
  std::vector<RationalMatrix> parts{m, b};
  Rref r = rref(hstack(parts, m.rows()));
  RationalMatrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, m.cols() + j);
  }
  return x;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  Rational t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) {
        t = factor * a(c, j);
        a(i, j) -= t;
      }
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of non-square matrix");
  auto x = solve(m, RationalMatrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw PreconditionError("matrix is singular");
  return *x;
}

RationalMatrix span_basis(const RationalMatrix& columns) {
  Rref r = rref(columns.transpose());
  RationalMatrix basis(columns.rows(), r.pivots.size());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t i = 0; i < columns.rows(); ++i) basis(i, k) = r.reduced(k, i);
  return basis;
}

RationalMatrix span_sum(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<RationalMatrix> parts{a, b};
  return span_basis(hstack(parts, a.rows()));
}

RationalMatrix span_intersection(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<RationalMatrix> parts{a, -b};
  RationalMatrix k = kernel_matrix(hstack(parts, a.rows()));
  RationalMatrix u(a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) u(i, j) = k(i, j);
  return span_basis(a * u);
}

bool span_contains(const RationalMatrix& span, const RationalMatrix& vectors) {
  std::vector<RationalMatrix> parts{span, vectors};
  return rank(hstack(parts, span.rows())) == rank(span);
}

bool span_equal(const RationalMatrix& a, const RationalMatrix& b) {
  return span_basis(a) == span_basis(b);
}

}  // namespace slicekit
