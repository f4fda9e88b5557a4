#include "slicekit/canonical_form.hpp"

#include <stdexcept>

namespace slicekit {

namespace {

using PolyMatrix = std::vector<std::vector<RationalPolynomial>>;

void swap_rows(PolyMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(PolyMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

std::vector<RationalPolynomial> invariant_factors(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invariant_factors of non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix a(n, std::vector<RationalPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = RationalPolynomial::constant(-m(i, j));
      if (i == j) a[i][j] = a[i][j] + RationalPolynomial::monomial(1);
    }

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Move an entry of least degree to (k, k).
      int best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      swap_rows(a, k, bi);
      swap_cols(a, k, bj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        auto q = divmod(a[i][k], a[k][k]).first;
        for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        auto q = divmod(a[k][j], a[k][k]).first;
        for (std::size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row k and start over.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divmod(a[i][j], a[k][k]).second.is_zero()) {
            for (std::size_t c = k; c < n; ++c) a[k][c] = a[k][c] + a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  std::vector<RationalPolynomial> factors;
  for (std::size_t k = 0; k < n; ++k) {
    RationalPolynomial d = a[k][k].monic();
    if (d.degree() >= 1) factors.push_back(d);
  }
  return factors;
}

RationalMatrix companion(const RationalPolynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw std::invalid_argument("companion needs a monic polynomial");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  RationalMatrix c(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coefficient(static_cast<unsigned>(i));
  return c;
}

RationalMatrix rational_canonical_form(const RationalMatrix& m) {
  std::vector<RationalMatrix> blocks;
  for (const auto& f : invariant_factors(m)) blocks.push_back(companion(f));
  return block_diagonal(blocks);
}

}  // namespace slicekit
