#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are
/// allowed so that empty spans (n x 0 bases) need no special casing.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Matrix unit E_ij (0-based indices).
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RationalMatrix diagonal(std::span<const Rational> d);
  static RationalMatrix column(std::span<const Rational> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const noexcept { return data_; }

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& c);

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

  /// rows*cols x 1 column, row-major.
  RationalMatrix flatten() const;
  static RationalMatrix unflatten(const RationalMatrix& column, std::size_t rows, std::size_t cols);

  RationalMatrix column_at(std::size_t j) const;
  std::vector<Rational> diagonal_entries() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, RationalMatrix a);

RationalMatrix power(const RationalMatrix& m, unsigned k);
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Columns side by side; all inputs must share a row count.
RationalMatrix hstack(std::span<const RationalMatrix> columns, std::size_t rows);
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);
RationalMatrix block_diagonal(std::span<const RationalMatrix> blocks);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace slicekit
