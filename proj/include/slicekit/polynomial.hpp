#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slicekit/matrix.hpp"

namespace slicekit {

/// Polynomial in t over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(unsigned degree, const Rational& c = 1);
  /// t - root
  static RationalPolynomial linear(const Rational& root);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational operator()(const Rational& t) const;
  RationalMatrix operator()(const RationalMatrix& m) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator-(const RationalPolynomial& a);
RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);

/// (quotient, remainder); throws std::domain_error on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// det(tI - m), monic of degree n.
RationalPolynomial charpoly(const RationalMatrix& m);
RationalPolynomial min_poly(const RationalMatrix& m);
/// p / gcd(p, p'), made monic. Throws std::domain_error on p = 0.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

struct RationalRoots {
  std::vector<std::pair<Rational, unsigned>> roots;  // ascending, with multiplicity
  RationalPolynomial residual;  // monic cofactor with no rational root
};

/// Exact rational roots of a nonzero polynomial, found by Sturm isolation
/// down to the 1/(leading coefficient) grid of the primitive integer form.
RationalRoots rational_roots(const RationalPolynomial& p);

}  // namespace slicekit
