#include "slicekit/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "slicekit/linalg.hpp"

namespace slicekit {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear(const Rational& root) {
  return RationalPolynomial({-root, Rational(1)});
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= inv;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalMatrix RationalPolynomial::operator()(const RationalMatrix& m) const {
  RationalMatrix acc = RationalMatrix::zero(m.rows(), m.cols());
  const RationalMatrix id = RationalMatrix::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (sgn(a) == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a) { return Rational(-1) * a; }

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> v(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  std::vector<Rational> v = a.coefficients();
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coefficients()[j];
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial charpoly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  const RationalMatrix id = RationalMatrix::identity(n);
  RationalMatrix mk = RationalMatrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / static_cast<unsigned long>(k);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial min_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly of non-square matrix");
  const std::size_t n = m.rows();
  // First power of m lying in the span of the lower ones.
  std::vector<RationalMatrix> powers{RationalMatrix::identity(n).flatten()};
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    p = p * m;
    RationalMatrix target = p.flatten();
    auto x = solve(hstack(powers, n * n), target);
    if (x) {
      std::vector<Rational> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = -(*x)(i, 0);
      c[d] = 1;
      return RationalPolynomial(std::move(c));
    }
    powers.push_back(std::move(target));
  }
  throw std::logic_error("min_poly: Cayley-Hamilton violated");
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return RationalPolynomial::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

using IntPoly = std::vector<Integer>;

IntPoly primitive_integer(const RationalPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly v;
  for (const auto& c : p.coefficients()) v.push_back(Integer(c * l));
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

int sign_at(const RationalPolynomial& p, const Rational& t) { return sgn(p(t)); }

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<RationalPolynomial>& chain, const Rational& t) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Roots in (lo, hi], assuming p squarefree.
void isolate(const RationalPolynomial& p, const std::vector<RationalPolynomial>& chain, const Rational& lo,
             const Rational& hi, const Integer& grid, std::vector<Rational>& found) {
  int count = variations(chain, lo) - variations(chain, hi);
  if (count == 0) return;
  if ((hi - lo) * grid < 1) {
    // At most one point k/grid lies in (lo, hi].
    Integer k;
    Rational scaled = hi * grid;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational cand(k, grid);
    cand.canonicalize();
    if (cand > lo && sgn(p(cand)) == 0) found.push_back(cand);
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(p, chain, lo, mid, grid, found);
  isolate(p, chain, mid, hi, grid, found);
}

}  // namespace

RationalRoots rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RationalRoots out;
  RationalPolynomial sf = squarefree_part(p);
  if (sf.degree() >= 1) {
    IntPoly ip = primitive_integer(sf);
    Integer lead = ip.back();
    // Cauchy bound 1 + max |a_i / a_d| on the monic squarefree part.
    Rational bound = 0;
    for (int k = 0; k < sf.degree(); ++k) bound = std::max(bound, Rational(abs(sf.coefficients()[k])));
    bound += 1;
    auto chain = sturm_chain(sf);
    std::vector<Rational> found;
    isolate(sf, chain, -bound, bound, lead, found);
    RationalPolynomial rest = p.monic();
    for (const auto& r : found) {
      unsigned mult = 0;
      RationalPolynomial lin = RationalPolynomial::linear(r);
      while (true) {
        auto [q, rem] = divmod(rest, lin);
        if (!rem.is_zero()) break;
        rest = q;
        ++mult;
      }
      out.roots.emplace_back(r, mult);
    }
    out.residual = rest;
  } else {
    out.residual = p.monic();
  }
  return out;
}

}  // namespace slicekit
