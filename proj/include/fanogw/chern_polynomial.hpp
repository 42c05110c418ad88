#pragma once

#include <ostream>
#include <vector>

#include "fanogw/sparse_polynomial.hpp"

namespace fanogw {

// Polynomial in the Chern roots x_1..x_r, known exactly up to total degree
// degree_bound. Terms above the bound are dropped by every operation.
class ChernPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Poly = SparsePolynomial<Exponents>;

  ChernPolynomial(int variables, int degree_bound) : variables_(variables), degree_bound_(degree_bound) {
    if (variables < 1) throw InvalidInput("ChernPolynomial needs at least one variable");
  }

  static ChernPolynomial constant(int variables, int degree_bound, const Rational& c) {
    ChernPolynomial p(variables, degree_bound);
    if (degree_bound >= 0) p.poly_.add_term(Exponents(variables, 0), c);
    return p;
  }

  // x_index (0-based)
  static ChernPolynomial variable(int variables, int degree_bound, int index) {
    ChernPolynomial p(variables, degree_bound);
    Exponents e(variables, 0);
    e.at(index) = 1;
    if (degree_bound >= 1) p.poly_.add_term(e, Rational(1));
    return p;
  }

  int variables() const noexcept { return variables_; }
  int degree_bound() const noexcept { return degree_bound_; }
  const Poly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  Rational coefficient(const Exponents& e) const { return poly_.coefficient(e); }
  Rational constant_term() const { return poly_.coefficient(Exponents(variables_, 0)); }
  Rational linear_coefficient(int index) const {
    Exponents e(variables_, 0);
    e.at(index) = 1;
    return poly_.coefficient(e);
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != variables_) throw InvalidInput("exponent vector has wrong length");
    if (Poly::total_degree(e) <= degree_bound_) poly_.add_term(e, c);
  }

  ChernPolynomial with_bound(int degree_bound) const {
    ChernPolynomial r(variables_, degree_bound);
    r.poly_ = poly_.truncated(degree_bound);
    return r;
  }

  ChernPolynomial& operator+=(const ChernPolynomial& o) {
    check_compatible(o);
    degree_bound_ = std::min(degree_bound_, o.degree_bound_);
    poly_ = (poly_ + o.poly_).truncated(degree_bound_);
    return *this;
  }
  ChernPolynomial& operator-=(const ChernPolynomial& o) { return *this += Rational(-1) * o; }

  friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
  friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
  friend ChernPolynomial operator*(const Rational& c, ChernPolynomial a) {
    a.poly_ *= c;
    return a;
  }
  friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
    a.check_compatible(b);
    ChernPolynomial r(a.variables_, std::min(a.degree_bound_, b.degree_bound_));
    r.poly_ = Poly::multiply_bounded(a.poly_, b.poly_, r.degree_bound_);
    return r;
  }

  // Equality of the known parts: compares up to the smaller bound.
  friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
    if (a.variables_ != b.variables_) return false;
    int bound = std::min(a.degree_bound_, b.degree_bound_);
    return a.poly_.truncated(bound) == b.poly_.truncated(bound);
  }

  // True if invariant under every transposition of variables.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < variables_; ++i)
      if (!(swapped(i, i + 1) == *this)) return false;
    return true;
  }

  ChernPolynomial swapped(int i, int j) const {
    ChernPolynomial r(variables_, degree_bound_);
    for (const auto& [e, c] : poly_.terms()) {
      Exponents f = e;
      std::swap(f.at(i), f.at(j));
      r.poly_.add_term(f, c);
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const ChernPolynomial& p) {
    bool first = true;
    for (const auto& [e, c] : p.poly_.terms()) {
      os << (first ? "" : " + ") << "(" << c << ")";
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) os << "*x" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
      first = false;
    }
    if (first) os << "0";
    return os << " + O(deg " << p.degree_bound_ + 1 << ")";
  }

 private:
  void check_compatible(const ChernPolynomial& o) const {
    if (o.variables_ != variables_) throw InvalidInput("ChernPolynomial variable counts differ");
  }

  int variables_;
  int degree_bound_;
  Poly poly_;
};

// prod_{i<j} (x_i - x_j) truncated at degree_bound.
inline ChernPolynomial vandermonde(int variables, int degree_bound) {
  auto v = ChernPolynomial::constant(variables, degree_bound, Rational(1));
  for (int i = 0; i < variables; ++i)
    for (int j = i + 1; j < variables; ++j)
      v = v * (ChernPolynomial::variable(variables, degree_bound, i) -
               ChernPolynomial::variable(variables, degree_bound, j));
  return v;
}

namespace detail {

// Exact quotient by (x_i - x_j). Division by a homogeneous linear form maps
// each homogeneous component to one of degree one less, so a polynomial known
// to degree B yields a quotient known to degree B - 1.
inline ChernPolynomial divide_by_difference(const ChernPolynomial& p, int i, int j) {
  using Exponents = ChernPolynomial::Exponents;
  ChernPolynomial::Poly rest = p.poly();
  ChernPolynomial quotient(p.variables(), p.degree_bound() - 1);
  for (;;) {
    // Peel the term with the largest x_i exponent.
    const Exponents* top = nullptr;
    for (const auto& [e, c] : rest.terms())
      if (e[i] > 0 && (top == nullptr || e[i] > (*top)[i])) top = &e;
    if (top == nullptr) break;
    Exponents e = *top;
    Rational c = rest.coefficient(e);
    Exponents q = e;
    q[i] -= 1;
    quotient.add_term(q, c);
    rest.add_term(e, -c);
    Exponents shifted = q;
    shifted[j] += 1;
    rest.add_term(shifted, c);
  }
  if (!rest.is_zero())
    throw NonExactDivision("polynomial is not divisible by (x" + std::to_string(i + 1) + " - x" +
                           std::to_string(j + 1) + ")");
  return quotient;
}

}  // namespace detail

// Exact quotient P / prod_{i<j}(x_i - x_j). The result is reliable up to
// degree_bound - r(r-1)/2.
inline ChernPolynomial divide_by_vandermonde(const ChernPolynomial& p) {
  ChernPolynomial q = p;
  for (int i = 0; i < p.variables(); ++i)
    for (int j = i + 1; j < p.variables(); ++j) q = detail::divide_by_difference(q, i, j);
  return q;
}

}  // namespace fanogw
