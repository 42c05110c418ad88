#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanogw/rational.hpp"

namespace fanogw {

// Truncated power series sum_{d < order} c_d q^d. The order is part of the
// value: coefficients at or beyond it are unknown, not zero, and are never
// reported. Mixed-order arithmetic truncates to the smaller order.
template <class Scalar>
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t order) : coeffs_(order) {}
  explicit PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  PowerSeries(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

  static PowerSeries constant(const Scalar& c, std::size_t order) {
    PowerSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }

  // q^power truncated at `order`.
  static PowerSeries monomial(std::size_t power, const Scalar& c, std::size_t order) {
    PowerSeries s(order);
    if (power < order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  const Scalar& operator[](std::size_t d) const { return at(d); }
  Scalar& operator[](std::size_t d) { return at(d); }

  const Scalar& at(std::size_t d) const {
    if (d >= coeffs_.size())
      throw std::out_of_range("coefficient q^" + std::to_string(d) + " is beyond truncation order " +
                              std::to_string(coeffs_.size()));
    return coeffs_[d];
  }
  Scalar& at(std::size_t d) {
    if (d >= coeffs_.size())
      throw std::out_of_range("coefficient q^" + std::to_string(d) + " is beyond truncation order " +
                              std::to_string(coeffs_.size()));
    return coeffs_[d];
  }

  PowerSeries truncated(std::size_t order) const {
    PowerSeries s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.order(), s.coeffs_.begin());
    return s;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t d = 0; d < r.order(); ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
    return r;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t d = 0; d < r.order(); ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
    return r;
  }

  // Cauchy product truncated at min(order_a, order_b).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) {
      if (a.coeffs_[i] == Scalar{}) continue;
      for (std::size_t j = 0; i + j < r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend PowerSeries operator*(const Scalar& c, PowerSeries s) {
    for (auto& x : s.coeffs_) x = c * x;
    return s;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    bool first = true;
    for (std::size_t d = 0; d < s.order(); ++d) {
      if (s.coeffs_[d] == Scalar{}) continue;
      if (!first) os << " + ";
      os << "(" << s.coeffs_[d] << ")";
      if (d > 0) os << "*q^" << d;
      first = false;
    }
    if (first) os << "0";
    return os << " + O(q^" << s.order() << ")";
  }

 private:
  std::vector<Scalar> coeffs_;
};

using Series = PowerSeries<Rational>;

enum class SeriesOp { add, mul };

inline Series series_combine(SeriesOp op, const Series& a, const Series& b) {
  return op == SeriesOp::add ? a + b : a * b;
}

// sum_{m < order} c^m / m! q^m
inline Series exp_linear(const Rational& c, std::size_t order) {
  if (order == 0) throw InvalidInput("exp_linear needs order >= 1");
  Series s(order);
  Rational term(1);
  for (std::size_t m = 0; m < order; ++m) {
    if (m > 0) term = term * c / Rational(static_cast<long>(m));
    s[m] = term;
  }
  return s;
}

}  // namespace fanogw
