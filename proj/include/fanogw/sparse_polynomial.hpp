#pragma once

#include <map>
#include <numeric>
#include <utility>

#include "fanogw/rational.hpp"

namespace fanogw {

// Sparse polynomial over Q keyed by an exponent container (std::vector<int>
// or std::array<int, N>). Zero coefficients are never stored.
template <class Exponents>
class SparsePolynomial {
 public:
  using Monomial = Exponents;
  using TermMap = std::map<Exponents, Rational>;

  SparsePolynomial() = default;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }
  SparsePolynomial operator-() const { return Rational(-1) * *this; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    return multiply_bounded(a, b, -1);
  }

  // Product keeping only monomials of total degree <= bound (bound < 0: all).
  static SparsePolynomial multiply_bounded(const SparsePolynomial& a, const SparsePolynomial& b, int bound) {
    SparsePolynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      int da = total_degree(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (bound >= 0 && da + total_degree(mb) > bound) continue;
        Exponents m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  static int total_degree(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  SparsePolynomial truncated(int bound) const {
    SparsePolynomial r;
    for (const auto& [m, c] : terms_)
      if (total_degree(m) <= bound) r.terms_.emplace(m, c);
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

 protected:
  TermMap terms_;
};

}  // namespace fanogw
