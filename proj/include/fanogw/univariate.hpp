#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fanogw/rational.hpp"

namespace fanogw {

// Dense univariate polynomial over Q, coefficients stored low degree first
// with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  static UPoly monomial(int power, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return UPoly(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int power) const {
    return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
    return UPoly(std::move(v));
  }

  // p(x + shift)
  UPoly shifted(const Rational& shift) const {
    UPoly r;
    UPoly base({shift, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * base + UPoly::constant(*it);
    return r;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * *this;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) { return *this += Rational(-1) * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const { return Rational(-1) * *this; }
  friend UPoly operator*(const Rational& c, UPoly p) {
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      Rational c = r.leading() / b.leading();
      UPoly term = monomial(r.degree() - b.degree(), c);
      q += term;
      r -= term * b;
    }
    return {q, r};
  }

  // Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational a = c.abs();
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (i == 0 || !(a == Rational(1))) out += a.to_string() + (i > 0 ? "*" : "");
      if (i > 0) out += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

namespace detail {

inline int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Fraction with the smallest denominator in the closed interval [lo, hi],
// found by walking the Stern-Brocot tree via continued fractions.
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.raw().get_num_mpz_t(), lo.raw().get_den_mpz_t());
  Rational floor_lo(fl);
  if (floor_lo == lo) return lo;
  if (floor_lo + Rational(1) <= hi) return floor_lo + Rational(1);
  // lo and hi share the integer part: recurse on reciprocals of the fractional parts.
  Rational inner = simplest_between(Rational(1) / (hi - floor_lo), Rational(1) / (lo - floor_lo));
  return floor_lo + Rational(1) / inner;
}

}  // namespace detail

// All distinct rational roots of a nonzero polynomial, in increasing order.
// Real roots of the squarefree part are isolated with a Sturm chain and
// narrowed until any rational root p/q (q | leading coefficient of the
// integer-normalized polynomial) is the simplest fraction in its interval;
// candidates are then confirmed by exact evaluation.
inline std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InvalidInput("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() == 0) return roots;
  UPoly f = divmod(p, gcd(p, p.derivative())).first.monic();
  if (f.degree() == 1) return {-f.coefficient(0)};

  // Denominators of rational roots divide the leading coefficient once f is
  // scaled to a primitive integer polynomial.
  mpz_class common(1);
  for (const auto& c : f.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class lead = (f.leading() * Rational(common)).numerator();
  mpz_class content(0);
  for (const auto& c : f.coefficients()) {
    mpz_class n = (c * Rational(common)).numerator();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  lead /= content;
  if (lead < 0) lead = -lead;
  Rational width = Rational(1) / Rational(mpz_class(2 * lead * lead));

  std::vector<UPoly> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  // Cauchy bound on root magnitudes.
  Rational bound(1);
  for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, Rational(1) + f.coefficient(i).abs());

  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    if (f(lo).is_zero()) {
      roots.push_back(lo);
      lo = lo + width / Rational(4);
    }
    int count = detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
    if (count == 0) continue;
    if (count == 1 && hi - lo < width) {
      Rational candidate = detail::simplest_between(lo, hi);
      if (f(candidate).is_zero()) roots.push_back(candidate);
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace fanogw
