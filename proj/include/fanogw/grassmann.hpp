#pragma once

#include <string>
#include <vector>

#include "fanogw/chern_polynomial.hpp"
#include "fanogw/power_series.hpp"

namespace fanogw {

// G(r, n): r-dimensional subspaces of an n-dimensional space. G(1, n) is
// the projective space P^{n-1}.
struct GrassmannianSpec {
  int r = 1;
  int n = 2;

  void validate() const {
    if (r < 1 || r >= n)
      throw InvalidInput("G(" + std::to_string(r) + "," + std::to_string(n) + ") needs 1 <= r < n");
  }
  std::string to_string() const { return "G(" + std::to_string(r) + "," + std::to_string(n) + ")"; }
  friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;
};

struct GeometryInfo {
  int dimension = 0;
  int fano_index = 0;
  long plucker_degree = 0;
  friend bool operator==(const GeometryInfo&, const GeometryInfo&) = default;
};

// A cohomology-valued series modulo H^2: c0 + c1 * H.
struct HSeriesPair {
  Series c0;
  Series c1;

  HSeriesPair() = default;
  HSeriesPair(Series unit_part, Series h_part) : c0(std::move(unit_part)), c1(std::move(h_part)) {
    if (c0.order() != c1.order()) throw InvalidInput("HSeriesPair components have different orders");
  }

  std::size_t order() const { return c0.order(); }
  friend bool operator==(const HSeriesPair&, const HSeriesPair&) = default;
};

// dimension r(n-r), index n, Pluecker degree (r(n-r))! prod_{i<r} i!/(n-r+i)!.
inline GeometryInfo grassmannian_geometry(const GrassmannianSpec& spec) {
  spec.validate();
  const int dim = spec.r * (spec.n - spec.r);
  Rational degree(factorial(static_cast<unsigned>(dim)));
  for (int i = 0; i < spec.r; ++i)
    degree = degree * Rational(factorial(static_cast<unsigned>(i))) /
             Rational(factorial(static_cast<unsigned>(spec.n - spec.r + i)));
  if (!degree.is_integer() || !degree.numerator().fits_slong_p())
    throw InvalidInput("Pluecker degree of " + spec.to_string() + " is not a machine integer");
  return {dim, spec.n, degree.numerator().get_si()};
}

namespace detail {

// prod_{l=1}^{count} (x + l)^{-n} as a univariate series in x to degree
// `bound`; each factor is l^{-n} (1 + x/l)^{-n} expanded binomially.
inline std::vector<Rational> inverse_rising_power(int count, int n, int bound) {
  std::vector<Rational> acc(static_cast<std::size_t>(bound) + 1);
  acc[0] = Rational(1);
  for (int l = 1; l <= count; ++l) {
    std::vector<Rational> factor(acc.size());
    const Rational inv_l = Rational(1, l);
    for (int k = 0; k <= bound; ++k) {
      // binom(-n, k) = (-1)^k binom(n+k-1, k)
      Rational b(binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k)));
      if (k % 2 == 1) b = -b;
      factor[static_cast<std::size_t>(k)] = b * inv_l.pow(n + k);
    }
    std::vector<Rational> next(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; i + j < acc.size(); ++j) next[i + j] += acc[i] * factor[j];
    acc = std::move(next);
  }
  return acc;
}

inline void enumerate_compositions(std::vector<int>& parts, std::size_t pos, int remaining,
                                  std::vector<std::vector<int>>& out) {
  if (pos + 1 == parts.size()) {
    parts[pos] = remaining;
    out.push_back(parts);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    parts[pos] = v;
    enumerate_compositions(parts, pos + 1, remaining - v, out);
  }
}

}  // namespace detail

// All compositions (d_1..d_r) of d into r nonnegative parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int d, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  detail::enumerate_compositions(parts, 0, d, out);
  return out;
}

// Degree-d q-coefficient of the Hori-Vafa series of G(r, n) as a
// polynomial in the Chern roots x_1..x_r of S^*, known to total degree
// target_degree.
inline ChernPolynomial hv_degree_part(const GrassmannianSpec& spec, int d, int target_degree) {
  spec.validate();
  if (d < 0) throw InvalidInput("hv_degree_part needs d >= 0");
  const int r = spec.r;
  const int bound = target_degree + r * (r - 1) / 2;

  ChernPolynomial sum(r, bound);
  for (const auto& parts : compositions(d, r)) {
    ChernPolynomial term = ChernPolynomial::constant(r, bound, Rational(1));
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        auto shift = Rational(parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(j)]);
        term = term * (ChernPolynomial::variable(r, bound, i) - ChernPolynomial::variable(r, bound, j) +
                       ChernPolynomial::constant(r, bound, shift));
      }
    for (int i = 0; i < r; ++i) {
      auto series = detail::inverse_rising_power(parts[static_cast<std::size_t>(i)], spec.n, bound);
      ChernPolynomial factor(r, bound);
      for (int k = 0; k <= bound; ++k) {
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = k;
        factor.add_term(e, series[static_cast<std::size_t>(k)]);
      }
      term = term * factor;
    }
    sum += term;
  }
  if ((r - 1) * d % 2 == 1) sum = Rational(-1) * sum;
  return divide_by_vandermonde(sum);
}

// Degree parts d = 0..d_max of the Hori-Vafa series (r >= 2).
inline std::vector<ChernPolynomial> hv_iseries(const GrassmannianSpec& spec, int d_max, int target_degree) {
  spec.validate();
  if (spec.r < 2) throw InvalidInput("hv_iseries needs r >= 2; use projective_iseries for projective spaces");
  std::vector<ChernPolynomial> parts;
  for (int d = 0; d <= d_max; ++d) parts.push_back(hv_degree_part(spec, d, target_degree));
  return parts;
}

// H^0 and H^1 components of sum_d q^d prod_{i=1}^d (H+i)^{-n} on P^{n-1}.
inline HSeriesPair projective_iseries(int n, int d_max) {
  if (n < 2) throw InvalidInput("projective_iseries needs n >= 2");
  Series c0(static_cast<std::size_t>(d_max) + 1), c1(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d) {
    auto s = detail::inverse_rising_power(d, n, 1);
    c0[static_cast<std::size_t>(d)] = s[0];
    c1[static_cast<std::size_t>(d)] = s[1];
  }
  return {c0, c1};
}

// Harmonic number 1 + 1/2 + ... + 1/m.
inline Rational harmonic(int m) {
  Rational h;
  for (int j = 1; j <= m; ++j) h += Rational(1, j);
  return h;
}

// Closed form of the constant term of I^{G(2,n)} at q^d.
inline Rational closed_form_constant(int n, int d) {
  if (n < 3 || d < 0) throw InvalidInput("closed_form_constant needs n >= 3 and d >= 0");
  Rational sum;
  for (int m = 0; m <= d; ++m) {
    Rational b(binomial(static_cast<unsigned>(d), static_cast<unsigned>(m)));
    sum += b.pow(n) * (Rational(n * (d - 2 * m)) * (harmonic(m) - harmonic(d - m)) + Rational(2));
  }
  Rational sign = d % 2 == 0 ? Rational(1, 2) : Rational(-1, 2);
  return sign * sum / Rational(factorial(static_cast<unsigned>(d))).pow(n);
}

// Unit and H components of the degree parts; H = x_1 + ... + x_r, so the H
// coefficient is the (common) coefficient of each x_i.
inline HSeriesPair extract_h_pair(const std::vector<ChernPolynomial>& parts) {
  Series c0(parts.size()), c1(parts.size());
  for (std::size_t d = 0; d < parts.size(); ++d) {
    const auto& p = parts[d];
    c0[d] = p.constant_term();
    c1[d] = p.linear_coefficient(0);
    for (int i = 1; i < p.variables(); ++i)
      if (!(p.linear_coefficient(i) == c1[d]))
        throw AsymmetricSeries("linear coefficients of x1 and x" + std::to_string(i + 1) + " differ at q^" +
                               std::to_string(d));
  }
  return {c0, c1};
}

// Ambient I-series modulo H^2 for G(r, n), dispatching r = 1 to the
// projective formula.
inline HSeriesPair ambient_iseries(const GrassmannianSpec& spec, int d_max) {
  spec.validate();
  if (spec.r == 1) return projective_iseries(spec.n, d_max);
  return extract_h_pair(hv_iseries(spec, d_max, 2));
}

}  // namespace fanogw
