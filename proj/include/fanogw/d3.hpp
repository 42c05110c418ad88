#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanogw/relations.hpp"
#include "fanogw/solver.hpp"
#include "fanogw/univariate.hpp"

namespace fanogw {

// Element of Q[t]<D> with D = t d/dt, kept in the canonical form
// sum_i p_i(t) D^i (all t to the left of all D).
class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<UPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DifferentialOperator constant(const Rational& c) { return DifferentialOperator({UPoly::constant(c)}); }
  static DifferentialOperator D() { return DifferentialOperator({UPoly{}, UPoly::constant(Rational(1))}); }
  static DifferentialOperator t() { return DifferentialOperator({UPoly::x()}); }
  // p(t) D^power
  static DifferentialOperator term(const UPoly& p, int power) {
    std::vector<UPoly> v(static_cast<std::size_t>(power) + 1);
    v.back() = p;
    return DifferentialOperator(std::move(v));
  }
  // (Dt)^m, the word "multiply by t, then apply D" repeated m times.
  static DifferentialOperator dt_power(int m);

  // -1 for the zero operator.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<UPoly>& coefficients() const noexcept { return coeffs_; }
  UPoly coefficient(int power) const {
    return power >= 0 && power <= order() ? coeffs_[static_cast<std::size_t>(power)] : UPoly{};
  }

  // P(m) = sum_i p_i(0) m^i
  UPoly indicial_polynomial() const {
    std::vector<Rational> v;
    for (const auto& p : coeffs_) v.push_back(p.coefficient(0));
    return UPoly(std::move(v));
  }

  // R_j(s) with L t^s = sum_j R_j(s) t^{s+j}; R_0 is the indicial polynomial.
  UPoly shift_polynomial(int j) const {
    std::vector<Rational> v;
    for (const auto& p : coeffs_) v.push_back(p.coefficient(j));
    return UPoly(std::move(v));
  }

  int t_degree() const {
    int deg = -1;
    for (const auto& p : coeffs_) deg = std::max(deg, p.degree());
    return deg;
  }

  DifferentialOperator& operator+=(const DifferentialOperator& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DifferentialOperator& operator-=(const DifferentialOperator& o) { return *this += Rational(-1) * o; }

  friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
  friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) { return a -= b; }
  DifferentialOperator operator-() const { return Rational(-1) * *this; }
  friend DifferentialOperator operator*(const Rational& c, DifferentialOperator a) {
    for (auto& p : a.coeffs_) p = c * p;
    a.trim();
    return a;
  }
  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);
  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = order(); i >= 0; --i) {
      const UPoly& p = coeffs_[static_cast<std::size_t>(i)];
      if (p.is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string d = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
      if (p == UPoly::constant(Rational(1)) && i > 0)
        s += d;
      else
        s += "(" + p.to_string("t") + ")" + (d.empty() ? "" : "*" + d);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const DifferentialOperator& op) { return os << op.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<UPoly> coeffs_;
};

// (p D^a)(q D^b) = p sum_k q_k t^k (D+k)^a D^b
inline DifferentialOperator weyl_multiply(const DifferentialOperator& a, const DifferentialOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(static_cast<std::size_t>(a.order() + b.order()) + 1);
  for (int i = 0; i <= a.order(); ++i) {
    const UPoly& p = a.coefficients()[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      const UPoly& q = b.coefficients()[static_cast<std::size_t>(j)];
      for (int k = 0; k <= q.degree(); ++k) {
        const Rational& qk = q.coefficients()[static_cast<std::size_t>(k)];
        if (qk.is_zero()) continue;
        UPoly ptk = p * UPoly::monomial(k, qk);
        for (int s = 0; s <= i; ++s) {
          Rational c = Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(s))) * Rational(k).pow(i - s);
          if (c.is_zero()) continue;
          out[static_cast<std::size_t>(s + j)] += c * ptk;
        }
      }
    }
  }
  return DifferentialOperator(std::move(out));
}

inline DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
  return weyl_multiply(a, b);
}

inline DifferentialOperator DifferentialOperator::dt_power(int m) {
  if (m < 0) throw InvalidInput("dt_power needs m >= 0");
  const DifferentialOperator word = D() * t();
  DifferentialOperator r = constant(Rational(1));
  for (int i = 0; i < m; ++i) r = r * word;
  return r;
}

// L applied to a truncated series, computed termwise from L t^m = sum_i p_i(t) m^i t^m.
inline Series apply_operator(const DifferentialOperator& op, const Series& phi) {
  Series out(phi.order());
  for (std::size_t m = 0; m < phi.order(); ++m) {
    if (phi[m].is_zero()) continue;
    for (int i = 0; i <= op.order(); ++i) {
      const UPoly& p = op.coefficients()[static_cast<std::size_t>(i)];
      const Rational w = Rational(static_cast<long>(m)).pow(i) * phi[m];
      for (int k = 0; k <= p.degree(); ++k)
        if (m + static_cast<std::size_t>(k) < out.order())
          out[m + static_cast<std::size_t>(k)] += p.coefficients()[static_cast<std::size_t>(k)] * w;
    }
  }
  return out;
}

using OperatorMatrix = std::vector<std::vector<DifferentialOperator>>;

// DE - M^lambda with A^lambda = A + lambda E; (Dt) = t(D+1).
inline OperatorMatrix build_pencil(const CountingMatrix& matrix, const Rational& lambda) {
  constexpr int n = 4;
  OperatorMatrix m(n, std::vector<DifferentialOperator>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      auto& entry = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
      if (k == l)
        entry = DifferentialOperator::D() - (matrix.at(k, k) + lambda) * DifferentialOperator::dt_power(1);
      else if (k == l + 1)
        entry = DifferentialOperator::constant(Rational(-1));
      else if (k < l)
        entry = -(matrix.at(k, l) * DifferentialOperator::dt_power(l - k + 1));
    }
  return m;
}

// Cofactor expansion along the rightmost column, each cofactor multiplied
// on the right by its column entry; minors expanded the same way.
inline DifferentialOperator right_determinant(const OperatorMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("right_determinant needs a square matrix");
  if (n == 0) return DifferentialOperator::constant(Rational(1));
  if (n == 1) return m[0][0];
  DifferentialOperator det;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& entry = m[i][n - 1];
    if (entry.is_zero()) continue;
    OperatorMatrix minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin(), m[r].end() - 1);
    }
    DifferentialOperator term = right_determinant(minor) * entry;
    if ((i + n - 1) % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// L with op = D * L, peeled from the top order down.
inline DifferentialOperator left_divide_by_D(const DifferentialOperator& op) {
  DifferentialOperator rem = op;
  std::vector<UPoly> quotient(static_cast<std::size_t>(std::max(op.order(), 0)));
  for (int i = op.order(); i >= 1; --i) {
    UPoly top = rem.coefficient(i);
    if (top.is_zero()) continue;
    quotient[static_cast<std::size_t>(i - 1)] = top;
    rem -= DifferentialOperator::D() * DifferentialOperator::term(top, i - 1);
  }
  if (!rem.is_zero()) throw NotLeftDivisible("remainder " + rem.to_string());
  return DifferentialOperator(std::move(quotient));
}

// The D3 operator L^lambda of a counting matrix.
inline DifferentialOperator d3_operator(const CountingMatrix& matrix, const Rational& lambda) {
  return left_divide_by_D(right_determinant(build_pencil(matrix, lambda)));
}

using QExpansion = Series;

// Unique Phi = sum c_m t^m with c_0 = 1 and L[Phi] = 0 mod t^order.
inline QExpansion frobenius_solve(const DifferentialOperator& op, std::size_t order) {
  if (order == 0) throw InvalidInput("frobenius_solve needs order >= 1");
  const UPoly P = op.indicial_polynomial();
  if (!P(Rational(0)).is_zero())
    throw ObstructedRecursion("indicial polynomial " + P.to_string("m") + " does not vanish at 0");
  std::vector<UPoly> R;
  for (int j = 0; j <= op.t_degree(); ++j) R.push_back(op.shift_polynomial(j));
  QExpansion phi(order);
  phi[0] = Rational(1);
  for (std::size_t m = 1; m < order; ++m) {
    const Rational pm = P(Rational(static_cast<long>(m)));
    if (pm.is_zero()) throw ObstructedRecursion("indicial polynomial vanishes at m = " + std::to_string(m));
    Rational acc;
    for (std::size_t j = 1; j < R.size() && j <= m; ++j)
      acc += R[j](Rational(static_cast<long>(m - j))) * phi[m - j];
    phi[m] = -acc / pm;
  }
  return phi;
}

inline Rational divisor_sum(long m) {
  long s = 0;
  for (long k = 1; k * k <= m; ++k)
    if (m % k == 0) s += k == m / k ? k : k + m / k;
  return Rational(s);
}

// E_2(q) = 1 - 24 sum sigma_1(m) q^m
inline QExpansion eisenstein_e2(std::size_t order) {
  QExpansion e(order);
  if (order == 0) return e;
  e[0] = Rational(1);
  for (std::size_t m = 1; m < order; ++m) e[m] = Rational(-24) * divisor_sum(static_cast<long>(m));
  return e;
}

// phi_N = (N E_2(q^N) - E_2(q)) / (N - 1), so phi_N(0) = 1.
inline QExpansion eisenstein_weight2(long N, std::size_t order) {
  if (N < 2) throw InvalidLevel("level " + std::to_string(N) + " is below 2");
  const QExpansion e2 = eisenstein_e2(order);
  QExpansion phi(order);
  for (std::size_t m = 0; m < order; ++m) {
    Rational v = -e2[m];
    if (m % static_cast<std::size_t>(N) == 0) v += Rational(N) * e2[m / static_cast<std::size_t>(N)];
    phi[m] = v / Rational(N - 1);
  }
  return phi;
}

struct ModularityRow {
  Rational lambda;
  std::string candidate;
  // nullopt: agrees through the requested order
  std::optional<std::size_t> first_mismatch;
  std::optional<std::string> error;
};

struct ModularityReport {
  long level = 0;
  std::size_t order = 0;
  QExpansion eisenstein;
  std::vector<Rational> lambdas;
  std::vector<std::optional<QExpansion>> solutions;
  std::vector<ModularityRow> rows;
};

inline const std::vector<std::string>& modularity_candidates() {
  static const std::vector<std::string> names{"eisenstein_phi_N", "period", "period_twist_plus",
                                              "period_twist_minus"};
  return names;
}

namespace detail {

inline std::optional<std::size_t> first_mismatch(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t m = 0; m < n; ++m)
    if (!(a[m] == b[m])) return m;
  return std::nullopt;
}

// sum m! s[m] t^m
inline Series borel_inverse(const Series& s) {
  Series out(s.order());
  for (std::size_t m = 0; m < s.order(); ++m) out[m] = Rational(factorial(static_cast<unsigned>(m))) * s[m];
  return out;
}

}  // namespace detail

// Descriptive comparison of the normalized D3 solutions with a list of
// candidate series. Nothing here is a pass/fail statement.
inline ModularityReport modularity_report(const CountingMatrix& matrix, const Rational& alpha, std::size_t order) {
  if (order < 1) throw InvalidInput("modularity_report needs order >= 1");
  if (matrix.deg() % 2 != 0) throw InvalidLevel("deg " + std::to_string(matrix.deg()) + " is odd");
  ModularityReport report;
  report.level = matrix.deg() / 2;
  report.order = order;
  report.eisenstein = eisenstein_weight2(report.level, order);

  auto symbolic = RelationEngine().symbolic_iseries(static_cast<int>(std::max<std::size_t>(order, 2)) - 1);
  Series c0(order);
  for (std::size_t d = 0; d < order; ++d) c0[d] = symbolic[d].first.evaluate(matrix.entries());
  const Series targets[] = {report.eisenstein, detail::borel_inverse(c0),
                            detail::borel_inverse(exp_linear(alpha, order) * c0),
                            detail::borel_inverse(exp_linear(-alpha, order) * c0)};

  report.lambdas = {Rational(0), alpha, -alpha};
  for (const Rational& lambda : report.lambdas) {
    std::optional<QExpansion> phi;
    std::optional<std::string> error;
    try {
      phi = frobenius_solve(d3_operator(matrix, lambda), order);
    } catch (const Error& e) {
      error = std::string(e.name()) + ": " + e.what();
    }
    report.solutions.push_back(phi);
    for (std::size_t c = 0; c < modularity_candidates().size(); ++c) {
      ModularityRow row{lambda, modularity_candidates()[c], std::nullopt, error};
      if (phi) row.first_mismatch = detail::first_mismatch(*phi, targets[c]);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace fanogw
