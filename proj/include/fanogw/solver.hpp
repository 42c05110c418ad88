#pragma once

#include <array>
#include <string>
#include <vector>

#include "fanogw/grassmann.hpp"
#include "fanogw/relations.hpp"
#include "fanogw/univariate.hpp"

namespace fanogw {

// Counting matrix of an index-1 Fano threefold with Picard rank 1, stored
// by its five independent entries.
class CountingMatrix {
 public:
  CountingMatrix() = default;
  CountingMatrix(long deg, EntryValues entries) : deg_(deg), entries_(std::move(entries)) {}

  long deg() const noexcept { return deg_; }
  const EntryValues& entries() const noexcept { return entries_; }
  const Rational& operator[](Entry e) const { return entries_[static_cast<std::size_t>(e)]; }

  // a_ij for 0 <= i, j <= 3.
  Rational at(int i, int j) const { return EntryPolynomial::entry(i, j).evaluate(entries_); }

  std::array<std::array<Rational, 4>, 4> full() const {
    std::array<std::array<Rational, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    return m;
  }

  friend bool operator==(const CountingMatrix& a, const CountingMatrix& b) {
    return a.deg_ == b.deg_ && a.entries_ == b.entries_;
  }

 private:
  long deg_ = 1;
  EntryValues entries_{};
};

// Constant terms d_2..d_6 of I^Y_{H^0} = 1 + d_2 q^2 + ... + d_6 q^6 + ...
struct PeriodVector {
  std::array<Rational, 5> values{};

  const Rational& d(int i) const { return values.at(static_cast<std::size_t>(i - 2)); }
  Rational& d(int i) { return values.at(static_cast<std::size_t>(i - 2)); }
  friend bool operator==(const PeriodVector&, const PeriodVector&) = default;
};

// Triangular recovery of the matrix from I^Y mod H^2 through q^4; every
// further coefficient present in the pair (c0[1], c1[3], c1[4], and both
// components beyond q^4) is then checked as a redundant equation.
inline CountingMatrix recover_matrix(const HSeriesPair& pair, long deg) {
  if (pair.order() < 5) throw InvalidInput("recover_matrix needs the I-series through q^4");
  const auto& c0 = pair.c0;
  const auto& c1 = pair.c1;
  EntryValues a{};
  auto& a01 = a[static_cast<std::size_t>(Entry::a01)];
  auto& a11 = a[static_cast<std::size_t>(Entry::a11)];
  auto& a02 = a[static_cast<std::size_t>(Entry::a02)];
  auto& a12 = a[static_cast<std::size_t>(Entry::a12)];
  auto& a03 = a[static_cast<std::size_t>(Entry::a03)];
  a11 = c1[1];
  a01 = Rational(4) * c0[2];
  a12 = Rational(8) * (c1[2] - a11 * a11 / Rational(4) + a01 / Rational(4));
  a02 = Rational(27) * (c0[3] - a11 * a01 / Rational(18));
  a03 = Rational(256) * (c0[4] - a01 * a01 / Rational(64) - a11 * a11 * a01 / Rational(96) -
                         Rational(7) * a11 * a02 / Rational(576) - a01 * a12 / Rational(128));

  RelationEngine engine;
  auto symbolic = engine.symbolic_iseries(static_cast<int>(pair.order()) - 1);
  for (std::size_t d = 0; d < pair.order(); ++d) {
    const std::pair<const Series*, const EntryPolynomial*> checks[] = {{&c0, &symbolic[d].first},
                                                                        {&c1, &symbolic[d].second}};
    for (int comp = 0; comp < 2; ++comp) {
      Rational residual = (*checks[comp].first)[d] - checks[comp].second->evaluate(a);
      if (!residual.is_zero())
        throw ConsistencyCheckFailed("c" + std::to_string(comp) + "[" + std::to_string(d) +
                                     "] residual " + residual.to_string());
    }
  }
  return {deg, a};
}

namespace detail {

inline std::vector<EntryPolynomial> constant_term_relations() {
  RelationEngine engine;
  std::vector<EntryPolynomial> f;
  for (int i = 2; i <= 6; ++i) f.push_back(engine.one_point(i - 2, 3, i));
  return f;
}

}  // namespace detail

// d_i = <tau_{i-2} pt>_i / deg evaluated at the matrix, i = 2..6.
inline PeriodVector forward_periods(const CountingMatrix& matrix) {
  static const std::vector<EntryPolynomial> relations = detail::constant_term_relations();
  PeriodVector v;
  for (int i = 2; i <= 6; ++i) v.d(i) = relations[static_cast<std::size_t>(i - 2)].evaluate(matrix.entries());
  return v;
}

// -495 d3 d5 + 261 d2 d3^2 - 312 d4 d2^2 + 432 d4^2 + 56 d2^4
inline Rational discriminant(const PeriodVector& v) {
  const Rational &d2 = v.d(2), &d3 = v.d(3), &d4 = v.d(4), &d5 = v.d(5);
  return Rational(-495) * d3 * d5 + Rational(261) * d2 * d3 * d3 - Rational(312) * d4 * d2 * d2 +
         Rational(432) * d4 * d4 + Rational(56) * d2.pow(4);
}

namespace detail {

// View of a polynomial in a11 and a12 as a polynomial in a12 whose
// coefficients are univariate in a11.
inline std::vector<UPoly> coefficients_in_a12(const EntryPolynomial& p) {
  std::vector<UPoly> out(static_cast<std::size_t>(std::max(p.degree_in(Entry::a12), 0)) + 1);
  for (const auto& [m, c] : p.terms()) {
    for (Entry e : {Entry::a01, Entry::a02, Entry::a03})
      if (m[static_cast<std::size_t>(e)] != 0) throw InvalidInput("expected a polynomial in a11, a12 only");
    out[static_cast<std::size_t>(m[static_cast<std::size_t>(Entry::a12)])] +=
        UPoly::monomial(m[static_cast<std::size_t>(Entry::a11)], c);
  }
  return out;
}

// Determinant over Q[x] by Laplace expansion (the matrices here are tiny).
inline UPoly determinant(const std::vector<std::vector<UPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(Rational(1));
  if (n == 1) return m[0][0];
  UPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<UPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<UPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    UPoly term = m[0][col] * determinant(minor);
    det += col % 2 == 0 ? term : -term;
  }
  return det;
}

// Sylvester resultant of f, g in Q[x][y] with respect to y, coefficients
// given low degree first.
inline UPoly resultant(std::vector<UPoly> f, std::vector<UPoly> g) {
  auto trim = [](std::vector<UPoly>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  };
  trim(f);
  trim(g);
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (m == 0 && n == 0) return UPoly::constant(Rational(1));
  const std::size_t size = m + n;
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) syl[row][row + k] = f[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) syl[n + row][row + k] = g[n - k];
  return determinant(syl);
}

inline UPoly specialize_a11(const std::vector<UPoly>& coeffs, const Rational& a11) {
  std::vector<Rational> v;
  for (const auto& c : coeffs) v.push_back(c(a11));
  return UPoly(std::move(v));
}

}  // namespace detail

// Inverse of forward_periods. a01 comes from d2; a02 is linear in the d3
// relation given a11; a03 is linear in the d4 relation given a11, a12. The
// d5 and d6 relations then involve only a11 and a12; their resultant in
// a12 is a univariate polynomial whose rational roots give a11, and the
// gcd of the two relations at each root gives a12. Every candidate is
// confirmed against all five relations.
inline CountingMatrix invert_periods(const PeriodVector& v, long deg) {
  if (discriminant(v).is_zero()) throw DegenerateLocus("period vector lies on the discriminant locus");

  static const std::vector<EntryPolynomial> f = detail::constant_term_relations();
  const auto cst = [](const Rational& c) { return EntryPolynomial::constant(c); };

  // d3 = a11 a01/18 + a02/27 and d4 = ... + a03/256: isolate the linear unknowns.
  const Rational a01 = Rational(4) * v.d(2);
  auto solve_linear = [&](const EntryPolynomial& rel, const Rational& target, Entry unknown) {
    EntryPolynomial slope = rel.coefficient_of(unknown, 1);
    if (rel.degree_in(unknown) != 1 || slope.size() != 1 || slope.terms().begin()->first != std::array<int, 5>{})
      throw InvalidInput(std::string("relation is not linear with constant slope in ") + entry_name(unknown));
    return Rational(1) / slope.terms().begin()->second * (cst(target) - rel.coefficient_of(unknown, 0));
  };

  EntryPolynomial f3 = f[1].substitute(Entry::a01, cst(a01));
  EntryPolynomial a02 = solve_linear(f3, v.d(3), Entry::a02);
  EntryPolynomial f4 = f[2].substitute(Entry::a01, cst(a01)).substitute(Entry::a02, a02);
  EntryPolynomial a03 = solve_linear(f4, v.d(4), Entry::a03);

  auto reduce = [&](const EntryPolynomial& rel, const Rational& target) {
    return rel.substitute(Entry::a01, cst(a01)).substitute(Entry::a02, a02).substitute(Entry::a03, a03) - cst(target);
  };
  auto e5 = detail::coefficients_in_a12(reduce(f[3], v.d(5)));
  auto e6 = detail::coefficients_in_a12(reduce(f[4], v.d(6)));

  UPoly res = detail::resultant(e5, e6);
  if (res.is_zero()) throw DegenerateLocus("elimination of a12 leaves no condition on a11");

  std::vector<CountingMatrix> solutions;
  for (const Rational& a11 : rational_roots(res)) {
    UPoly g5 = detail::specialize_a11(e5, a11);
    UPoly g6 = detail::specialize_a11(e6, a11);
    UPoly common = gcd(g5, g6);
    if (common.is_zero())
      throw AmbiguousSolution("a11 = " + a11.to_string() + " leaves a12 unconstrained");
    for (const Rational& a12 : rational_roots(common)) {
      EntryValues partial{};
      partial[static_cast<std::size_t>(Entry::a11)] = a11;
      partial[static_cast<std::size_t>(Entry::a12)] = a12;
      EntryValues values{a01, a11, a02.evaluate(partial), a12, a03.evaluate(partial)};
      CountingMatrix candidate(deg, values);
      if (forward_periods(candidate) == v) solutions.push_back(candidate);
    }
  }
  if (solutions.empty()) throw NoRationalSolution("no rational counting matrix has these periods");
  if (solutions.size() > 1)
    throw AmbiguousSolution(std::to_string(solutions.size()) + " counting matrices share these periods");
  return solutions.front();
}

}  // namespace fanogw
