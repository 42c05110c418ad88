#include <random>

#include <gtest/gtest.h>

#include "fanogw/d3.hpp"

using namespace fanogw;

namespace {

using Op = DifferentialOperator;

const Op D = Op::D();
const Op t = Op::t();
Op c(long v) { return Op::constant(Rational(v)); }

CountingMatrix v10() { return {10, {Rational(156), Rational(10), Rational(3600), Rational(380), Rational(33120)}}; }
CountingMatrix v14() { return {14, {Rational(64), Rational(5), Rational(924), Rational(140), Rational(5936)}}; }

Series S(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.push_back(Rational(x));
  return Series(v);
}

Op random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 2);
  std::vector<UPoly> coeffs;
  for (int i = 0, n = deg(rng); i <= n; ++i) {
    std::vector<Rational> p;
    for (int k = 0, m = deg(rng); k <= m; ++k) p.push_back(Rational(coef(rng)));
    coeffs.emplace_back(p);
  }
  return Op(coeffs);
}

// Reference determinant by Gaussian elimination over Q.
Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace

TEST(Weyl, CommutationRelation) {
  EXPECT_EQ(D * t - t * D, t);
  EXPECT_EQ(D * t, t * (D + c(1)));
  EXPECT_EQ((D * t) * (D * t), t * t * (D + c(1)) * (D + c(2)));
}

TEST(Weyl, PowersOfDt) {
  for (int m = 0; m <= 6; ++m) {
    Op expected = c(1);
    for (int i = 0; i < m; ++i) expected = expected * t;
    for (int i = m; i >= 1; --i) expected = expected * (D + c(i));
    EXPECT_EQ(Op::dt_power(m), expected) << "m=" << m;
  }
}

TEST(Weyl, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Op a = random_op(rng), b = random_op(rng), e = random_op(rng);
    EXPECT_EQ((a * b) * e, a * (b * e));
    EXPECT_EQ(a * (b + e), a * b + a * e);
  }
}

TEST(Weyl, ApplicationMatchesComposition) {
  std::mt19937_64 rng(19);
  Series phi(8);
  for (std::size_t m = 0; m < 8; ++m) phi[m] = Rational(static_cast<long>(m * m) - 3, static_cast<long>(m) + 1);
  for (int i = 0; i < 20; ++i) {
    Op a = random_op(rng), b = random_op(rng);
    EXPECT_EQ(apply_operator(a * b, phi), apply_operator(a, apply_operator(b, phi)));
  }
}

TEST(Pencil, Entries) {
  OperatorMatrix m = build_pencil(v10(), Rational(0));
  EXPECT_EQ(m[0][0], D);
  EXPECT_EQ(m[0][1], Rational(-156) * Op::dt_power(2));
  EXPECT_EQ(m[2][1], c(-1));
  EXPECT_TRUE(m[3][0].is_zero());
  EXPECT_EQ(m[1][1], D - Rational(10) * Op::dt_power(1));
  OperatorMatrix shifted = build_pencil(v10(), Rational(6));
  EXPECT_EQ(shifted[0][0], D - Rational(6) * Op::dt_power(1));
  EXPECT_EQ(shifted[3][3], D - Rational(6) * Op::dt_power(1));
}

TEST(RightDeterminant, TwoByTwoByHand) {
  const Rational k(7);
  OperatorMatrix m{{D, -(k * Op::dt_power(1))}, {c(-1), D}};
  // -( (-1) * (-k (Dt)) ) + D * D
  EXPECT_EQ(right_determinant(m), D * D - k * t * (D + c(1)));
}

TEST(RightDeterminant, IsRightHanded) {
  // With non-commuting entries the column entry must sit on the right.
  OperatorMatrix m{{c(1), t}, {c(0), D}};
  EXPECT_EQ(right_determinant(m), D);
  OperatorMatrix n{{D, c(0)}, {c(1), t}};
  EXPECT_EQ(right_determinant(n), D * t);
  EXPECT_NE(D * t, t * D);
}

TEST(RightDeterminant, AgreesWithScalarDeterminant) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-9, 9), size(1, 5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(i < 50 ? 4 : size(rng));
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    OperatorMatrix m(n, std::vector<Op>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] = Rational(coef(rng), 1 + (coef(rng) + 9) % 3);
        m[r][k] = Op::constant(a[r][k]);
      }
    EXPECT_EQ(right_determinant(m), Op::constant(gauss_det(a)));
  }
}

TEST(LeftDivision, Examples) {
  EXPECT_EQ(left_divide_by_D(D * D * D * D), D * D * D);
  EXPECT_EQ(left_divide_by_D(D * t * (D + c(1))), t * (D + c(1)));
  EXPECT_THROW(left_divide_by_D(t), NotLeftDivisible);
  EXPECT_THROW(left_divide_by_D(D * D + c(1)), NotLeftDivisible);
}

TEST(LeftDivision, RandomProducts) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    Op l = random_op(rng);
    EXPECT_EQ(left_divide_by_D(D * l), l);
  }
}

TEST(D3, StructuralProperties) {
  for (auto [m, alpha] : {std::pair{v10(), Rational(6)}, std::pair{v14(), Rational(4)}})
    for (const Rational& lambda : {Rational(0), alpha, -alpha}) {
      Op full = right_determinant(build_pencil(m, lambda));
      EXPECT_EQ(full.order(), 4);
      EXPECT_EQ(full.indicial_polynomial(), UPoly::monomial(4, Rational(1)));
      Op L = left_divide_by_D(full);
      EXPECT_EQ(D * L, full);
      EXPECT_EQ(L.order(), 3);
      EXPECT_EQ(L.indicial_polynomial(), UPoly::monomial(3, Rational(1)));
      Series phi = frobenius_solve(L, 8);
      EXPECT_EQ(phi[0], Rational(1));
      EXPECT_EQ(apply_operator(L, phi), Series(8));
    }
}

TEST(D3, FrozenSolutions) {
  EXPECT_EQ(frobenius_solve(d3_operator(v10(), Rational(0)), 10),
            S({1, 0, 78, 1320, 37746, 1051920, 31464780, 971757360, 30859805970, 1000739433120}));
  EXPECT_EQ(frobenius_solve(d3_operator(v10(), Rational(6)), 8), S({1, 6, 114, 2940, 87570, 2835756, 96982116, 3446781624}));
  EXPECT_EQ(frobenius_solve(d3_operator(v10(), Rational(-6)), 8), S({1, -6, 114, -300, 24210, 218484, 9839076, 206986536}));
  EXPECT_EQ(frobenius_solve(d3_operator(v14(), Rational(0)), 8), S({1, 0, 32, 312, 5520, 91680, 1651640, 30604560}));
  EXPECT_EQ(frobenius_solve(d3_operator(v14(), Rational(4)), 8), S({1, 4, 48, 760, 13840, 273504, 5703096, 123519792}));
  EXPECT_EQ(frobenius_solve(d3_operator(v14(), Rational(-4)), 8), S({1, -4, 48, -136, 3856, 9696, 503736, 4889328}));
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_solve(D * D * D, 6), S({1, 0, 0, 0, 0, 0}));
  Op geometric = D * D * D - t * (D + c(1)) * (D + c(1)) * (D + c(1));
  EXPECT_EQ(frobenius_solve(geometric, 6), S({1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(frobenius_solve(D * (D - c(1)), 4), ObstructedRecursion);
  EXPECT_THROW(frobenius_solve(D + c(1), 4), ObstructedRecursion);
}

TEST(Eisenstein, Coefficients) {
  Series e2 = eisenstein_e2(6);
  EXPECT_EQ(e2, S({1, -24, -72, -96, -168, -144}));
  EXPECT_EQ(eisenstein_weight2(5, 8), S({1, 6, 18, 24, 42, 6, 72, 48}));
  EXPECT_THROW(eisenstein_weight2(1, 5), InvalidLevel);
}

TEST(Eisenstein, DivisorSumOracle) {
  for (long N : {2L, 3L, 5L, 7L, 11L}) {
    Series phi = eisenstein_weight2(N, 30);
    for (long m = 1; m < 30; ++m) {
      long sigma = 0, sigma_n = 0;
      for (long k = 1; k <= m; ++k) {
        if (m % k == 0) sigma += k;
        if (m % N == 0 && (m / N) % k == 0) sigma_n += k;
      }
      EXPECT_EQ(phi[static_cast<std::size_t>(m)], Rational(24 * (sigma - N * sigma_n), N - 1)) << N << " " << m;
    }
  }
}

TEST(Modularity, ReportShape) {
  ModularityReport r = modularity_report(v10(), Rational(6), 8);
  EXPECT_EQ(r.level, 5);
  EXPECT_EQ(r.rows.size(), 12u);
  EXPECT_EQ(r.eisenstein, eisenstein_weight2(5, 8));
  // The untwisted period transform matches the lambda = 0 solution.
  EXPECT_EQ(r.rows[1].candidate, "period");
  EXPECT_FALSE(r.rows[1].first_mismatch.has_value());
  EXPECT_EQ(r.rows[0].first_mismatch, std::optional<std::size_t>(1));
  EXPECT_EQ(modularity_report(v14(), Rational(4), 8).level, 7);
  EXPECT_THROW(modularity_report(CountingMatrix(9, v10().entries()), Rational(6), 8), InvalidLevel);
}
