#include <random>

#include <gtest/gtest.h>

#include "fanogw/lefschetz.hpp"
#include "fanogw/solver.hpp"

using namespace fanogw;

namespace {

CountingMatrix v10() { return {10, {Rational(156), Rational(10), Rational(3600), Rational(380), Rational(33120)}}; }
CountingMatrix v14() { return {14, {Rational(64), Rational(5), Rational(924), Rational(140), Rational(5936)}}; }

HSeriesPair variety_series(const CompleteIntersectionSpec& spec, int d_max) {
  return quantum_lefschetz(ambient_iseries(spec.ambient, d_max), spec, d_max);
}

}  // namespace

TEST(Solver, FullMatrixLayout) {
  auto m = v10().full();
  const long expected[4][4] = {{0, 156, 3600, 33120}, {1, 10, 380, 3600}, {0, 1, 10, 156}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m[i][j], Rational(expected[i][j])) << i << "," << j;
}

TEST(Solver, RecoversPublishedMatrices) {
  EXPECT_EQ(recover_matrix(variety_series({{2, 5}, {1, 1, 2}}, 4), 10), v10());
  EXPECT_EQ(recover_matrix(variety_series({{2, 6}, {1, 1, 1, 1, 1}}, 4), 14), v14());
  // Longer series add redundant equations at q^5 and q^6.
  EXPECT_EQ(recover_matrix(variety_series({{2, 5}, {1, 1, 2}}, 6), 10), v10());
}

TEST(Solver, PerturbedRedundantCoefficientIsCaught) {
  HSeriesPair y = variety_series({{2, 5}, {1, 1, 2}}, 4);
  y.c1[3] += Rational(1, 1000);
  try {
    recover_matrix(y, 10);
    FAIL() << "expected ConsistencyCheckFailed";
  } catch (const ConsistencyCheckFailed& e) {
    EXPECT_NE(std::string(e.what()).find("c1[3]"), std::string::npos);
  }
  HSeriesPair short_series = variety_series({{2, 5}, {1, 1, 2}}, 3);
  EXPECT_THROW(recover_matrix(short_series, 10), InvalidInput);
}

TEST(Solver, ForwardPeriods) {
  PeriodVector v = forward_periods(v10());
  EXPECT_EQ(v.d(2), Rational(39));
  EXPECT_EQ(v.d(3), Rational(220));
  EXPECT_EQ(v.d(4), Rational(6291, 4));
  EXPECT_EQ(v.d(5), Rational(8766));
  EXPECT_EQ(v.d(6), Rational(524413, 12));
  EXPECT_EQ(forward_periods(v14()).d(3), Rational(52));
}

TEST(Solver, Discriminant) {
  EXPECT_EQ(discriminant(forward_periods(v10())), Rational(-10182375));
  EXPECT_EQ(discriminant(forward_periods(v14())), Rational(-221200));
  EXPECT_THROW(invert_periods(PeriodVector{}, 10), DegenerateLocus);
}

TEST(Solver, InvertsPublishedPeriods) {
  EXPECT_EQ(invert_periods(forward_periods(v10()), 10), v10());
  EXPECT_EQ(invert_periods(forward_periods(v14()), 14), v14());
}

TEST(Solver, RoundtripOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 9);
  int tested = 0;
  while (tested < 120) {
    EntryValues e;
    for (auto& x : e) x = Rational(num(rng), den(rng));
    CountingMatrix m(10, e);
    PeriodVector v = forward_periods(m);
    if (discriminant(v).is_zero()) continue;
    ASSERT_EQ(invert_periods(v, 10), m) << "sample " << tested;
    ++tested;
  }
}

TEST(Solver, GenericPeriodVectorsAreHit) {
  // Off the discriminant every period vector has a rational preimage.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-100, 100);
  for (int i = 0; i < 20; ++i) {
    PeriodVector v;
    for (auto& x : v.values) x = Rational(num(rng), 3);
    if (discriminant(v).is_zero()) continue;
    EXPECT_EQ(forward_periods(invert_periods(v, 22)), v);
  }
}
