#include <gtest/gtest.h>

#include "fanogw/relations.hpp"

using namespace fanogw;

namespace {

const EntryPolynomial a01 = EntryPolynomial::variable(Entry::a01);
const EntryPolynomial a11 = EntryPolynomial::variable(Entry::a11);
const EntryPolynomial a02 = EntryPolynomial::variable(Entry::a02);
const EntryPolynomial a12 = EntryPolynomial::variable(Entry::a12);
const EntryPolynomial a03 = EntryPolynomial::variable(Entry::a03);

Rational R(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST(Relations, PrimeSymbols) {
  EXPECT_EQ(two_point_symbol(3, 1, 2), R(1, 2) * a01);
  EXPECT_EQ(two_point_symbol(2, 1, 1), a11);
  EXPECT_EQ(two_point_symbol(1, 2, 1), a11);  // a_22 = a_11
  EXPECT_TRUE(two_point_symbol(3, 1, 1).is_zero());
  EXPECT_EQ(two_point_symbol(3, 3, 4), Rational(1, 4) * a03);
  EXPECT_TRUE(two_point_symbol(3, 0, 1).is_zero());  // a_00
}

TEST(Relations, UnitComponentExpressions) {
  EXPECT_EQ(one_point_relation(0, 3, 2), R(1, 4) * a01);
  EXPECT_EQ(one_point_relation(1, 3, 3), R(1, 18) * a11 * a01 + R(1, 27) * a02);
  EXPECT_EQ(one_point_relation(2, 3, 4), R(1, 64) * a01 * a01 + R(1, 96) * a11 * a11 * a01 +
                                             R(7, 576) * a11 * a02 + R(1, 128) * a01 * a12 + R(1, 256) * a03);
}

TEST(Relations, HyperplaneComponentExpressions) {
  EXPECT_EQ(one_point_relation(0, 2, 1), a11);
  EXPECT_EQ(one_point_relation(1, 2, 2), R(1, 4) * a11 * a11 + R(1, 8) * a12 - R(1, 4) * a01);
  EXPECT_EQ(one_point_relation(2, 2, 3), R(5, 108) * a11 * a01 + R(1, 18) * a11 * a11 * a11 +
                                             R(1, 12) * a11 * a12 - R(2, 81) * a02);
  EXPECT_EQ(one_point_relation(3, 2, 4), R(13, 576) * a11 * a11 * a01 + R(17, 1728) * a11 * a02 -
                                             R(1, 256) * a03 - R(3, 128) * a01 * a01 +
                                             R(1, 96) * a11 * a11 * a11 * a11 + R(1, 256) * a12 * a12 +
                                             R(1, 32) * a11 * a11 * a12);
}

TEST(Relations, DegreeFiveUnitComponent) {
  EXPECT_EQ(one_point_relation(3, 3, 5), R(17, 3600) * a01 * a01 * a11 + R(13, 2700) * a01 * a02 +
                                             R(1, 600) * a01 * a11 * a11 * a11 + R(43, 12000) * a01 * a11 * a12 +
                                             R(47, 18000) * a02 * a11 * a11 + R(1, 1125) * a02 * a12 +
                                             R(9, 8000) * a03 * a11);
}

TEST(Relations, WeightEqualsCurveDegree) {
  RelationEngine engine;
  auto series = engine.symbolic_iseries(7);
  for (int d = 1; d <= 7; ++d)
    for (const EntryPolynomial* p : {&series[static_cast<std::size_t>(d)].first, &series[static_cast<std::size_t>(d)].second})
      for (const auto& [m, c] : p->terms()) EXPECT_EQ(EntryPolynomial::weight(m), d) << "degree " << d;
}

TEST(Relations, GateViolations) {
  EXPECT_THROW(one_point_relation(1, 3, 2), GateViolation);
  EXPECT_THROW(one_point_relation(-1, 4, 2), GateViolation);
  RelationEngine engine;
  EXPECT_TRUE(engine.evaluate(InvariantKey::one_point(1, 3, 2)).is_zero());
  EXPECT_EQ(engine.evaluate(InvariantKey::one_point(2, 3, 4)), one_point_relation(2, 3, 4));
  EXPECT_EQ(engine.evaluate(InvariantKey::two_point(2, 0, 1, 1)), a11);
  EXPECT_EQ(InvariantKey::two_point(1, 2, 3, 4).to_string(), "<H, tau_2 H^3>_4");
}

TEST(Relations, DisablingTheGateChangesTheRelations) {
  // Negative control: without the dimension constraint spurious splittings
  // enter and the known expressions are no longer reproduced.
  RelationEngine loose(EngineOptions{false});
  EXPECT_NE(loose.one_point(1, 3, 3), R(1, 18) * a11 * a01 + R(1, 27) * a02);
  EXPECT_NE(loose.one_point(2, 3, 4), one_point_relation(2, 3, 4));
}

TEST(Relations, MemoizationIsReused) {
  RelationEngine engine;
  engine.symbolic_iseries(6);
  const std::size_t size = engine.memo_size();
  engine.symbolic_iseries(6);
  EXPECT_EQ(engine.memo_size(), size);
  EXPECT_THROW(symbolic_iseries(0), InvalidInput);
}
