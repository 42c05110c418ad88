#include <gtest/gtest.h>

#include "fanogw/grassmann.hpp"

using namespace fanogw;

namespace {

Series S(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(Rational::parse(s));
  return Series(v);
}

}  // namespace

TEST(Grassmann, Geometry) {
  EXPECT_EQ(grassmannian_geometry({2, 5}), (GeometryInfo{6, 5, 5}));
  EXPECT_EQ(grassmannian_geometry({2, 6}), (GeometryInfo{8, 6, 14}));
  EXPECT_EQ(grassmannian_geometry({1, 5}), (GeometryInfo{4, 5, 1}));
  EXPECT_EQ(grassmannian_geometry({3, 6}).plucker_degree, 42);
  EXPECT_THROW(grassmannian_geometry({0, 4}), InvalidInput);
  EXPECT_THROW(grassmannian_geometry({4, 4}), InvalidInput);
}

TEST(Grassmann, Compositions) {
  auto c = compositions(3, 2);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.front(), (std::vector<int>{0, 3}));
  EXPECT_EQ(c.back(), (std::vector<int>{3, 0}));
  EXPECT_EQ(compositions(4, 3).size(), 15u);
}

TEST(Grassmann, ConstantTermsMatchClosedForm) {
  for (int n : {5, 6})
    for (int d = 0; d <= 6; ++d)
      EXPECT_EQ(hv_degree_part({2, n}, d, 2).constant_term(), closed_form_constant(n, d)) << "n=" << n << " d=" << d;
}

TEST(Grassmann, PrintedConstantTerms) {
  EXPECT_EQ(ambient_iseries({2, 5}, 4).c0, S({"1", "3", "19/32", "49/2592", "139/884736"}));
  EXPECT_EQ(ambient_iseries({2, 6}, 4).c0, S({"1", "4", "3/4", "95/5832", "865/11943936"}));
}

TEST(Grassmann, SignedLinearTerms) {
  EXPECT_EQ(ambient_iseries({2, 5}, 4).c1, S({"0", "-10", "-105/32", "-3115/23328", "-6875/5308416"}));
  EXPECT_EQ(ambient_iseries({2, 6}, 4).c1, S({"0", "-15", "-609/128", "-6197/46656", "-528737/764411904"}));
}

TEST(Grassmann, DegreeOnePartIsSymmetric) {
  ChernPolynomial p = hv_degree_part({2, 5}, 1, 2);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_EQ(p.linear_coefficient(0), Rational(-10));
  EXPECT_EQ(p.linear_coefficient(1), Rational(-10));
  EXPECT_EQ(p.degree_bound(), 2);
}

TEST(Grassmann, ThreePlanesGiveSymmetricParts) {
  // r = 3 exercises the Vandermonde division with more than one factor.
  auto parts = hv_iseries({3, 6}, 3, 1);
  auto pair = extract_h_pair(parts);
  EXPECT_EQ(pair.c0[0], Rational(1));
  for (const auto& p : parts) EXPECT_TRUE(p.is_symmetric());
}

TEST(Grassmann, ProjectiveSpace) {
  // P^4: sum_d q^d prod (H + i)^{-5}
  HSeriesPair p = ambient_iseries({1, 5}, 3);
  EXPECT_EQ(p.c0, S({"1", "1", "1/32", "1/7776"}));
  EXPECT_EQ(p.c1, S({"0", "-5", "-15/64", "-55/46656"}));
  EXPECT_THROW(hv_iseries({1, 5}, 3, 2), InvalidInput);
}

TEST(Grassmann, AsymmetricInputIsRejected) {
  ChernPolynomial p = ChernPolynomial::variable(2, 2, 0);
  EXPECT_THROW(extract_h_pair({p}), AsymmetricSeries);
}

TEST(Grassmann, HarmonicNumbers) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(4), Rational(25, 12));
  EXPECT_THROW(closed_form_constant(2, 1), InvalidInput);
}
