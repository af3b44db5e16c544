#include <gtest/gtest.h>

#include "logder/errors.hpp"
#include "support.hpp"

using namespace logder;
using namespace logder::test;

TEST(Parse, SumOfSquares) {
  const Polynomial p = P("x^2+y^2", kXY);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient({2, 0}), 1);
  EXPECT_EQ(p.coefficient({0, 2}), 1);
}

TEST(Parse, ZeroAndExpansion) {
  EXPECT_TRUE(P("0", kXY).is_zero());
  EXPECT_EQ(P("(x+y)^2 - x^2 - 2*x*y", kXY), P("y^2", kXY));
}

TEST(Parse, JuxtapositionAndConstantDivision) {
  EXPECT_EQ(P("2x y", kXY), P("2*x*y", kXY));
  EXPECT_EQ(P("x/2 + 3/4", kXY).coefficient({1, 0}), Rational(1, 2));
  EXPECT_THROW(P("x/y", kXY), ParseError);
  EXPECT_THROW(P("x/0", kXY), ParseError);
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("x+w", kXY), UnknownVariableError);
  EXPECT_THROW(P("x^", kXY), ParseError);
  EXPECT_THROW(P("(x+y", kXY), ParseError);
  EXPECT_THROW(P("x^-1", kXY), ParseError);
}

TEST(Parse, RoundTripProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 3, 6, 5);
    EXPECT_EQ(P(format_poly(p, kXYZ)), p) << format_poly(p, kXYZ);
  }
}

TEST(Ring, LawsProperty) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 4, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Degree, UDegree) {
  EXPECT_EQ(std::get<Degree>(u_degree(P("x^2+y^2", kXY), WeightVector::standard(2))), 2);
  EXPECT_EQ(std::get<Degree>(u_degree(P(kSixF), WeightVector({9, 8, 6}))), 24);
  const auto bad = u_degree(P(kSixF), WeightVector::standard(3));
  ASSERT_TRUE(std::holds_alternative<NotHomogeneous>(bad));
  EXPECT_THROW(u_degree(P("0"), WeightVector::standard(3)), ZeroPolynomialError);
  EXPECT_THROW(WeightVector({1, 0}), NonPositiveWeightsError);
}

TEST(Degree, InferWeights) {
  EXPECT_EQ(infer_weights(P(kSixF)), WeightVector({9, 8, 6}));
  EXPECT_EQ(infer_weights(P("x^2+y^2", kXY)), WeightVector({1, 1}));
  EXPECT_FALSE(infer_weights(P("x+x^2", {"x"})));
}

TEST(Degree, InferWeightsIsValidProperty) {
  Rng rng(13);
  std::uniform_int_distribution<Degree> w(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::vector<Degree> u = {w(rng), w(rng), w(rng)};
    const Polynomial p = random_homogeneous(rng, u, 12, 3);
    if (p.size() < 2) continue;
    const auto found = infer_weights(p);
    ASSERT_TRUE(found) << format_poly(p, kXYZ);
    EXPECT_TRUE(is_u_homogeneous(p, found->values()));
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(partial_derivative(P(kSixF), 2), P("x^2+4*z^3"));
  EXPECT_TRUE(partial_derivative(P("y^3"), 0).is_zero());
  EXPECT_EQ(partial_derivative(P("x^5"), 0), P("5*x^4"));
}

TEST(Derivative, LeibnizProperty) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ(partial_derivative(a * b, i), partial_derivative(a, i) * b + a * partial_derivative(b, i));
  }
}

TEST(Order, TotalAndMultiplicativeProperty) {
  Rng rng(15);
  const MonomialOrder order = MonomialOrder::graded({2, 1, 3}, {0});
  std::uniform_int_distribution<Exponent> e(0, 3);
  auto mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (int trial = 0; trial < 300; ++trial) {
    const Monomial a = mono(), b = mono(), c = mono();
    const auto ab = order.compare(a, 0, b, 0);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(order.compare(b, 0, a, 0), 0 <=> ab);
    EXPECT_EQ(order.compare(monomial_product(a, c), 0, monomial_product(b, c), 0), ab);
    if (order.less(a, b) && order.less(b, c)) EXPECT_TRUE(order.less(a, c));
    EXPECT_FALSE(order.less(monomial_product(a, c), a));
  }
}

TEST(Order, PositionBreaksTies) {
  const MonomialOrder order = MonomialOrder::graded({1, 1}, {0, 0});
  EXPECT_TRUE(order.compare({1, 0}, 0, {1, 0}, 1) > 0);
  const MonomialOrder shifted = MonomialOrder::graded({1, 1}, {0, 2});
  EXPECT_TRUE(shifted.compare({1, 0}, 0, {0, 0}, 1) < 0);
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(squarefree_test(P("x^2+y^2", kXY)).squarefree);
  const auto r = squarefree_test(P("x^2*y^3", kXY));
  EXPECT_FALSE(r.squarefree);
  EXPECT_TRUE(exact_quotient(r.witness, P("x*y^2", kXY)));
  EXPECT_TRUE(squarefree_test(P("x", kXY)).squarefree);
}

TEST(Gcd, DividesBothProperty) {
  Rng rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial g = random_poly(rng, 2, 3, 2);
    const Polynomial a = random_poly(rng, 2, 3, 2), b = random_poly(rng, 2, 3, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial d = poly_gcd(g * a, g * b);
    EXPECT_TRUE(exact_quotient(g * a, d));
    EXPECT_TRUE(exact_quotient(g * b, d));
    EXPECT_TRUE(exact_quotient(d, g)) << format_poly(d, kXY) << " vs " << format_poly(g, kXY);
  }
}
