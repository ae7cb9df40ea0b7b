#include <gtest/gtest.h>

#include "bigm1/big_jacobi.hpp"
#include "bigm1/jordan.hpp"
#include "generators.hpp"

namespace bigm1 {
namespace {

using testing::Gen;

const LaurentPoly x = LaurentPoly::x();
const DunklOperator I = DunklOperator::identity();
const DunklOperator R = DunklOperator::reflection();
const DunklOperator D = DunklOperator::d_dx();
const Params p111{1, 1, Rational(1, 2)};

TEST(DunklOperator, ApplyReflection) {
  const Rational c(1, 2);
  EXPECT_EQ(apply(R, x + LaurentPoly(c)), LaurentPoly(c) - x);
}

TEST(DunklOperator, ApplyDerivativeAfterReflection) {
  // (d/dx R) f = d/dx [f(-x)]; for f = x^2 this is 2x.
  EXPECT_EQ(apply(D * R, x * x), Rational(2) * x);
  EXPECT_EQ(apply(D * R, x * x * x), Rational(-3) * x * x);
  EXPECT_EQ(apply(R * D, x * x), Rational(-2) * x);
}

TEST(DunklOperator, LKillsConstants) {
  EXPECT_TRUE(apply(build_L(p111), LaurentPoly(1)).is_zero());
}

TEST(DunklOperator, ComposeNormalForms) {
  EXPECT_EQ(R * R, I);
  EXPECT_EQ(D * DunklOperator::multiply(x), I + DunklOperator::term(x, 1, 0));
  EXPECT_EQ(R * DunklOperator::multiply(x), DunklOperator::term(-x, 0, 1));
  EXPECT_EQ(R * D, -(D * R));
}

TEST(DunklOperator, Anticommutator) {
  Gen g(3);
  const DunklOperator b = g.op();
  EXPECT_EQ(anticommutator(I, b), b * Rational(2));
  EXPECT_TRUE(anticommutator(R, D).is_zero());
  const auto [X, Y, Z] = build_xyz(p111);
  EXPECT_EQ(anticommutator(X, Y) - Z, DunklOperator(1));
}

TEST(DunklOperator, Equality) {
  EXPECT_TRUE(op_equal(I, R * R));
  EXPECT_FALSE(op_equal(D * DunklOperator::multiply(x), DunklOperator::term(x, 1, 0)));
  EXPECT_TRUE(op_equal(casimir(p111), DunklOperator(5)));
}

TEST(DunklOperator, CompositionIsAssociative) {
  Gen g(5);
  for (int i = 0; i < 150; ++i) {
    const auto a = g.op(), b = g.op(), c = g.op();
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(DunklOperator, ApplyIsHomomorphism) {
  Gen g(9);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.op(), b = g.op();
    const auto f = g.laurent(-3, 6, 5);
    EXPECT_EQ(apply(a * b, f), apply(a, apply(b, f)));
  }
}

TEST(DunklOperator, GradingIsConsistent) {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto t1 = g.laurent(-2, 2, 2), t2 = g.laurent(-2, 2, 2);
    const unsigned d1 = static_cast<unsigned>(g.integer(0, 3)), d2 = static_cast<unsigned>(g.integer(0, 3));
    const unsigned e1 = static_cast<unsigned>(g.integer(0, 1)), e2 = static_cast<unsigned>(g.integer(0, 1));
    const auto prod = DunklOperator::term(t1, d1, e1) * DunklOperator::term(t2, d2, e2);
    for (const auto& [grade, coeff] : prod.terms()) {
      EXPECT_EQ(grade.reflection, e1 ^ e2);
      EXPECT_LE(grade.order, d1 + d2);
    }
  }
}

TEST(DunklOperator, JsonRoundTrip) {
  Gen g(23);
  for (int i = 0; i < 50; ++i) {
    const auto op = g.op(3);
    EXPECT_EQ(operator_from_json(nlohmann::json::parse(to_json(op).dump())), op);
  }
  const auto j = to_json(build_L(p111));
  EXPECT_EQ(j["1,1"]["-1"], "-1");
  EXPECT_EQ(j["0,0"]["-2"], "-1/2");
}

TEST(DunklOperator, JsonRejectsBadKeys) {
  EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"1":{"0":"1"}})")), ParseError);
  EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"1,2":{"0":"1"}})")), ParseError);
  EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"0,0":{"0":"1/0"}})")), ParseError);
}

}  // namespace
}  // namespace bigm1
