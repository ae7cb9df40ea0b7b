#include <gtest/gtest.h>

#include "bigm1/poly.hpp"
#include "generators.hpp"

namespace bigm1 {
namespace {

using testing::Gen;

const LaurentPoly x = LaurentPoly::x();

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("3/-4"), ParseError);
}

TEST(Rational, RejectsMalformedInputWithPosition) {
  try {
    parse_rational("1/2x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("/3"), ParseError);
}

TEST(Rational, StringRoundTripIsExact) {
  Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const Rational r = make_rational(g.integer(-100000, 100000), g.integer(1, 99999)) * make_rational(g.integer(1, 1000000), 7);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Laurent, MultiplicationCancelsExponents) {
  EXPECT_EQ(LaurentPoly::monomial(-1) * x, LaurentPoly(1));
  const Rational c(1, 2);
  EXPECT_EQ((x + LaurentPoly(c)) * (x - LaurentPoly(c)), (LaurentPoly{{2, 1}, {0, Rational(-1, 4)}}));
  // g1(x) x = 2(x-1)(x+c) at c = 1/2.
  const LaurentPoly g1{{1, 2}, {0, -1}, {-1, -1}};
  EXPECT_EQ(g1 * x, (LaurentPoly{{2, 2}, {1, -1}, {0, -1}}));
}

TEST(Laurent, Derivative) {
  EXPECT_TRUE(derivative(LaurentPoly(5)).is_zero());
  EXPECT_EQ(derivative(LaurentPoly::monomial(-2)), LaurentPoly::monomial(-3, -2));
  EXPECT_EQ(derivative(LaurentPoly::monomial(3, Rational(1, 3))), LaurentPoly::monomial(2));
}

TEST(Laurent, Reflect) {
  EXPECT_EQ(reflect(x * x), x * x);
  const Rational c(1, 3);
  EXPECT_EQ(reflect(x + LaurentPoly(c)), LaurentPoly(c) - x);
}

TEST(Laurent, ZeroIsEmpty) {
  LaurentPoly p = x - x;
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, LaurentPoly{});
  EXPECT_EQ(to_string(p), "0");
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  Gen g(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.laurent(), b = g.laurent(), c = g.laurent();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(Laurent, ReflectIsRingAutomorphismAndInvolution) {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.laurent(), b = g.laurent();
    EXPECT_EQ(reflect(a * b), reflect(a) * reflect(b));
    EXPECT_EQ(reflect(a + b), reflect(a) + reflect(b));
    EXPECT_EQ(reflect(reflect(a)), a);
  }
}

TEST(Laurent, LeibnizRule) {
  Gen g(13);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.laurent(), b = g.laurent();
    EXPECT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
  }
}

TEST(Laurent, EvaluateRefusesPole) {
  EXPECT_EQ((x * x + LaurentPoly::monomial(-1)).evaluate(2), Rational(9, 2));
  EXPECT_THROW(LaurentPoly::monomial(-1).evaluate(0), DomainError);
}

TEST(Poly, FromLaurent) {
  EXPECT_EQ(poly_from_laurent(x * x + LaurentPoly(1)), (Poly{1, 0, 1}));
  EXPECT_THROW(poly_from_laurent(LaurentPoly::monomial(-1)), SingularResidue);
  EXPECT_TRUE(poly_from_laurent(LaurentPoly{}).is_zero());
  EXPECT_EQ(poly_from_laurent(LaurentPoly{}).degree(), -1);
}

TEST(Poly, TrimsLeadingZeros) {
  EXPECT_EQ((Poly{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Poly{0}, Poly{});
  EXPECT_EQ((Poly{1, 1} - Poly{1, 1}).degree(), -1);
}

TEST(Poly, DivisionReconstructsDividend) {
  Gen g(17);
  for (int i = 0; i < 200; ++i) {
    const Poly a = g.poly(8);
    Poly b = g.poly(4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(Poly{1}, Poly{}), DomainError);
}

TEST(Poly, LaurentEmbeddingIsRingHomomorphism) {
  Gen g(19);
  for (int i = 0; i < 200; ++i) {
    const Poly a = g.poly(), b = g.poly();
    EXPECT_EQ(to_laurent(a * b), to_laurent(a) * to_laurent(b));
    EXPECT_EQ(poly_from_laurent(to_laurent(a)), a);
  }
}

TEST(Poly, AntiderivativeAndEvaluation) {
  const Poly p{1, 2, 3};  // 1 + 2x + 3x^2
  EXPECT_EQ(antiderivative(p), (Poly{0, 1, 1, 1}));
  EXPECT_EQ(p(Rational(1, 2)), Rational(11, 4));
  EXPECT_DOUBLE_EQ(p.evaluate(0.5), 2.75);
}

}  // namespace
}  // namespace bigm1
