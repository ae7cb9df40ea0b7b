#include <gtest/gtest.h>

#include <thread>

#include "bigm1/big_jacobi.hpp"
#include "bigm1/sampling.hpp"

namespace bigm1 {
namespace {

const Rational half(1, 2);
const Params p111{1, 1, half};

Poly applied(const DunklOperator& op, const Poly& f) { return poly_from_laurent(apply(op, to_laurent(f))); }

// Hankel determinant by fraction-free elimination over the rationals.
Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Monic orthogonal polynomials by Gram-Schmidt against exact moments; does
// not touch the closed-form recurrence coefficients.
std::vector<Poly> gram_schmidt(unsigned nmax, const Params& p) {
  std::vector<Poly> out;
  for (unsigned n = 0; n <= nmax; ++n) {
    Poly q = Poly::monomial(n);
    for (const Poly& prev : out) q -= prev * (inner_product(q, prev, p) / inner_product(prev, prev, p));
    out.push_back(q);
  }
  return out;
}

TEST(BuildL, TermTable) {
  const DunklOperator L = build_L(p111);
  EXPECT_EQ(L.coeff({0, 1}), g0(p111));
  EXPECT_EQ(L.coeff({0, 0}), -g0(p111));
  EXPECT_EQ(L.coeff({1, 1}), g1(p111));
  EXPECT_EQ(L.terms().size(), 3u);
}

TEST(BuildL, ActionOnLowBasis) {
  const DunklOperator L = build_L(p111);
  EXPECT_TRUE(apply(L, LaurentPoly(1)).is_zero());
  // L Phi_1 = -8(x + 1/2) + 6.
  EXPECT_EQ(applied(L, phi_basis(1, half)), (Poly{2, -8}));
}

TEST(BuildL, LittleLimitDropsInverseSquare) {
  const Params little{Rational(5, 2), 3, 0};
  EXPECT_EQ(g0(little).coeff(-2), 0);
  EXPECT_EQ(g0(little), (LaurentPoly{{0, Rational(13, 2)}, {-1, -3}}));
}

TEST(Eigenvalues, LambdaAndMu) {
  EXPECT_EQ(lambda_n(0, p111), 0);
  EXPECT_EQ(lambda_n(2, p111), 4);
  EXPECT_EQ(lambda_n(1, p111), -8);
  EXPECT_EQ(lambda_n(3, p111), -12);
  EXPECT_EQ(mu_n(0, p111), Rational(3, 2));
  EXPECT_EQ(mu_n(1, p111), Rational(-5, 2));
  ParamSampler s(99);
  for (int i = 0; i < 20; ++i) {
    const Params p = s.next();
    for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(mu_n(n, p), (lambda_n(n, p) + p.sum() + 1) / 2);
  }
}

TEST(PhiBasis, Values) {
  EXPECT_EQ(phi_basis(0, half), Poly{1});
  EXPECT_EQ(phi_basis(1, half), (Poly{half, 1}));
  EXPECT_EQ(phi_basis(2, half), (Poly{Rational(-1, 4), 0, 1}));
  for (unsigned n = 0; n < 12; ++n) {
    EXPECT_TRUE(phi_basis(n, Rational(2, 7)).is_monic());
    EXPECT_EQ(phi_basis(n, Rational(2, 7)).degree(), static_cast<int>(n));
  }
}

TEST(EtaN, Values) {
  EXPECT_EQ(eta_n(0, p111), 0);
  EXPECT_EQ(eta_n(1, p111), 6);
  EXPECT_EQ(eta_n(2, p111), -2);
}

TEST(RecurrenceCoefficients, Values) {
  EXPECT_EQ(b_coeff(0, p111), Rational(1, 4));
  EXPECT_EQ(u_coeff(1, p111), Rational(9, 16));
  EXPECT_EQ(u_coeff(2, p111), Rational(1, 18));
}

TEST(RecurrenceCoefficients, DegenerateDenominators) {
  const Params bad{-1, -1, half};  // a + b + 2 = 0
  EXPECT_THROW(b_coeff(0, bad), DegenerateParams);
  const Params bad2{Rational(-3), Rational(1), half};  // a + b + 2n = 0 at n = 1
  EXPECT_THROW(u_coeff(1, bad2), DegenerateParams);
  EXPECT_THROW((void)MonicPolySeq{bad}[3], DegenerateParams);
  // a + b = 0 only touches the n-weighted term of b_0, which is zero.
  const Params edge{-1, 1, half};
  EXPECT_EQ(b_coeff(0, edge), -half + Rational(3, 2) * 2 / 2);
}

TEST(MonicPolySeq, LowDegrees) {
  const MonicPolySeq seq(p111);
  EXPECT_EQ(seq[0], Poly{1});
  EXPECT_EQ(seq[1], (Poly{Rational(-1, 4), 1}));
  EXPECT_EQ(seq[2], (Poly{Rational(-7, 12), Rational(-1, 6), 1}));
  EXPECT_EQ(seq[3], (Poly{Rational(1, 16), Rational(-5, 8), Rational(-1, 4), 1}));
  EXPECT_EQ(applied(build_L(p111), seq[3]), seq[3] * Rational(-12));
}

TEST(MonicPolySeq, EigenfunctionsAtRandomParams) {
  ParamSampler s(2024);
  for (int i = 0; i < 10; ++i) {
    const Params p = s.next();
    const MonicPolySeq seq(p);
    const DunklOperator L = build_L(p);
    for (unsigned n = 0; n <= 12; ++n) {
      ASSERT_TRUE(seq[n].is_monic());
      ASSERT_EQ(seq[n].degree(), static_cast<int>(n));
      EXPECT_EQ(applied(L, seq[n]), seq[n] * lambda_n(n, p)) << to_string(p) << " n=" << n;
    }
  }
}

TEST(MonicPolySeq, EigenfunctionsAtSumZero) {
  // The raising target of (1,1) is (-1,1); b_0 is still defined there.
  const Params p{-1, 1, Rational(1, 3)};
  const MonicPolySeq seq(p);
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(applied(build_L(p), seq[n]), seq[n] * lambda_n(n, p));
}

TEST(MonicPolySeq, ConcurrentReadersSeeSamePrefix) {
  const MonicPolySeq seq(Params{Rational(3, 2), Rational(5, 3), Rational(1, 5)});
  std::vector<std::thread> threads;
  std::vector<Poly> results(8);
  for (unsigned t = 0; t < 8; ++t) threads.emplace_back([&, t] { results[t] = seq[10 + t % 3]; });
  for (auto& th : threads) th.join();
  for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(results[t], seq[10 + t % 3]);
}

TEST(BasisAction, TwoDiagonal) {
  for (const Params& p : {p111, Params{Rational(2, 3), Rational(5, 7), Rational(1, 3)}, Params{2, 3, 0}}) {
    const DunklOperator L = build_L(p);
    for (unsigned n = 0; n <= 20; ++n) {
      Poly expected = phi_basis(n, p.c) * lambda_n(n, p);
      if (n > 0) expected += phi_basis(n - 1, p.c) * eta_n(n, p);
      EXPECT_EQ(applied(L, phi_basis(n, p.c)), expected);
    }
  }
}

TEST(Weight, PolynomialPart) {
  EXPECT_EQ(weight_poly_part(p111), (Poly{-half, half, 1}));
  EXPECT_EQ(weight_poly_part(Params{3, 1, half}), (Poly{1, 1} * Poly{-half, 1} * Poly{1, 0, -1}));
  EXPECT_THROW(weight_poly_part(Params{2, 1, half}), NotPolynomialRegime);
  EXPECT_THROW(weight_poly_part(Params{-1, 1, half}), NotPolynomialRegime);
}

TEST(Weight, ExactMomentsMatchIntegrationOracle) {
  // Frozen from symbolic integration over both intervals.
  const std::vector<Rational> m11{Rational(3, 8), Rational(3, 32), Rational(15, 64),
                                  Rational(3, 32), Rational(21, 128), Rational(87, 1024)};
  EXPECT_EQ(exact_moments(5, p111), m11);
  EXPECT_EQ(exact_moments(3, Params{3, 1, half}),
            (std::vector<Rational>{Rational(9, 64), 0, Rational(9, 128), Rational(9, 1024)}));
  EXPECT_EQ(exact_moments(3, Params{3, 3, Rational(1, 4)}),
            (std::vector<Rational>{Rational(3375, 32768), Rational(10125, 262144), Rational(57375, 1048576),
                                   Rational(111375, 4194304)}));
  EXPECT_EQ(exact_moment(1, p111), b_coeff(0, p111) * exact_moment(0, p111));
  EXPECT_THROW(exact_moment(0, Params{1, 1, 0}), DomainError);
}

TEST(Weight, HankelDeterminantsPositive) {
  for (const Params& p : {p111, Params{3, 1, half}, Params{1, 3, Rational(1, 4)}, Params{3, 3, Rational(1, 4)}}) {
    const auto m = exact_moments(16, p);
    for (std::size_t k = 1; k <= 9; ++k) {
      std::vector<std::vector<Rational>> h(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) h[i][j] = m[i + j];
      EXPECT_GT(determinant(h), 0) << to_string(p) << " k=" << k;
    }
  }
}

TEST(InnerProduct, LowDegreeValues) {
  const MonicPolySeq seq(p111);
  EXPECT_EQ(inner_product(seq[0], seq[1], p111), 0);
  EXPECT_EQ(inner_product(seq[0], seq[0], p111), Rational(3, 8));
  EXPECT_EQ(inner_product(seq[1], seq[1], p111), Rational(27, 128));
}

TEST(InnerProduct, GramSchmidtReproducesRecurrence) {
  for (const Params& p : {p111, Params{3, 1, Rational(1, 4)}, Params{1, 3, half}}) {
    const auto gs = gram_schmidt(8, p);
    const MonicPolySeq seq(p);
    for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(gs[n], seq[n]) << to_string(p) << " n=" << n;
  }
}

TEST(InnerProduct, OrthogonalityAndNormRecursion) {
  for (const Params& p : {p111, Params{3, 3, Rational(1, 4)}}) {
    const MonicPolySeq seq(p);
    const auto h = norms(10, p);
    for (unsigned n = 0; n <= 10; ++n) {
      for (unsigned m = 0; m < n; ++m) EXPECT_EQ(inner_product(seq[n], seq[m], p), 0);
      EXPECT_EQ(inner_product(seq[n], seq[n], p), h[n]);
      EXPECT_GT(h[n], 0);
    }
  }
}

TEST(Positivity, UnPositiveInsideWindow) {
  ParamSampler s(5);
  int tested = 0;
  while (tested < 40) {
    Params p = s.next();
    p.alpha = abs(p.alpha) - Rational(9, 10);
    p.beta = abs(p.beta) - Rational(9, 10);
    p.c = abs(p.c) / 3;
    if (!p.in_positivity_window()) continue;
    ++tested;
    for (unsigned n = 1; n <= 30; ++n) EXPECT_GT(u_coeff(n, p), 0) << to_string(p);
  }
}

TEST(WeightEval, Values) {
  const RealParams r{1, 1, 0.5};
  EXPECT_DOUBLE_EQ(weight_eval(0.75, r), 0.4375);
  EXPECT_DOUBLE_EQ(weight_eval(-0.75, r), 0.3125);
  EXPECT_THROW(weight_eval(0.2, r), DomainError);
  EXPECT_THROW(weight_eval(1.0, r), DomainError);
  const RealParams s{0.5, -0.5, 0.3};
  for (double x : {-0.99, -0.5, -0.31, 0.31, 0.6, 0.99}) EXPECT_GT(weight_eval(x, s), 0.0);
}

}  // namespace
}  // namespace bigm1
