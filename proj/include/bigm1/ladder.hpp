#ifndef BIGM1_LADDER_HPP
#define BIGM1_LADDER_HPP

#include <span>
#include <vector>

#include "bigm1/jordan.hpp"

namespace bigm1 {

/// Lowering operator D = A(x)(I - R) + B(x) d/dx + C(x) d/dx R. It maps
/// P_n^{(a,b)} to a multiple of P_{n-1}^{(a+2,b)} and Phi_n to nu_n Phi_{n-1}.
inline DunklOperator build_lowering(const Params& p) {
  const Rational& c = p.c;
  const LaurentPoly A{{-3, c * c}, {-2, -c * (c - 1) / 2}, {-1, p.beta * (c + 1) / 2}};
  const LaurentPoly B = LaurentPoly{{2, 1}, {0, -c * c}} * LaurentPoly::monomial(-2);
  const LaurentPoly C = Rational(c) * LaurentPoly{{1, 1}, {0, c}} * LaurentPoly{{0, 1}, {1, -1}} *
                        LaurentPoly::monomial(-2);
  DunklOperator op;
  op.add_term({0, 0}, A);
  op.add_term({0, 1}, -A);
  op.add_term({1, 0}, B);
  op.add_term({1, 1}, C);
  return op;
}

/// d/dx + (b/2x)(I - R), the value of the lowering operator at c = 0.
inline DunklOperator dunkl_operator(const Rational& beta) {
  const LaurentPoly k = LaurentPoly::monomial(-1, beta / 2);
  return DunklOperator::d_dx() + DunklOperator::term(k, 0, 0) - DunklOperator::term(k, 0, 1);
}

/// (1-c)n for even n, (c+1)(b+n) for odd n.
inline Rational nu_n(unsigned n, const Params& p) {
  if (n % 2 == 0) return (1 - p.c) * n;
  return (p.c + 1) * (p.beta + n);
}

/// 2(c-1)(a+b+n) for even n, -2(c+1)(a+n) for odd n.
inline Rational kappa_n(unsigned n, const Params& p) {
  if (n % 2 == 0) return 2 * (p.c - 1) * (p.sum() + n);
  return -2 * (p.c + 1) * (p.alpha + n);
}

/// L^{(a+2,b,c)} D + D L^{(a,b,c)} + 2(a+b+2) D; the zero operator.
inline DunklOperator check_lowering_intertwiner(const Params& p) {
  const DunklOperator D = build_lowering(p);
  return build_L(p.with_alpha_shift(2)) * D + D * build_L(p) + Rational(2 * (p.sum() + 2)) * D;
}

/// Eigenvalue of L^{(a+2,b,c)} on D psi when L^{(a,b,c)} psi = lambda_n psi.
inline Rational shifted_lambda(unsigned n, const Params& p) { return -lambda_n(n, p) - 2 * (p.sum() + 2); }

/// Raising operator S1 I + S2 R + T1 d/dx + T2 d/dx R, mapping P_n^{(a,b)} to a
/// multiple of P_{n+1}^{(a-2,b)}.
inline DunklOperator build_raising(const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& c = p.c;
  const LaurentPoly S1{{1, b * c - b - 2 * a},
                       {0, -(c + 2) * (c - 1)},
                       {-1, b - 2 * c * c + 2 * c * c * a - b * c},
                       {-2, -c * (c - 1)},
                       {-3, 2 * c * c}};
  const LaurentPoly S2{{1, b * c - b + 2 * c * a},
                       {0, (c - 1) * (2 * c * a - c - 2 * b)},
                       {-1, -b - 2 * c * c * a + b * c + 2 * c * c},
                       {-2, c * (c - 1)},
                       {-3, -2 * c * c}};
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly inv_x2 = LaurentPoly::monomial(-2);
  const LaurentPoly T1 = Rational(2) * (x * x - 1) * (LaurentPoly(c * c) - x * x) * inv_x2;
  const LaurentPoly T2 = Rational(2 * c) * (x + 1) * (x - 1) * (x - 1) * (x + LaurentPoly(c)) * inv_x2;
  DunklOperator op;
  op.add_term({0, 0}, S1);
  op.add_term({0, 1}, S2);
  op.add_term({1, 0}, T1);
  op.add_term({1, 1}, T2);
  return op;
}

/// Closed form of the raising operator at c = 0:
/// 2(1-x^2) d/dx - b(x-1)^2/x R + (2 + b/x - (b+2a)x) I.
inline DunklOperator little_raising(const Params& p) {
  const LaurentPoly x = LaurentPoly::x();
  DunklOperator op;
  op.add_term({1, 0}, Rational(2) * (LaurentPoly(1) - x * x));
  op.add_term({0, 1}, -p.beta * (x - 1) * (x - 1) * LaurentPoly::monomial(-1));
  op.add_term({0, 0}, LaurentPoly{{0, 2}, {-1, p.beta}, {1, -(p.beta + 2 * p.alpha)}});
  return op;
}

/// L^{(a-2,b,c)} R + R L^{(a,b,c)} + 2(a+b) R; the zero operator.
inline DunklOperator check_raising_intertwiner(const Params& p) {
  const DunklOperator R = build_raising(p);
  return build_L(p.with_alpha_shift(-2)) * R + R * build_L(p) + Rational(2 * p.sum()) * R;
}

/// Outcome of applying a ladder operator to P_n^{(a,b)}.
struct LadderReport {
  unsigned n = 0;
  int shift = 0;  ///< change of alpha in the target family, +2 or -2
  Rational predicted_constant;
  Rational observed_constant;
  bool proportional = false;
  bool exact_match = false;
};

namespace detail {

inline LadderReport ladder_report(unsigned n, int shift, const DunklOperator& op, const Poly& source,
                                  const Poly& target, const Rational& predicted) {
  const ActionCheck a = check_action(op, source, target, predicted);
  return {n, shift, predicted, a.observed, a.proportional, a.holds()};
}

}  // namespace detail

/// D P_n^{(a,b)} = nu_n P_{n-1}^{(a+2,b)}; `source` at p, `target` at alpha+2.
inline LadderReport hahn_check(unsigned n, const DunklOperator& lowering, const MonicPolySeq& source,
                               const MonicPolySeq& target) {
  if (n == 0) throw DomainError("hahn_check needs n >= 1");
  return detail::ladder_report(n, 2, lowering, source[n], target[n - 1], nu_n(n, source.params()));
}

inline LadderReport hahn_check(unsigned n, const Params& p) {
  const MonicPolySeq source(p), target(p.with_alpha_shift(2));
  return hahn_check(n, build_lowering(p), source, target);
}

/// R P_n^{(a,b)} = kappa_n P_{n+1}^{(a-2,b)}; `target` at alpha-2.
inline LadderReport raising_check(unsigned n, const DunklOperator& raising, const MonicPolySeq& source,
                                  const MonicPolySeq& target) {
  return detail::ladder_report(n, -2, raising, source[n], target[n + 1], kappa_n(n, source.params()));
}

inline LadderReport raising_check(unsigned n, const Params& p) {
  const MonicPolySeq source(p), target(p.with_alpha_shift(-2));
  return raising_check(n, build_raising(p), source, target);
}

/// Christoffel transform at node a:
///   Q_n = (P_{n+1} - P_{n+1}(a)/P_n(a) P_n) / (x - a),
/// the monic orthogonal polynomials of (x - a) w. Returns one fewer entry
/// than `seq`.
inline std::vector<Poly> christoffel(std::span<const Poly> seq, const Rational& a) {
  std::vector<Poly> out;
  if (seq.empty()) return out;
  out.reserve(seq.size() - 1);
  const Poly divisor{-a, 1};
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    const Rational pn = seq[n](a);
    if (pn == 0) throw ZeroAtNode("P_" + std::to_string(n) + " vanishes at the node " + to_string(a));
    const Poly numer = seq[n + 1] - seq[n] * (seq[n + 1](a) / pn);
    auto [q, r] = divmod(numer, divisor);
    if (!r.is_zero()) throw NonzeroRemainder("Christoffel numerator not divisible by (x - a) at n = " + std::to_string(n));
    out.push_back(std::move(q));
  }
  return out;
}

/// Successive Christoffel transforms at each node in order.
inline std::vector<Poly> christoffel(std::span<const Poly> seq, std::span<const Rational> nodes) {
  std::vector<Poly> cur(seq.begin(), seq.end());
  for (const auto& a : nodes) cur = christoffel(cur, a);
  return cur;
}

/// Recurrence coefficients read off a monic sequence:
/// b_n from x P_n - P_{n+1}, u_n from what remains after b_n P_n.
inline Recurrence fitted_recurrence(std::span<const Poly> seq, std::size_t n) {
  if (n + 1 >= seq.size()) throw DomainError("fitted_recurrence needs P_{n+1}");
  const Poly rest = Poly::x() * seq[n] - seq[n + 1];
  const Rational b = rest.coeff(n);
  Rational u = 0;
  if (n > 0) u = (rest - seq[n] * b).coeff(n - 1);
  return {b, u, 1};
}

}  // namespace bigm1

#endif  // BIGM1_LADDER_HPP
