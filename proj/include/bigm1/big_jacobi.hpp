#ifndef BIGM1_BIG_JACOBI_HPP
#define BIGM1_BIG_JACOBI_HPP

#include <cmath>
#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "bigm1/dunkl_operator.hpp"
#include "bigm1/params.hpp"
#include "bigm1/poly.hpp"

namespace bigm1 {

namespace detail {

inline bool is_even(unsigned n) { return n % 2 == 0; }

inline Rational checked_div(const Rational& num, const Rational& den, const char* what, unsigned n) {
  if (den == 0) throw DegenerateParams(std::string(what) + ": vanishing denominator at n = " + std::to_string(n));
  return num / den;
}

}  // namespace detail

/// g0(x) = ((a+b+1)x^2 + (c a - b)x + c) / x^2.
inline LaurentPoly g0(const Params& p) {
  return LaurentPoly{{0, p.sum() + 1}, {-1, p.c * p.alpha - p.beta}, {-2, p.c}};
}

/// g1(x) = 2(x-1)(x+c)/x.
inline LaurentPoly g1(const Params& p) { return LaurentPoly{{1, 2}, {0, 2 * (p.c - 1)}, {-1, -2 * p.c}}; }

/// L = g0(x)(R - I) + g1(x) d/dx R, whose polynomial eigenfunctions are the
/// big -1 Jacobi polynomials.
inline DunklOperator build_L(const Params& p) {
  const LaurentPoly a = g0(p);
  DunklOperator op;
  op.add_term({0, 1}, a);
  op.add_term({0, 0}, -a);
  op.add_term({1, 1}, g1(p));
  return op;
}

/// 2n for even n, -2(a+b+n+1) for odd n.
inline Rational lambda_n(unsigned n, const Params& p) {
  if (detail::is_even(n)) return Rational(2 * static_cast<long>(n));
  return -2 * (p.sum() + n + 1);
}

/// Eigenvalue of X = (L + a+b+1)/2: (-1)^n (n + (a+b+1)/2).
inline Rational mu_n(unsigned n, const Params& p) {
  Rational m = n + (p.sum() + 1) / 2;
  return detail::is_even(n) ? m : Rational(-m);
}

/// Subdiagonal of L in the Phi basis: L Phi_n = lambda_n Phi_n + eta_n Phi_{n-1}.
inline Rational eta_n(unsigned n, const Params& p) {
  if (detail::is_even(n)) return 2 * (p.c - 1) * n;
  return 2 * (p.c + 1) * (p.beta + n);
}

/// (x^2-c^2)^{n/2} for even n, (x+c)(x^2-c^2)^{(n-1)/2} for odd n.
inline Poly phi_basis(unsigned n, const Rational& c) {
  const Poly quad{-c * c, 0, 1};
  if (detail::is_even(n)) return pow(quad, n / 2);
  return Poly{c, 1} * pow(quad, (n - 1) / 2);
}

/// Recurrence coefficient u_n (n >= 1) in x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.
inline Rational u_coeff(unsigned n, const Params& p) {
  const Rational s = p.sum();
  const Rational den = (s + 2 * n) * (s + 2 * n);
  if (n == 0) return 0;
  if (detail::is_even(n)) return detail::checked_div((1 - p.c) * (1 - p.c) * n * (s + n), den, "u_n", n);
  return detail::checked_div((1 + p.c) * (1 + p.c) * (p.alpha + n) * (p.beta + n), den, "u_n", n);
}

/// Recurrence coefficient b_n. The (c-1)n/(a+b+2n) term is identically zero at
/// n = 0 and its denominator is not checked there.
inline Rational b_coeff(unsigned n, const Params& p) {
  const Rational s = p.sum();
  if (detail::is_even(n)) {
    Rational b = -p.c + detail::checked_div((1 + p.c) * (p.beta + n + 1), s + 2 * n + 2, "b_n", n);
    if (n > 0) b += detail::checked_div((p.c - 1) * n, s + 2 * n, "b_n", n);
    return b;
  }
  return p.c + detail::checked_div((1 - p.c) * (n + 1), s + 2 * n + 2, "b_n", n) -
         detail::checked_div((p.c + 1) * (p.beta + n), s + 2 * n, "b_n", n);
}

/// Monic big -1 Jacobi polynomials, extended on demand by the three-term
/// recurrence. Extension is serialized; references stay valid for the
/// lifetime of the sequence.
class MonicPolySeq {
 public:
  explicit MonicPolySeq(Params p) : params_(std::move(p)) {}
  MonicPolySeq(const MonicPolySeq&) = delete;
  MonicPolySeq& operator=(const MonicPolySeq&) = delete;

  const Params& params() const noexcept { return params_; }

  /// P_n. Throws DegenerateParams if a coefficient up to b_{n-1} is undefined.
  const Poly& operator[](unsigned n) const {
    std::lock_guard lock(mutex_);
    while (polys_.size() <= n) extend();
    return polys_[n];
  }

  /// P_0..P_n by value.
  std::vector<Poly> prefix(unsigned n) const {
    (void)(*this)[n];
    std::lock_guard lock(mutex_);
    return {polys_.begin(), polys_.begin() + n + 1};
  }

 private:
  void extend() const {
    const auto k = static_cast<unsigned>(polys_.size());
    if (k == 0) {
      polys_.push_back(Poly::constant(1));
      return;
    }
    Poly next = (Poly::x() - Poly::constant(b_coeff(k - 1, params_))) * polys_[k - 1];
    if (k >= 2) next -= polys_[k - 2] * u_coeff(k - 1, params_);
    polys_.push_back(std::move(next));
  }

  Params params_;
  mutable std::mutex mutex_;
  mutable std::deque<Poly> polys_;
};

/// monic P_n at parameters p.
inline Poly monic_pn(const MonicPolySeq& seq, unsigned n) { return seq[n]; }

/// Polynomial part W of the weight w(x) = sign(x) W(x) on [-1,-c] u [c,1]:
/// W = (x+1)(x-c)(1-x^2)^{(a-1)/2}(x^2-c^2)^{(b-1)/2}. Requires a, b odd
/// positive integers.
inline Poly weight_poly_part(const Params& p) {
  auto exponent = [](const Rational& v, const char* name) {
    const Rational e = (v - 1) / 2;
    if (!is_integer(e) || e < 0)
      throw NotPolynomialRegime(std::string(name) + " = " + to_string(v) + " is not an odd positive integer");
    return static_cast<unsigned>(e.get_num().get_ui());
  };
  const unsigned ea = exponent(p.alpha, "alpha");
  const unsigned eb = exponent(p.beta, "beta");
  return Poly{1, 1} * Poly{-p.c, 1} * pow(Poly{1, 0, -1}, ea) * pow(Poly{-p.c * p.c, 0, 1}, eb);
}

/// Exact moments m_0..m_kmax of the two-interval weight.
inline std::vector<Rational> exact_moments(unsigned kmax, const Params& p) {
  if (!(p.c > 0 && p.c < 1)) throw DomainError("exact moments need 0 < c < 1, got c = " + to_string(p.c));
  const Poly w = weight_poly_part(p);
  std::vector<Rational> m;
  m.reserve(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) {
    const Poly f = antiderivative(Poly::monomial(k) * w);
    // sign(x) = -1 on the left interval.
    m.push_back((f(1) - f(p.c)) - (f(-p.c) - f(-1)));
  }
  return m;
}

inline Rational exact_moment(unsigned k, const Params& p) { return exact_moments(k, p).back(); }

/// <f, g> = integral of f g w over [-1,-c] u [c,1], exactly.
inline Rational inner_product(const Poly& f, const Poly& g, const Params& p) {
  const Poly h = f * g;
  if (h.is_zero()) {
    (void)weight_poly_part(p);
    return 0;
  }
  const auto m = exact_moments(static_cast<unsigned>(h.degree()), p);
  Rational sum = 0;
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) sum += h.coeffs()[k] * m[k];
  return sum;
}

/// h_0..h_n by h_0 = m_0, h_k = u_k h_{k-1}.
inline std::vector<Rational> norms(unsigned n, const Params& p) {
  std::vector<Rational> h{exact_moment(0, p)};
  for (unsigned k = 1; k <= n; ++k) h.push_back(h.back() * u_coeff(k, p));
  return h;
}

/// w(x) in floating point; strictly positive on the open support.
inline double weight_eval(double x, const RealParams& p) {
  const double ax = std::abs(x);
  if (!(ax > p.c && ax < 1.0))
    throw DomainError("weight evaluated outside (-1,-c) u (c,1) at x = " + std::to_string(x));
  const double sign = x > 0 ? 1.0 : -1.0;
  return sign * (x + 1.0) * (x - p.c) * std::pow(1.0 - x * x, (p.alpha - 1.0) / 2.0) *
         std::pow(x * x - p.c * p.c, (p.beta - 1.0) / 2.0);
}

}  // namespace bigm1

#endif  // BIGM1_BIG_JACOBI_HPP
