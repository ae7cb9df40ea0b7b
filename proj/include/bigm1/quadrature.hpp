#ifndef BIGM1_QUADRATURE_HPP
#define BIGM1_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "bigm1/big_jacobi.hpp"

namespace bigm1 {

/// Symmetric tridiagonal matrix: diagonal of size N, off-diagonal of size N-1.
template <typename Real = double>
struct SymTridiagonal {
  std::vector<Real> diagonal;
  std::vector<Real> off_diagonal;
};

/// Jacobi matrix of the monic recurrence: diagonal b_0..b_{N-1}, off-diagonal
/// sqrt(u_1)..sqrt(u_{N-1}). Positivity of u_n is checked exactly first.
inline SymTridiagonal<double> jacobi_matrix(unsigned N, const Params& p) {
  if (N == 0) throw DomainError("jacobi_matrix needs N >= 1");
  SymTridiagonal<double> J;
  for (unsigned n = 0; n < N; ++n) J.diagonal.push_back(b_coeff(n, p).get_d());
  for (unsigned n = 1; n < N; ++n) {
    const Rational u = u_coeff(n, p);
    if (u <= 0) throw PositivityViolation("u_" + std::to_string(n) + " = " + to_string(u) + " is not positive");
    J.off_diagonal.push_back(std::sqrt(u.get_d()));
  }
  return J;
}

/// Eigenvalues and first eigenvector components of a symmetric tridiagonal
/// matrix by implicit-shift QL. Only the first row of the eigenvector matrix
/// is accumulated, which is all a Gauss rule needs.
template <typename Real>
std::pair<std::vector<Real>, std::vector<Real>> tridiagonal_eigen_first_row(std::vector<Real> d,
                                                                            std::vector<Real> e_in,
                                                                            int max_iterations = 60) {
  const std::size_t n = d.size();
  std::vector<Real> e(n, Real(0));
  std::copy(e_in.begin(), e_in.end(), e.begin());
  std::vector<Real> z(n, Real(0));
  if (n == 0) return {d, z};
  z[0] = 1;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Real dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<Real>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > max_iterations) throw EigenFailure("tridiagonal QL did not converge");
      Real g = (d[l + 1] - d[l]) / (2 * e[l]);
      Real r = std::hypot(g, Real(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      Real s = 1, c = 1, p = 0;
      std::size_t i = m;
      bool underflow = false;
      while (i-- > l) {
        Real f = s * e[i];
        const Real b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }
  return {d, z};
}

/// N-point Gauss rule for the two-interval weight.
struct QuadRule {
  std::vector<double> nodes;    ///< strictly increasing, inside (-1, 1)
  std::vector<double> weights;  ///< positive, summing to the mass
  unsigned order = 0;

  template <typename F>
  double integrate(F&& f) const {
    double sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
/// mass times squared first eigenvector components.
inline QuadRule gauss_rule(unsigned N, const Params& p, double mass) {
  if (!(mass > 0)) throw DomainError("gauss_rule needs a positive mass");
  auto J = jacobi_matrix(N, p);
  auto [values, first] = tridiagonal_eigen_first_row(std::move(J.diagonal), std::move(J.off_diagonal));
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  QuadRule rule;
  rule.order = N;
  for (std::size_t i : order) {
    rule.nodes.push_back(values[i]);
    rule.weights.push_back(mass * first[i] * first[i]);
  }
  return rule;
}

/// Total mass with its error estimate.
struct MassEstimate {
  double value = 0;
  double error = 0;
};

namespace detail {

// w on [c,1] and w(-t) for t in [c,1], written in terms of the distances to
// the endpoints so the algebraic singularities at c and 1 are resolved.
inline MassEstimate two_interval_mass(const RealParams& p, std::size_t max_refinements, double tol) {
  const double ea = (p.alpha - 1) / 2;
  const double eb = (p.beta - 1) / 2;
  auto common = [&](double t, double to_c, double to_one) {
    return std::pow(to_one * (1 + t), ea) * std::pow(to_c * (t + p.c), eb);
  };
  // tanh_sinh passes tc = t - c near the left end (as c - t) and 1 - t near the right end.
  auto distances = [&](double t, double tc) {
    const double mid = (p.c + 1) / 2;
    if (t < mid) return std::pair{-tc, 1 - t};
    return std::pair{t - p.c, tc};
  };
  auto right = [&](double t, double tc) {
    const auto [to_c, to_one] = distances(t, tc);
    return (1 + t) * to_c * common(t, to_c, to_one);
  };
  auto left = [&](double t, double tc) {
    const auto [to_c, to_one] = distances(t, tc);
    return to_one * (t + p.c) * common(t, to_c, to_one);
  };
  boost::math::quadrature::tanh_sinh<double> integrator(max_refinements);
  MassEstimate out;
  double err = 0;
  out.value = integrator.integrate(right, p.c, 1.0, tol, &err);
  out.error = err;
  out.value += integrator.integrate(left, p.c, 1.0, tol, &err);
  out.error += err;
  return out;
}

}  // namespace detail

/// Mass at a fixed refinement budget, without an accuracy guarantee.
inline MassEstimate numeric_mass_estimate(const RealParams& p, std::size_t max_refinements) {
  return detail::two_interval_mass(p, max_refinements, std::numeric_limits<double>::epsilon());
}

/// Integral of w over [-1,-c] u [c,1]. Throws ConvergenceFailure if the
/// estimated relative error exceeds `relative_tolerance`.
inline double numeric_mass(const RealParams& p, double relative_tolerance = 1e-10) {
  if (!(p.alpha > -1 && p.beta > -1 && p.c > 0 && p.c < 1))
    throw DomainError("numeric_mass needs alpha > -1, beta > -1, 0 < c < 1");
  const MassEstimate m = detail::two_interval_mass(p, 15, 1e-14);
  const double rel = m.error / std::abs(m.value);
  if (!(rel <= relative_tolerance))
    throw ConvergenceFailure("numeric_mass reached relative error " + std::to_string(rel), rel);
  return m.value;
}

}  // namespace bigm1

#endif  // BIGM1_QUADRATURE_HPP
