#ifndef BIGM1_POLY_HPP
#define BIGM1_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigm1/laurent.hpp"

namespace bigm1 {

/// Dense univariate polynomial with rational coefficients, index = power.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
  static Poly monomial(unsigned degree, const Rational& coeff = 1) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t power) const { return power < c_.size() ? c_[power] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation.
  template <typename T>
  T evaluate(const T& at) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }
  Rational operator()(const Rational& at) const { return evaluate(at); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

template <>
inline double Poly::evaluate<double>(const double& at) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

inline Poly pow(const Poly& base, unsigned exponent) {
  Poly out = Poly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline LaurentPoly to_laurent(const Poly& p) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(static_cast<int>(i), p.coeffs()[i]);
  return out;
}

/// Throws SingularResidue if any negative power survives.
inline Poly poly_from_laurent(const LaurentPoly& a) {
  if (a.is_zero()) return {};
  if (a.min_exponent() < 0)
    throw SingularResidue("negative power x^" + std::to_string(a.min_exponent()) + " in " + to_string(a));
  std::vector<Rational> c(static_cast<std::size_t>(a.max_exponent()) + 1);
  for (const auto& [e, v] : a.terms()) c[static_cast<std::size_t>(e)] = v;
  return Poly(std::move(c));
}

/// Antiderivative with zero constant term.
inline Poly antiderivative(const Poly& p) {
  std::vector<Rational> c(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i + 1));
  return Poly(std::move(c));
}

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Long division by a nonzero divisor.
inline PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  std::vector<Rational> quot(std::max(0, dividend.degree() - dd + 1));
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline std::string to_string(const Poly& p) { return to_string(to_laurent(p)); }

}  // namespace bigm1

#endif  // BIGM1_POLY_HPP
