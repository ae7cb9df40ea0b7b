#ifndef BIGM1_LAURENT_HPP
#define BIGM1_LAURENT_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "bigm1/rational.hpp"

namespace bigm1 {

/// Sparse Laurent polynomial in x with exact rational coefficients.
///
/// Zero coefficients are never stored, so the empty map is the zero element
/// and structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant) { add_term(0, constant); }  // NOLINT: implicit scalar embedding
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT
  LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms) {
    for (const auto& [e, a] : terms) add_term(e, a);
  }

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }
  static LaurentPoly x() { return monomial(1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Only meaningful when nonzero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  Rational coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(int exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.terms_) add_term(e, a);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.terms_) add_term(e, -a);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, a] : terms_) a *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Exact value at a nonzero rational point (any point if no negative powers).
  Rational evaluate(const Rational& at) const {
    Rational sum = 0;
    for (const auto& [e, a] : terms_) {
      if (e < 0 && at == 0) throw DomainError("Laurent polynomial evaluated at its pole x = 0");
      sum += a * (e >= 0 ? pow(at, static_cast<unsigned>(e)) : 1 / pow(at, static_cast<unsigned>(-e)));
    }
    return sum;
  }

 private:
  Terms terms_;
};

/// Term-wise k x^{k-1}; valid for negative k.
inline LaurentPoly derivative(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms()) out.add_term(e - 1, c * e);
  return out;
}

inline LaurentPoly derivative(const LaurentPoly& a, unsigned order) {
  LaurentPoly out = a;
  for (unsigned i = 0; i < order && !out.is_zero(); ++i) out = derivative(out);
  return out;
}

/// f(x) -> f(-x).
inline LaurentPoly reflect(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, (e % 2 == 0) ? c : Rational(-c));
  return out;
}

/// Human-readable form, highest power first, e.g. "2*x^2 - x - 1 + 3*x^-1".
inline std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += e == 1 ? "x" : "x^" + std::to_string(e);
  }
  return out;
}

}  // namespace bigm1

#endif  // BIGM1_LAURENT_HPP
