#ifndef BIGM1_DUNKL_OPERATOR_HPP
#define BIGM1_DUNKL_OPERATOR_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "bigm1/laurent.hpp"

namespace bigm1 {

/// Index of a normal-form term: order of d/dx and power (0 or 1) of the
/// reflection R f(x) = f(-x).
struct Grade {
  unsigned order = 0;
  unsigned reflection = 0;

  friend auto operator<=>(const Grade&, const Grade&) = default;
};

/// Differential-difference operator sum_{d,e} a_{d,e}(x) (d/dx)^d R^e.
///
/// Coefficients sit left of the derivatives and derivatives left of R. With
/// that ordering fixed, the representation of an operator acting on Laurent
/// polynomials is unique, so operator identities reduce to `==`.
class DunklOperator {
 public:
  using Terms = std::map<Grade, LaurentPoly>;

  DunklOperator() = default;
  DunklOperator(const Rational& scalar) { add_term({0, 0}, LaurentPoly(scalar)); }  // NOLINT: scalar * I
  DunklOperator(int scalar) : DunklOperator(Rational(scalar)) {}                    // NOLINT

  static DunklOperator term(const LaurentPoly& coeff, unsigned order, unsigned reflection) {
    DunklOperator op;
    op.add_term({order, reflection}, coeff);
    return op;
  }
  static DunklOperator identity() { return term(1, 0, 0); }
  static DunklOperator reflection() { return term(1, 0, 1); }
  static DunklOperator d_dx() { return term(1, 1, 0); }
  static DunklOperator multiply(const LaurentPoly& f) { return term(f, 0, 0); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly coeff(Grade g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  /// Highest derivative order present; 0 for the zero operator.
  unsigned order() const noexcept { return terms_.empty() ? 0 : std::prev(terms_.end())->first.order; }

  void add_term(Grade g, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DunklOperator& operator+=(const DunklOperator& o) {
    for (const auto& [g, a] : o.terms_) add_term(g, a);
    return *this;
  }
  DunklOperator& operator-=(const DunklOperator& o) {
    for (const auto& [g, a] : o.terms_) add_term(g, -a);
    return *this;
  }
  DunklOperator& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, a] : terms_) a *= s;
    return *this;
  }

  friend DunklOperator operator+(DunklOperator a, const DunklOperator& b) { return a += b; }
  friend DunklOperator operator-(DunklOperator a, const DunklOperator& b) { return a -= b; }
  friend DunklOperator operator-(DunklOperator a) { return a *= Rational(-1); }
  friend DunklOperator operator*(DunklOperator a, const Rational& s) { return a *= s; }
  friend DunklOperator operator*(const Rational& s, DunklOperator a) { return a *= s; }

  friend bool operator==(const DunklOperator& a, const DunklOperator& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

namespace detail {

inline Rational binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace detail

/// Normal form of a o b, using
///   R f(x) = f(-x) R,   R d/dx = -d/dx R,
///   (d/dx)^d f = sum_k C(d,k) f^{(k)} (d/dx)^{d-k}.
inline DunklOperator compose(const DunklOperator& a, const DunklOperator& b) {
  DunklOperator out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      // Move R^{ea} right past cb (d/dx)^{db}.
      LaurentPoly moved = ga.reflection ? reflect(cb) : cb;
      if (ga.reflection && gb.order % 2 == 1) moved = -moved;
      const unsigned reflection = ga.reflection ^ gb.reflection;
      // Move (d/dx)^{da} right past the coefficient.
      LaurentPoly dk = moved;
      for (unsigned k = 0; k <= ga.order && !dk.is_zero(); ++k) {
        out.add_term({ga.order - k + gb.order, reflection}, ca * dk * detail::binomial(ga.order, k));
        dk = derivative(dk);
      }
    }
  }
  return out;
}

inline DunklOperator operator*(const DunklOperator& a, const DunklOperator& b) { return compose(a, b); }

/// {a, b} = ab + ba.
inline DunklOperator anticommutator(const DunklOperator& a, const DunklOperator& b) {
  return compose(a, b) + compose(b, a);
}

/// [a, b] = ab - ba.
inline DunklOperator commutator(const DunklOperator& a, const DunklOperator& b) {
  return compose(a, b) - compose(b, a);
}

inline bool op_equal(const DunklOperator& a, const DunklOperator& b) { return a == b; }

/// sum a_{d,e}(x) (d/dx)^d [f((-1)^e x)].
inline LaurentPoly apply(const DunklOperator& op, const LaurentPoly& f) {
  LaurentPoly out;
  const LaurentPoly reflected = reflect(f);
  for (const auto& [g, a] : op.terms()) out += a * derivative(g.reflection ? reflected : f, g.order);
  return out;
}

inline std::string to_string(const DunklOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [g, a] : op.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(a) + ")";
    if (g.order == 1) out += "*D";
    if (g.order > 1) out += "*D^" + std::to_string(g.order);
    if (g.reflection) out += "*R";
  }
  return out;
}

// JSON form: {"d,e": {"<exponent>": "p/q", ...}, ...}

inline nlohmann::json laurent_to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size()) throw ParseError(key, used, "exponent key is not an integer");
    p.add_term(e, parse_rational(value.get<std::string>()));
  }
  return p;
}

inline nlohmann::json to_json(const DunklOperator& op) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [g, a] : op.terms())
    j[std::to_string(g.order) + "," + std::to_string(g.reflection)] = laurent_to_json(a);
  return j;
}

inline DunklOperator operator_from_json(const nlohmann::json& j) {
  DunklOperator op;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError(key, 0, "expected \"d,e\" key");
    const int d = std::stoi(key.substr(0, comma));
    const int e = std::stoi(key.substr(comma + 1));
    if (d < 0 || (e != 0 && e != 1)) throw ParseError(key, comma, "grade out of range");
    op.add_term({static_cast<unsigned>(d), static_cast<unsigned>(e)}, laurent_from_json(value));
  }
  return op;
}

}  // namespace bigm1

#endif  // BIGM1_DUNKL_OPERATOR_HPP
