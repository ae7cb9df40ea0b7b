#ifndef BIGM1_JORDAN_HPP
#define BIGM1_JORDAN_HPP

#include <string>
#include <vector>

#include "bigm1/big_jacobi.hpp"

namespace bigm1 {

/// Structure constants of {X,Y} = Z + w3, {Y,Z} = w1, {Z,X} = Y + w2.
struct JordanConstants {
  Rational omega1;
  Rational omega2;
  Rational omega3;
};

inline JordanConstants jordan_constants(const Params& p) {
  return {-8 * p.c, 2 * (p.alpha - p.beta * p.c), 2 * (p.beta - p.alpha * p.c)};
}

struct JordanGenerators {
  DunklOperator X;
  DunklOperator Y;
  DunklOperator Z;
};

/// X = (L + a+b+1)/2, Y = 2x, Z = -(2/x)(c + (x-1)(x+c)R).
inline JordanGenerators build_xyz(const Params& p) {
  JordanGenerators g;
  g.X = (build_L(p) + DunklOperator(p.sum() + 1)) * Rational(1, 2);
  g.Y = DunklOperator::multiply(LaurentPoly::monomial(1, 2));
  g.Z = DunklOperator::term(LaurentPoly::monomial(-1, -2 * p.c), 0, 0) +
        DunklOperator::term(LaurentPoly{{1, -2}, {0, -2 * (p.c - 1)}, {-1, 2 * p.c}}, 0, 1);
  return g;
}

/// A named operator identity lhs = rhs, stored as its residual lhs - rhs.
struct IdentityResidual {
  std::string identity;
  DunklOperator residual;

  bool holds() const { return residual.is_zero(); }
};

/// The three anticommutation relations as residual operators.
inline std::vector<IdentityResidual> verify_jordan(const Params& p) {
  const auto [X, Y, Z] = build_xyz(p);
  const auto w = jordan_constants(p);
  return {
      {"jordan_xy", anticommutator(X, Y) - Z - DunklOperator(w.omega3)},
      {"jordan_yz", anticommutator(Y, Z) - DunklOperator(w.omega1)},
      {"jordan_zx", anticommutator(Z, X) - Y - DunklOperator(w.omega2)},
  };
}

/// Q = Z^2 + Y^2; a scalar 4(c^2+1) in this realization.
inline DunklOperator casimir(const Params& p) {
  const auto g = build_xyz(p);
  return g.Z * g.Z + g.Y * g.Y;
}

inline Rational casimir_value(const Params& p) { return 4 * (p.c * p.c + 1); }

struct Intertwiners {
  DunklOperator plus;
  DunklOperator minus;
};

/// J+ = (Y+Z)(X-1/2) - (w2+w3)/2,  J- = (Y-Z)(X+1/2) + (w2-w3)/2.
/// Both anticommute with X up to sign: {X,J+} = J+, {X,J-} = -J-.
inline Intertwiners build_jpm(const Params& p) {
  const auto [X, Y, Z] = build_xyz(p);
  const auto w = jordan_constants(p);
  const Rational half(1, 2);
  return {
      (Y + Z) * (X - DunklOperator(half)) - DunklOperator((w.omega2 + w.omega3) / 2),
      (Y - Z) * (X + DunklOperator(half)) + DunklOperator((w.omega2 - w.omega3) / 2),
  };
}

enum class StructureKind { JPlus, JMinus, U1, U2, Kappa, Nu };

inline const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::JPlus: return "J+";
    case StructureKind::JMinus: return "J-";
    case StructureKind::U1: return "U1";
    case StructureKind::U2: return "U2";
    case StructureKind::Kappa: return "kappa";
    case StructureKind::Nu: return "nu";
  }
  return "?";
}

/// op P_n = value * P_{target_degree} (target family may have shifted alpha).
struct StructureConstant {
  unsigned n = 0;
  StructureKind kind = StructureKind::JPlus;
  Rational value;
  int target_degree = 0;
};

/// Block action of J+ or J- on monic P_n.
inline StructureConstant j_action(unsigned n, const Params& p, StructureKind which) {
  const Rational s = p.sum();
  const int down = static_cast<int>(n) - 1;
  const int up = static_cast<int>(n) + 1;
  const bool even = n % 2 == 0;
  if (which == StructureKind::JPlus) {
    if (!even) return {n, which, -2 * (s + 2 * (n + 1)), up};
    if (n == 0) return {n, which, 0, down};
    return {n, which,
            detail::checked_div(2 * (p.c - 1) * (p.c - 1) * n * (s + n), s + 2 * n, "J+ action", n), down};
  }
  if (which == StructureKind::JMinus) {
    if (even) return {n, which, 2 * (s + 2 * (n + 1)), up};
    return {n, which,
            detail::checked_div(-2 * (p.c + 1) * (p.c + 1) * (p.alpha + n) * (p.beta + n), s + 2 * n, "J- action", n),
            down};
  }
  throw DomainError("j_action: kind must be J+ or J-");
}

/// The n-dependent choice of J+/J- acting as U1 (lowering) or U2 (raising).
inline StructureKind structure_operator_kind(unsigned n, StructureKind which) {
  const bool even = n % 2 == 0;
  if (which == StructureKind::U1) return even ? StructureKind::JPlus : StructureKind::JMinus;
  if (which == StructureKind::U2) return even ? StructureKind::JMinus : StructureKind::JPlus;
  throw DomainError("structure_operator_kind: kind must be U1 or U2");
}

inline const DunklOperator& structure_operator(unsigned n, StructureKind which, const Intertwiners& j) {
  return structure_operator_kind(n, which) == StructureKind::JPlus ? j.plus : j.minus;
}

/// U1 P_n = eps1_n P_{n-1},  U2 P_n = eps2_n P_{n+1}.
inline StructureConstant structure_u(unsigned n, const Params& p, StructureKind which) {
  StructureConstant sc = j_action(n, p, structure_operator_kind(n, which));
  sc.kind = which;
  return sc;
}

/// Result of checking op P_n against value * target.
struct ActionCheck {
  bool proportional = false;  ///< op P_n is a scalar multiple of target
  Rational observed;          ///< that scalar, when proportional
  bool constant_match = false;

  bool holds() const { return proportional && constant_match; }
};

/// Applies op to `source` and compares with `predicted * target`. A nonzero
/// remainder after matching leading terms means "not proportional".
inline ActionCheck check_action(const DunklOperator& op, const Poly& source, const Poly& target,
                                const Rational& predicted) {
  ActionCheck out;
  const Poly image = poly_from_laurent(apply(op, to_laurent(source)));
  if (image.is_zero()) {
    out.proportional = true;
    out.observed = 0;
  } else if (image.degree() == target.degree() && !target.is_zero()) {
    out.observed = image.leading() / target.leading();
    out.proportional = image == target * out.observed;
  }
  out.constant_match = out.proportional && out.observed == predicted;
  return out;
}

/// V = J+(X+1/2) + J-(X-1/2).
inline DunklOperator build_v(const Params& p) {
  const auto g = build_xyz(p);
  const auto j = build_jpm(p);
  const Rational half(1, 2);
  return j.plus * (g.X + DunklOperator(half)) + j.minus * (g.X - DunklOperator(half));
}

/// V rewritten through the generators: 2Y(X^2 - 1/4) - w3 X - w2/2.
inline DunklOperator build_v_from_generators(const Params& p) {
  const auto g = build_xyz(p);
  const auto w = jordan_constants(p);
  return Rational(2) * (g.Y * (g.X * g.X - DunklOperator(Rational(1, 4)))) - w.omega3 * g.X -
         DunklOperator(w.omega2 / 2);
}

/// V P_n = (slope x + intercept) P_n, with slope = 4(mu_n^2 - 1/4) since Y = 2x.
struct VMultiplier {
  Rational slope;
  Rational intercept;
};

inline VMultiplier v_multiplier(unsigned n, const Params& p) {
  const Rational mu = mu_n(n, p);
  const auto w = jordan_constants(p);
  return {4 * (mu * mu - Rational(1, 4)), -w.omega3 * mu - w.omega2 / 2};
}

/// V P_n = lower P_{n-1} + upper P_{n+1}, from the J+/J- block constants.
struct VTwoTermAction {
  Rational lower;
  Rational upper;
};

inline VTwoTermAction v_two_term(unsigned n, const Params& p) {
  const Rational mu = mu_n(n, p);
  const Rational half(1, 2);
  const StructureConstant jp = j_action(n, p, StructureKind::JPlus);
  const StructureConstant jm = j_action(n, p, StructureKind::JMinus);
  // V P_n = (mu+1/2) J+ P_n + (mu-1/2) J- P_n.
  const Rational cp = (mu + half) * jp.value;
  const Rational cm = (mu - half) * jm.value;
  if (jp.target_degree < static_cast<int>(n)) return {cp, cm};
  return {cm, cp};
}

struct Recurrence {
  Rational b;
  Rational u;        ///< 0 at n = 0
  Rational leading;  ///< coefficient of P_{n+1}; 1 when both evaluations agree
};

/// b_n, u_n from equating the two evaluations of V P_n, without using the
/// closed-form recurrence coefficients. Throws DegenerateParams if mu_n = +-1/2.
inline Recurrence recurrence_from_v(unsigned n, const Params& p) {
  const VMultiplier m = v_multiplier(n, p);
  if (m.slope == 0) throw DegenerateParams("recurrence_from_v: mu_n = +-1/2 at n = " + std::to_string(n));
  const VTwoTermAction v = v_two_term(n, p);
  // slope x P_n = upper P_{n+1} - intercept P_n + lower P_{n-1}
  return {-m.intercept / m.slope, n == 0 ? Rational(0) : Rational(v.lower / m.slope), v.upper / m.slope};
}

}  // namespace bigm1

#endif  // BIGM1_JORDAN_HPP
