#ifndef BIGM1_VERIFY_HPP
#define BIGM1_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "bigm1/ladder.hpp"

namespace bigm1 {

/// Outcome of one exact identity check at one parameter point.
struct CheckResult {
  std::string identity;
  Params params;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

/// Operators and polynomial families at one parameter point, shared across
/// the checks below.
class FamilyContext {
 public:
  FamilyContext(const Params& p, unsigned nmax)
      : p_(p),
        nmax_(nmax),
        L_(build_L(p)),
        xyz_(build_xyz(p)),
        jpm_(build_jpm(p)),
        lowering_(build_lowering(p)),
        raising_(build_raising(p)),
        seq_(p),
        up_(p.with_alpha_shift(2)),
        down_(p.with_alpha_shift(-2)) {}

  const Params& params() const { return p_; }
  unsigned nmax() const { return nmax_; }
  const DunklOperator& L() const { return L_; }
  const JordanGenerators& xyz() const { return xyz_; }
  const Intertwiners& jpm() const { return jpm_; }
  const DunklOperator& lowering() const { return lowering_; }
  const DunklOperator& raising() const { return raising_; }
  const MonicPolySeq& family() const { return seq_; }
  const MonicPolySeq& family_alpha_plus_2() const { return up_; }
  const MonicPolySeq& family_alpha_minus_2() const { return down_; }

 private:
  Params p_;
  unsigned nmax_;
  DunklOperator L_;
  JordanGenerators xyz_;
  Intertwiners jpm_;
  DunklOperator lowering_;
  DunklOperator raising_;
  MonicPolySeq seq_;
  MonicPolySeq up_;
  MonicPolySeq down_;
};

namespace detail {

inline Poly applied(const DunklOperator& op, const Poly& f) { return poly_from_laurent(apply(op, to_laurent(f))); }

// Runs body; it returns an empty string on success or a failure description.
// Degenerate shifted families turn into a skip.
inline CheckResult run_check(const std::string& name, const Params& p, const std::function<std::string()>& body) {
  CheckResult r{name, p, false, false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const DegenerateParams& e) {
    r.skipped = true;
    r.passed = true;
    r.detail = std::string("skipped: ") + e.what();
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

inline std::string operator_zero(const DunklOperator& residual) {
  return residual.is_zero() ? std::string() : "nonzero residual " + to_string(residual);
}

}  // namespace detail

/// L P_n = lambda_n P_n for n <= nmax.
inline CheckResult check_eigenvalue_equation(const FamilyContext& ctx) {
  return detail::run_check("eigenvalue_equation", ctx.params(), [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const Poly& P = ctx.family()[n];
      if (detail::applied(ctx.L(), P) != P * lambda_n(n, ctx.params())) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  });
}

/// L Phi_n = lambda_n Phi_n + eta_n Phi_{n-1}.
inline CheckResult check_basis_action_L(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  return detail::run_check("basis_action_L", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      Poly expected = phi_basis(n, p.c) * lambda_n(n, p);
      if (n > 0) expected += phi_basis(n - 1, p.c) * eta_n(n, p);
      if (detail::applied(ctx.L(), phi_basis(n, p.c)) != expected) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  });
}

/// D Phi_n = nu_n Phi_{n-1}.
inline CheckResult check_basis_action_lowering(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  return detail::run_check("basis_action_lowering", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const Poly expected = n == 0 ? Poly() : phi_basis(n - 1, p.c) * nu_n(n, p);
      if (detail::applied(ctx.lowering(), phi_basis(n, p.c)) != expected) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  });
}

inline std::vector<CheckResult> check_jordan_relations(const FamilyContext& ctx) {
  std::vector<CheckResult> out;
  for (const auto& id : verify_jordan(ctx.params()))
    out.push_back(detail::run_check(id.identity, ctx.params(), [&] { return detail::operator_zero(id.residual); }));
  return out;
}

inline CheckResult check_casimir(const FamilyContext& ctx) {
  return detail::run_check("casimir", ctx.params(), [&] {
    const auto& g = ctx.xyz();
    return detail::operator_zero(g.Z * g.Z + g.Y * g.Y - DunklOperator(casimir_value(ctx.params())));
  });
}

/// {X,J+} = J+, {X,J-} = -J-, [X,J+^2] = [X,J-^2] = 0.
inline std::vector<CheckResult> check_intertwiner_relations(const FamilyContext& ctx) {
  const auto& X = ctx.xyz().X;
  const auto& J = ctx.jpm();
  return {
      detail::run_check("jpm_anticommutators", ctx.params(),
                        [&] {
                          auto r = detail::operator_zero(anticommutator(X, J.plus) - J.plus);
                          return r.empty() ? detail::operator_zero(anticommutator(X, J.minus) + J.minus) : r;
                        }),
      detail::run_check("jpm_squares_commute", ctx.params(),
                        [&] {
                          auto r = detail::operator_zero(commutator(X, J.plus * J.plus));
                          return r.empty() ? detail::operator_zero(commutator(X, J.minus * J.minus)) : r;
                        }),
  };
}

/// J+ P_n and J- P_n against their block constants, plus the X-eigenvalue
/// shift mu -> 1 - mu (J+) and mu -> -1 - mu (J-).
inline std::vector<CheckResult> check_block_actions(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  auto one = [&](StructureKind kind, const DunklOperator& op) {
    const std::string name = kind == StructureKind::JPlus ? "j_plus_action" : "j_minus_action";
    return detail::run_check(name, p, [&] {
      for (unsigned n = 0; n <= ctx.nmax(); ++n) {
        const StructureConstant sc = j_action(n, p, kind);
        const Poly target = sc.target_degree < 0 ? Poly() : ctx.family()[static_cast<unsigned>(sc.target_degree)];
        const ActionCheck a = check_action(op, ctx.family()[n], target, sc.value);
        if (!a.proportional) return "not proportional to P_" + std::to_string(sc.target_degree) + " at n = " + std::to_string(n);
        if (!a.constant_match)
          return "constant " + to_string(a.observed) + " != predicted " + to_string(sc.value) + " at n = " + std::to_string(n);
        const Poly image = target * sc.value;
        const Rational shifted = (kind == StructureKind::JPlus ? 1 : -1) - mu_n(n, p);
        if (detail::applied(ctx.xyz().X, image) != image * shifted)
          return "X eigenvalue shift fails at n = " + std::to_string(n);
      }
      return std::string();
    });
  };
  return {one(StructureKind::JPlus, ctx.jpm().plus), one(StructureKind::JMinus, ctx.jpm().minus)};
}

/// U1 P_n = eps1_n P_{n-1}, U2 P_n = eps2_n P_{n+1}.
inline std::vector<CheckResult> check_structure_relations(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  auto one = [&](StructureKind which) {
    return detail::run_check(which == StructureKind::U1 ? "structure_u1" : "structure_u2", p, [&] {
      for (unsigned n = 0; n <= ctx.nmax(); ++n) {
        const StructureConstant sc = structure_u(n, p, which);
        const Poly target = sc.target_degree < 0 ? Poly() : ctx.family()[static_cast<unsigned>(sc.target_degree)];
        if (!check_action(structure_operator(n, which, ctx.jpm()), ctx.family()[n], target, sc.value).holds())
          return "fails at n = " + std::to_string(n);
      }
      return std::string();
    });
  };
  return {one(StructureKind::U1), one(StructureKind::U2)};
}

/// Both forms of V agree; V acts as multiplication and as a two-term operator
/// on P_n; the recurrence read from V equals the closed forms.
inline std::vector<CheckResult> check_v_route(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  const DunklOperator V = build_v(p);
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("v_two_forms", p, [&] { return detail::operator_zero(V - build_v_from_generators(p)); }));
  out.push_back(detail::run_check("v_multiplication_action", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const VMultiplier m = v_multiplier(n, p);
      const Poly& P = ctx.family()[n];
      if (detail::applied(V, P) != Poly{m.intercept, m.slope} * P) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  }));
  out.push_back(detail::run_check("v_two_term_action", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const VTwoTermAction t = v_two_term(n, p);
      Poly expected = ctx.family()[n + 1] * t.upper;
      if (n > 0) expected += ctx.family()[n - 1] * t.lower;
      if (detail::applied(V, ctx.family()[n]) != expected) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  }));
  out.push_back(detail::run_check("recurrence_from_v", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const Recurrence r = recurrence_from_v(n, p);
      if (r.leading != 1 || r.b != b_coeff(n, p) || (n > 0 && r.u != u_coeff(n, p)))
        return "disagrees with closed forms at n = " + std::to_string(n);
    }
    return std::string();
  }));
  return out;
}

inline std::vector<CheckResult> check_lowering(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("lowering_intertwiner", p, [&] {
    return detail::operator_zero(check_lowering_intertwiner(p));
  }));
  out.push_back(detail::run_check("lowering_eigenvalue_shift", p, [&] {
    const Params up = p.with_alpha_shift(2);
    for (unsigned n = 1; n <= ctx.nmax(); ++n)
      if (shifted_lambda(n, p) != lambda_n(n - 1, up)) return "fails at n = " + std::to_string(n);
    return std::string();
  }));
  out.push_back(detail::run_check("hahn_property", p, [&] {
    for (unsigned n = 1; n <= ctx.nmax(); ++n) {
      const LadderReport r = hahn_check(n, ctx.lowering(), ctx.family(), ctx.family_alpha_plus_2());
      if (!r.exact_match) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  }));
  out.push_back(check_basis_action_lowering(ctx));
  return out;
}

inline std::vector<CheckResult> check_raising(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("raising_intertwiner", p, [&] {
    return detail::operator_zero(check_raising_intertwiner(p));
  }));
  out.push_back(detail::run_check("raising_action", p, [&] {
    for (unsigned n = 0; n <= ctx.nmax(); ++n) {
      const LadderReport r = raising_check(n, ctx.raising(), ctx.family(), ctx.family_alpha_minus_2());
      if (!r.exact_match) return "fails at n = " + std::to_string(n);
    }
    return std::string();
  }));
  return out;
}

/// Christoffel at 1 then -1 yields the alpha+2 family and D P_{n+1} / nu_{n+1}.
/// Skipped when a node hits a zero of the sequence.
inline CheckResult check_double_christoffel(const FamilyContext& ctx, unsigned nmax) {
  const Params& p = ctx.params();
  return detail::run_check("double_christoffel", p, [&]() -> std::string {
    const auto seq = ctx.family().prefix(nmax + 2);
    const Rational nodes[] = {1, -1};
    std::vector<Poly> twice;
    try {
      twice = christoffel(seq, nodes);
    } catch (const ZeroAtNode& e) {
      throw DegenerateParams(e.what());
    }
    for (unsigned n = 0; n <= nmax; ++n) {
      if (twice[n] != ctx.family_alpha_plus_2()[n]) return "differs from alpha+2 family at n = " + std::to_string(n);
      const Rational nu = nu_n(n + 1, p);
      if (nu != 0 && detail::applied(ctx.lowering(), ctx.family()[n + 1]) * (1 / nu) != twice[n])
        return "differs from lowered P_{n+1} at n = " + std::to_string(n);
    }
    return std::string();
  });
}

/// c = 0: D is the ordinary Dunkl operator and R has its little closed form.
inline std::vector<CheckResult> check_little_reductions(const FamilyContext& ctx) {
  const Params& p = ctx.params();
  return {
      detail::run_check("lowering_is_dunkl_at_c0", p,
                        [&] { return detail::operator_zero(ctx.lowering() - dunkl_operator(p.beta)); }),
      detail::run_check("raising_closed_form_at_c0", p,
                        [&] { return detail::operator_zero(ctx.raising() - little_raising(p)); }),
  };
}

inline bool in_polynomial_regime(const Params& p) {
  auto odd_positive = [](const Rational& v) {
    return is_integer(v) && v > 0 && v.get_num().get_si() % 2 == 1;
  };
  return odd_positive(p.alpha) && odd_positive(p.beta) && p.c > 0 && p.c < 1;
}

/// <P_n,P_m> = 0 (n != m), h_n = u_n h_{n-1} > 0, h_0 = m_0.
inline CheckResult check_orthogonality(const FamilyContext& ctx, unsigned nmax) {
  const Params& p = ctx.params();
  return detail::run_check("orthogonality", p, [&] {
    const auto h = norms(nmax, p);
    for (unsigned n = 0; n <= nmax; ++n) {
      for (unsigned m = 0; m < n; ++m)
        if (inner_product(ctx.family()[n], ctx.family()[m], p) != 0)
          return "<P_" + std::to_string(n) + ",P_" + std::to_string(m) + "> != 0";
      const Rational hn = inner_product(ctx.family()[n], ctx.family()[n], p);
      if (hn != h[n] || hn <= 0) return "norm mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
}

/// Every exact identity at one parameter point.
inline std::vector<CheckResult> run_identity_suite(const Params& p, unsigned nmax) {
  const FamilyContext ctx(p, nmax);
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  out.push_back(check_eigenvalue_equation(ctx));
  out.push_back(check_basis_action_L(ctx));
  add(check_jordan_relations(ctx));
  out.push_back(check_casimir(ctx));
  add(check_intertwiner_relations(ctx));
  add(check_block_actions(ctx));
  add(check_structure_relations(ctx));
  add(check_v_route(ctx));
  add(check_lowering(ctx));
  add(check_raising(ctx));
  out.push_back(check_double_christoffel(ctx, std::min(nmax, 8u)));
  if (p.c == 0) add(check_little_reductions(ctx));
  if (in_polynomial_regime(p)) out.push_back(check_orthogonality(ctx, std::min(nmax, 10u)));
  return out;
}

/// Throws DegenerateParams if the family itself (not a ladder target) has a
/// vanishing denominator up to degree nmax + 1.
inline void validate_family(const Params& p, unsigned nmax) {
  for (unsigned n = 0; n <= nmax + 1; ++n) {
    (void)b_coeff(n, p);
    (void)u_coeff(n, p);
    if (v_multiplier(n, p).slope == 0) throw DegenerateParams("mu_n = +-1/2 at n = " + std::to_string(n));
  }
}

}  // namespace bigm1

#endif  // BIGM1_VERIFY_HPP
