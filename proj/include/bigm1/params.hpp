#ifndef BIGM1_PARAMS_HPP
#define BIGM1_PARAMS_HPP

#include <string>

#include "bigm1/rational.hpp"

namespace bigm1 {

/// The family parameters (alpha, beta, c), instantiated as exact rationals.
struct Params {
  Rational alpha;
  Rational beta;
  Rational c;

  Rational sum() const { return alpha + beta; }

  /// Same beta and c, alpha moved by `delta` (the ladder operators shift by +-2).
  Params with_alpha_shift(long delta) const { return {alpha + delta, beta, c}; }

  /// alpha > -1, beta > -1, 0 < c < 1.
  bool in_positivity_window() const { return alpha > -1 && beta > -1 && c > 0 && c < 1; }

  friend bool operator==(const Params&, const Params&) = default;
};

inline std::string to_string(const Params& p) {
  return "(alpha=" + to_string(p.alpha) + ", beta=" + to_string(p.beta) + ", c=" + to_string(p.c) + ")";
}

/// Floating-point copy of the parameters for the numeric layer.
struct RealParams {
  double alpha;
  double beta;
  double c;
};

inline RealParams to_real(const Params& p) { return {p.alpha.get_d(), p.beta.get_d(), p.c.get_d()}; }

}  // namespace bigm1

#endif  // BIGM1_PARAMS_HPP
