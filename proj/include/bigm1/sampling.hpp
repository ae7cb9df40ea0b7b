#ifndef BIGM1_SAMPLING_HPP
#define BIGM1_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bigm1/params.hpp"

namespace bigm1 {

/// True when some closed-form denominator used by the family at alpha, or by
/// the ladder targets at alpha +- 2, can vanish: a+b an even integer <= 0.
inline bool has_degenerate_denominator(const Params& p) {
  const Rational s = p.sum();
  return is_integer(s) && s <= 0 && s.get_num().get_si() % 2 == 0;
}

/// Random rational parameters with bounded numerators and denominators,
/// rejecting degenerate points. Deterministic for a fixed engine state.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  Params next() {
    for (;;) {
      Params p{draw(-3, 5), draw(-3, 5), draw(-2, 2)};
      if (!has_degenerate_denominator(p)) return p;
    }
  }

  std::vector<Params> take(std::size_t count) {
    std::vector<Params> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
  }

 private:
  // Uniform over {k/q : 1 <= q <= 9, lo <= k/q <= hi}, drawn via q then k.
  Rational draw(long lo, long hi) {
    std::uniform_int_distribution<long> den(1, 9);
    const long q = den(rng_);
    std::uniform_int_distribution<long> num(lo * q, hi * q);
    return make_rational(num(rng_), q);
  }

  std::mt19937_64 rng_;
};

/// alpha, beta in {1, 2, 3, 1/2}, c in {0, 1/4, 1/2, 3/4}.
inline std::vector<Params> structured_grid() {
  const Rational ab[] = {1, 2, 3, Rational(1, 2)};
  const Rational cs[] = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::vector<Params> out;
  for (const auto& a : ab)
    for (const auto& b : ab)
      for (const auto& c : cs) out.push_back({a, b, c});
  return out;
}

}  // namespace bigm1

#endif  // BIGM1_SAMPLING_HPP
