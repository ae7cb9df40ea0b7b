// Prints the first few polynomials of a family, checks the lowering relation
// and builds a small Gauss rule.
#include <iostream>

#include "bigm1/ladder.hpp"
#include "bigm1/quadrature.hpp"

int main() {
  using namespace bigm1;
  const Params p{1, 1, make_rational(1, 2)};
  const MonicPolySeq seq(p);
  for (unsigned n = 0; n <= 4; ++n) std::cout << "P_" << n << " = " << to_string(seq[n]) << "\n";

  const LadderReport r = hahn_check(3, p);
  std::cout << "lowering P_3: predicted " << to_string(r.predicted_constant) << ", observed "
            << to_string(r.observed_constant) << (r.exact_match ? " (match)\n" : " (MISMATCH)\n");

  const QuadRule rule = gauss_rule(4, p, exact_moment(0, p).get_d());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    std::cout << "node " << rule.nodes[i] << "  weight " << rule.weights[i] << "\n";
  return r.exact_match ? 0 : 1;
}
