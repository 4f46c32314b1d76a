// Library walkthrough: symbolic powers of three disjoint lines in P^5,
// their alpha values, the exact Waldschmidt constant and the resurgence.

#include <iostream>

#include "reslab/reslab.hpp"

int main() {
  using namespace reslab;
  const Arrangement lines = build_pair_lines(3, 5);

  std::cout << "I = " << to_string(symbolic_power(lines, 1)) << "\n";
  const CoveringIlp ilp(lines);
  for (std::uint64_t m = 1; m <= 6; ++m) {
    std::cout << "alpha(I^(" << m << ")) = " << ilp.solve(m) << "\n";
  }

  const GammaResult g = gamma_exact(lines);
  std::cout << "gamma = " << g.value.str() << " (attained at m = " << g.q.str() << ")\n";

  const BoundInterval rho = resurgence_window(lines);
  std::cout << "resurgence in [" << rho.lo.str() << ", " << rho.hi.str() << "]\n";

  ContainmentEngine engine(lines);
  for (std::uint64_t m = 1; m <= 6; ++m) {
    for (std::uint64_t r = 1; r <= m; ++r) {
      if (engine.check(m, r).contained()) std::cout << "I^(" << m << ") in I^" << r << "\n";
    }
  }
}
