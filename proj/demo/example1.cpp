// Solves 8191^x + (M_q + 1)^y = (3z)^2 for every admissible M_q and checks
// each answer against a bounded exhaustive search.

#include <iostream>

#include "mdioph.hpp"

int main() {
  using namespace mdioph;
  const auto mp = MersennePrime::from_exponent(13);
  for (Exponent q : admissible_q(mp)) {
    const auto inst = EquationInstance::from_exponents(13, q, 3);
    const auto set = classify(inst, /*positive_only=*/true);
    write_text(std::cout, set);
    const auto report = cross_check(inst, SearchBounds{});
    std::cout << "brute force agrees (x, y <= 12): " << (report.empty() ? "yes" : "NO") << "\n\n";
  }
}
