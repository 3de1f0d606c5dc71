#pragma once

#include <string>
#include <vector>

#include "mdioph/oracle.hpp"
#include "mdioph/solver.hpp"

namespace mdioph {

/// Disagreement between the closed-form classification and a bounded search.
/// An empty report means the two agree inside the bounds.
struct TheoremDiscrepancy {
  EquationInstance instance;
  SearchBounds bounds;
  std::vector<Solution> oracle_only;  // found by search, not predicted
  std::vector<Solution> solver_only;  // predicted inside the bounds, not found

  bool empty() const { return oracle_only.empty() && solver_only.empty(); }
};

inline TheoremDiscrepancy cross_check(const EquationInstance& instance, const SearchBounds& bounds,
                                      unsigned workers = 1) {
  const auto predicted = restrict_to(classify(instance), bounds);
  const auto found = brute_force(instance, bounds, workers).solutions;

  TheoremDiscrepancy report{instance, bounds, {}, {}};
  auto contains = [](const std::vector<Solution>& v, const Solution& s) {
    return std::any_of(v.begin(), v.end(), [&](const Solution& t) { return t.same_triple(s); });
  };
  for (const auto& s : found)
    if (!contains(predicted, s)) report.oracle_only.push_back(s);
  for (const auto& s : predicted)
    if (!contains(found, s)) report.solver_only.push_back(s);
  return report;
}

}  // namespace mdioph
