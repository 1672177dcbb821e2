#include "momkp/solution.hpp"

#include <limits>
#include <stdexcept>

namespace momkp {

Solution empty_solution(const Instance& inst) {
  Solution sol;
  sol.flags.assign(inst.num_items, 0);
  sol.objectives.assign(inst.num_objectives, 0);
  sol.residual = inst.capacities;
  return sol;
}

Solution evaluate(const Instance& inst, const std::vector<std::uint8_t>& flags) {
  if (static_cast<int>(flags.size()) != inst.num_items)
    throw std::invalid_argument(
        "flag vector length " + std::to_string(flags.size()) +
        " does not match item count " + std::to_string(inst.num_items));
  Solution sol = empty_solution(inst);
  for (int i = 0; i < inst.num_items; ++i)
    if (flags[i]) sol.include(inst, i);
  return sol;
}

bool is_feasible(const Solution& sol) { return sol.feasible(); }

Solution greedy_repair(const Instance& inst,
                       const std::vector<std::uint8_t>& flags,
                       const std::vector<double>& lambda) {
  if (static_cast<int>(lambda.size()) != inst.num_objectives)
    throw std::invalid_argument("weight vector length does not match p");
  Solution sol = evaluate(inst, flags);
  while (!sol.feasible()) {
    int worst = -1;
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < inst.num_items; ++i) {
      if (!sol.flags[i]) continue;
      std::int64_t total_weight = 0;
      for (int j = 0; j < inst.num_constraints; ++j)
        total_weight += inst.weight(i, j);
      if (total_weight == 0) continue;  // harmless item, keep it
      double value = 0.0;
      for (int k = 0; k < inst.num_objectives; ++k)
        value += lambda[k] * static_cast<double>(inst.profit(i, k));
      const double ratio = value / static_cast<double>(total_weight);
      if (ratio < worst_ratio) {
        worst_ratio = ratio;
        worst = i;
      }
    }
    // Zero-weight items never contribute load, so infeasibility implies a
    // removable item exists.
    sol.exclude(inst, worst);
  }
  return sol;
}

}  // namespace momkp
