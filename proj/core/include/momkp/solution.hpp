#ifndef MOMKP_SOLUTION_HPP
#define MOMKP_SOLUTION_HPP

#include <cstdint>
#include <vector>

#include "momkp/instance.hpp"

namespace momkp {

/// An inclusion-flag assignment with cached objective values and residual
/// capacities (residual[j] = W_j - packed weight in constraint j, negative
/// when infeasible). The caches are kept exactly consistent with the flags;
/// single-item toggles update them in O(m + p).
struct Solution {
  std::vector<std::uint8_t> flags;
  std::vector<std::int64_t> objectives;
  std::vector<std::int64_t> residual;

  bool feasible() const {
    for (auto r : residual)
      if (r < 0) return false;
    return true;
  }

  void include(const Instance& inst, int item) {
    flags[item] = 1;
    for (int k = 0; k < inst.num_objectives; ++k)
      objectives[k] += inst.profit(item, k);
    for (int j = 0; j < inst.num_constraints; ++j)
      residual[j] -= inst.weight(item, j);
  }

  void exclude(const Instance& inst, int item) {
    flags[item] = 0;
    for (int k = 0; k < inst.num_objectives; ++k)
      objectives[k] -= inst.profit(item, k);
    for (int j = 0; j < inst.num_constraints; ++j)
      residual[j] += inst.weight(item, j);
  }

  void set_flag(const Instance& inst, int item, bool on) {
    if (flags[item] == static_cast<std::uint8_t>(on)) return;
    if (on)
      include(inst, item);
    else
      exclude(inst, item);
  }

  bool operator==(const Solution&) const = default;
};

/// Empty knapsack: all flags zero, objectives zero, residual = capacities.
Solution empty_solution(const Instance& inst);

/// Full evaluation of a flag vector. The residual may come out negative;
/// feasibility is the caller's check.
Solution evaluate(const Instance& inst, const std::vector<std::uint8_t>& flags);

bool is_feasible(const Solution& sol);

/// Removes included items in order of lowest profit/weight ratio
/// R2 = (sum_k lambda_k c_k) / (sum_j w_j) until feasible. Items with zero
/// total weight are never removed (they cannot cause infeasibility). Ties
/// break toward the lowest item index.
Solution greedy_repair(const Instance& inst,
                       const std::vector<std::uint8_t>& flags,
                       const std::vector<double>& lambda);

}  // namespace momkp

#endif  // MOMKP_SOLUTION_HPP
