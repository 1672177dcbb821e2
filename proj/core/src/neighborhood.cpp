#include "momkp/neighborhood.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "momkp/subsolvers.hpp"

namespace momkp {

WeightVector adaptive_weight(const Solution& sol, const Archive& population,
                             int num_objectives, Rng& rng) {
  if (population.empty())
    throw std::invalid_argument("adaptive weight needs a nonempty population");
  if (num_objectives != 2) return sample_simplex(num_objectives, rng);

  WeightVector raw(2);
  double sum = 0.0;
  for (int k = 0; k < 2; ++k) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& member : population) {
      lo = std::min(lo, member.objectives[k]);
      hi = std::max(hi, member.objectives[k]);
    }
    raw[k] = lo == hi ? 0.5
                      : static_cast<double>(sol.objectives[k] - lo) /
                            static_cast<double>(hi - lo);
    sum += raw[k];
  }
  if (sum == 0.0) return {0.5, 0.5};
  for (auto& component : raw) component /= sum;
  return raw;
}

std::pair<std::vector<int>, std::vector<int>> build_lists(
    const Instance& inst, const Solution& sol, const WeightVector& lambda,
    int depth) {
  if (depth < 1) throw std::invalid_argument("list depth must be >= 1");

  std::vector<double> value(inst.num_items, 0.0);
  for (int i = 0; i < inst.num_items; ++i)
    for (int k = 0; k < inst.num_objectives; ++k)
      value[i] += lambda[k] * static_cast<double>(inst.profit(i, k));

  std::vector<std::pair<double, int>> included;  // (R2, item)
  std::vector<std::pair<double, int>> excluded;  // (R1, item)
  for (int i = 0; i < inst.num_items; ++i) {
    if (sol.flags[i]) {
      std::int64_t total_weight = 0;
      for (int j = 0; j < inst.num_constraints; ++j)
        total_weight += inst.weight(i, j);
      const double r2 = total_weight == 0
                            ? std::numeric_limits<double>::infinity()
                            : value[i] / static_cast<double>(total_weight);
      included.emplace_back(r2, i);
    } else {
      excluded.emplace_back(ratio_r1(inst, i, sol.residual, lambda), i);
    }
  }
  std::sort(included.begin(), included.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  std::sort(excluded.begin(), excluded.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });

  std::vector<int> list_out, list_in;
  const auto take = static_cast<std::size_t>(depth);
  for (std::size_t i = 0; i < included.size() && i < take; ++i)
    list_out.push_back(included[i].second);
  for (std::size_t i = 0; i < excluded.size() && i < take; ++i)
    list_in.push_back(excluded[i].second);
  return {std::move(list_out), std::move(list_in)};
}

ResidualProblem build_residual(const Instance& inst, const Solution& sol,
                               const std::vector<int>& list_out,
                               const std::vector<int>& list_in) {
  ResidualProblem residual;
  residual.base = sol;
  residual.candidate_items = list_out;
  residual.candidate_items.insert(residual.candidate_items.end(),
                                  list_in.begin(), list_in.end());

  // Capacity left once the packed items outside L1 are fixed in place:
  // residual of sol plus the weight the L1 items currently occupy.
  residual.reduced_capacities = sol.residual;
  for (int item : list_out)
    for (int j = 0; j < inst.num_constraints; ++j)
      residual.reduced_capacities[j] += inst.weight(item, j);

  Instance& sub = residual.sub_instance;
  sub.num_items = static_cast<int>(residual.candidate_items.size());
  sub.num_constraints = inst.num_constraints;
  sub.num_objectives = inst.num_objectives;
  sub.capacities = residual.reduced_capacities;
  sub.profit_data.reserve(static_cast<std::size_t>(sub.num_items) *
                          sub.num_objectives);
  sub.weight_data.reserve(static_cast<std::size_t>(sub.num_items) *
                          sub.num_constraints);
  for (int item : residual.candidate_items) {
    auto profits = inst.item_profits(item);
    auto weights = inst.item_weights(item);
    sub.profit_data.insert(sub.profit_data.end(), profits.begin(),
                           profits.end());
    sub.weight_data.insert(sub.weight_data.end(), weights.begin(),
                           weights.end());
  }
  return residual;
}

std::vector<Solution> neighbors(const Instance& inst, const Solution& sol,
                                const Archive& population, int depth,
                                const SubsolverSpec& subsolver,
                                std::uint64_t seed) {
  Rng weight_rng(derive_seed(seed, {kSeedTagAdaptiveWeight}));
  const WeightVector lambda =
      adaptive_weight(sol, population, inst.num_objectives, weight_rng);
  auto [list_out, list_in] = build_lists(inst, sol, lambda, depth);
  const ResidualProblem residual =
      build_residual(inst, sol, list_out, list_in);

  Archive sub_front;
  if (subsolver.kind == SubsolverKind::kExact) {
    sub_front = solve_exact_bb(residual.sub_instance);
  } else {
    sub_front =
        solve_memots_lite(residual.sub_instance, subsolver.iterations,
                          derive_seed(seed, {kSeedTagSubsolver}));
  }

  std::vector<Solution> result;
  result.reserve(sub_front.size());
  for (const auto& sub_sol : sub_front) {
    Solution neighbor = sol;
    for (std::size_t t = 0; t < residual.candidate_items.size(); ++t)
      neighbor.set_flag(inst, residual.candidate_items[t],
                        sub_sol.flags[t] != 0);
    assert(neighbor.feasible());
    result.push_back(std::move(neighbor));
  }
  return result;
}

}  // namespace momkp
