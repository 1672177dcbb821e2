#include "momkp/construct.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace momkp {

WeightVector sample_simplex(int num_objectives, Rng& rng) {
  WeightVector lambda(num_objectives);
  double sum = 0.0;
  for (auto& component : lambda) {
    component = -std::log1p(-rng.uniform01());
    sum += component;
  }
  if (sum == 0.0) {
    for (auto& component : lambda) component = 1.0 / num_objectives;
    return lambda;
  }
  for (auto& component : lambda) component /= sum;
  return lambda;
}

std::vector<WeightVector> weight_sets(int num_objectives, int count,
                                      std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("weight set count must be >= 1");
  std::vector<WeightVector> sets;
  sets.reserve(count);
  if (num_objectives == 2) {
    if (count == 1) {
      sets.push_back({0.5, 0.5});
      return sets;
    }
    for (int i = 0; i < count; ++i) {
      const double a = static_cast<double>(i) / (count - 1);
      sets.push_back({a, 1.0 - a});
    }
    return sets;
  }
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {kSeedTagWeightVector,
                               static_cast<std::uint64_t>(i)}));
    sets.push_back(sample_simplex(num_objectives, rng));
  }
  return sets;
}

double ratio_r1(const Instance& inst, int item,
                std::span<const std::int64_t> residual,
                const WeightVector& lambda) {
  double value = 0.0;
  for (int k = 0; k < inst.num_objectives; ++k)
    value += lambda[k] * static_cast<double>(inst.profit(item, k));
  double load = 0.0;
  for (int j = 0; j < inst.num_constraints; ++j)
    load += static_cast<double>(inst.weight(item, j)) /
            static_cast<double>(residual[j] + 1);
  if (load == 0.0) return std::numeric_limits<double>::infinity();
  return value / load;
}

Solution greedy_construct(const Instance& inst, const WeightVector& lambda) {
  Solution sol = empty_solution(inst);
  std::vector<double> value(inst.num_items, 0.0);
  for (int i = 0; i < inst.num_items; ++i)
    for (int k = 0; k < inst.num_objectives; ++k)
      value[i] += lambda[k] * static_cast<double>(inst.profit(i, k));

  for (;;) {
    int best = -1;
    double best_ratio = -1.0;
    for (int i = 0; i < inst.num_items; ++i) {
      if (sol.flags[i]) continue;
      bool fits = true;
      double load = 0.0;
      for (int j = 0; j < inst.num_constraints; ++j) {
        const std::int64_t w = inst.weight(i, j);
        if (w > sol.residual[j]) {
          fits = false;
          break;
        }
        load += static_cast<double>(w) / static_cast<double>(sol.residual[j] + 1);
      }
      if (!fits) continue;
      const double ratio = load == 0.0
                               ? std::numeric_limits<double>::infinity()
                               : value[i] / load;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (best < 0) break;
    sol.include(inst, best);
  }
  return sol;
}

Archive initial_population(const Instance& inst, int count,
                           std::uint64_t seed) {
  Archive archive(inst.num_objectives);
  for (const auto& lambda : weight_sets(inst.num_objectives, count, seed))
    archive.add(greedy_construct(inst, lambda));
  return archive;
}

}  // namespace momkp
