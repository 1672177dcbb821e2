#include "momkp/driver.hpp"

#include <chrono>
#include <stdexcept>

#include "momkp/construct.hpp"
#include "momkp/rng.hpp"
#include "momkp/subsolvers.hpp"

namespace momkp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int effective_iterations(const ParamSet& params) {
  if (params.iterations) return *params.iterations;
  return iteration_schedule(params.list_depth);
}

ParamSet default_params(const Instance& inst) {
  ParamSet params;
  if (inst.num_objectives == 2) {
    params.initial_count = 100;
    if (inst.num_items <= 250) {
      params.list_depth = 9;
      params.iterations = 200;
    } else if (inst.num_items <= 500) {
      params.list_depth = 15;
      params.iterations = 100;
    } else {
      params.list_depth = 9;
      params.iterations = 100;
    }
  } else {
    params.initial_count = 150;
    params.list_depth = 12;
    params.iterations = 200;
  }
  return params;
}

RunResult pls(const Instance& inst, const Archive& initial,
              const ParamSet& params, const PassObserver& observer) {
  if (initial.empty())
    throw std::invalid_argument("pls needs a nonempty initial archive");
  if (params.list_depth < 1)
    throw std::invalid_argument("list depth must be >= 1");

  const SubsolverSpec subsolver{params.subsolver, effective_iterations(params)};
  const auto start = Clock::now();

  RunResult result;
  result.params = params;
  result.front = initial;

  Archive population = initial;
  int pass = 0;
  bool timed_out = false;
  while (!population.empty() && !timed_out) {
    Archive accepted(inst.num_objectives);
    const auto order = population.insertion_order();
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      if (params.time_limit_seconds &&
          seconds_since(start) >= *params.time_limit_seconds) {
        timed_out = true;
        break;
      }
      const Solution& origin = population[order[slot]];
      const std::uint64_t seed =
          derive_seed(params.seed, {kSeedTagPls,
                                    static_cast<std::uint64_t>(pass),
                                    static_cast<std::uint64_t>(slot)});
      auto moves = neighbors(inst, origin, population, params.list_depth,
                             subsolver, seed);
      result.neighbor_count += moves.size();
      for (auto& neighbor : moves) {
        if (weakly_dominates(origin.objectives, neighbor.objectives)) continue;
        if (result.front.add(neighbor)) accepted.add(std::move(neighbor));
      }
    }
    if (timed_out) break;
    ++pass;
    if (observer) observer(pass, result.front);
    population = std::move(accepted);
  }

  result.passes = pass;
  result.converged = !timed_out;
  result.phase2_seconds = seconds_since(start);
  return result;
}

RunResult two_phase_pls(const Instance& inst, const ParamSet& params,
                        const PassObserver& observer) {
  const auto start = Clock::now();
  const Archive initial = initial_population(
      inst, params.initial_count,
      derive_seed(params.seed, {kSeedTagInitialPopulation}));
  const double phase1 = seconds_since(start);

  RunResult result = pls(inst, initial, params, observer);
  result.phase1_seconds = phase1;
  return result;
}

}  // namespace momkp
