#ifndef MOMKP_DRIVER_HPP
#define MOMKP_DRIVER_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "momkp/archive.hpp"
#include "momkp/instance.hpp"
#include "momkp/neighborhood.hpp"

namespace momkp {

/// Run parameters with the benchmark-class defaults studied for this
/// solver; see default_params.
struct ParamSet {
  int initial_count = 100;  // phase-1 weight sets (S)
  int list_depth = 9;       // candidate list size (L)
  SubsolverKind subsolver = SubsolverKind::kMemots;
  std::optional<int> iterations;  // N; schedule(L) when unset (MEMOTS only)
  std::uint64_t seed = 0;
  std::optional<double> time_limit_seconds;
};

/// Effective MEMOTS iteration count: the explicit value, or the linear
/// schedule in the list depth.
int effective_iterations(const ParamSet& params);

/// Class defaults: S = 100 (p = 2) or 150 (p >= 3); (L, N) = (9, 200) for
/// 250-item / (15, 100) for 500-item / (9, 100) for larger biobjective
/// instances, and (12, 200) for three or more objectives.
ParamSet default_params(const Instance& inst);

struct RunResult {
  Archive front;
  ParamSet params;
  double phase1_seconds = 0.0;
  double phase2_seconds = 0.0;
  int passes = 0;
  std::uint64_t neighbor_count = 0;
  bool converged = true;
};

/// Called after each completed Pareto local search pass with the pass index
/// and the archive so far; used by tests and progress reporting.
using PassObserver = std::function<void(int, const Archive&)>;

/// Pareto local search. Starting from `initial`, repeatedly generates all
/// neighbors of every population member (in insertion order, one derived
/// seed per (pass, solution) pair); a neighbor not weakly dominated by its
/// generator is offered to the archive, and accepted ones form the next
/// population. Stops when a pass adds nothing, or at the time limit after
/// finishing the current solution's neighborhood (converged = false).
RunResult pls(const Instance& inst, const Archive& initial,
              const ParamSet& params, const PassObserver& observer = {});

/// Two phases: a greedy weighted-sum population, then Pareto local search
/// on it.
RunResult two_phase_pls(const Instance& inst, const ParamSet& params,
                        const PassObserver& observer = {});

}  // namespace momkp

#endif  // MOMKP_DRIVER_HPP
