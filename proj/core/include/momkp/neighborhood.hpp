#ifndef MOMKP_NEIGHBORHOOD_HPP
#define MOMKP_NEIGHBORHOOD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "momkp/archive.hpp"
#include "momkp/construct.hpp"
#include "momkp/instance.hpp"
#include "momkp/solution.hpp"

namespace momkp {

/// Which solver handles the residual problems, and with how many
/// iterations when the heuristic one is chosen.
enum class SubsolverKind { kExact, kMemots };

struct SubsolverSpec {
  SubsolverKind kind = SubsolverKind::kExact;
  int iterations = 0;  // MEMOTS only
};

/// A small knapsack instance induced by the candidate lists around a
/// current solution: items outside the lists keep their flags, and the
/// capacities are reduced by the weight of the kept packed items.
struct ResidualProblem {
  Solution base;
  std::vector<int> candidate_items;            // L1 then L2, original indices
  std::vector<std::int64_t> reduced_capacities;
  Instance sub_instance;
};

/// Objective weights for exploring around `sol`. Biobjective: min-max
/// normalized rank of sol's objectives within the population (0.5 on a
/// degenerate range), renormalized to sum one -- the better sol scores on
/// an objective, the larger that objective's weight. Three or more
/// objectives: a uniform simplex draw from `rng`.
WeightVector adaptive_weight(const Solution& sol, const Archive& population,
                             int num_objectives, Rng& rng);

/// Candidate lists of depth at most L: L1 holds included items with the
/// smallest ratio R2 = weighted profit / total weight (cheapest to give
/// up), L2 holds excluded items with the largest greedy ratio R1 at sol's
/// residual capacities. Ties break toward the lowest index; short lists
/// are simply truncated.
std::pair<std::vector<int>, std::vector<int>> build_lists(
    const Instance& inst, const Solution& sol, const WeightVector& lambda,
    int depth);

ResidualProblem build_residual(const Instance& inst, const Solution& sol,
                               const std::vector<int>& list_out,
                               const std::vector<int>& list_in);

/// The very-large-scale neighborhood of `sol`: solve the residual problem,
/// then graft each of its (potentially) efficient solutions onto sol's
/// fixed part. Every neighbor is feasible; the list may contain sol itself
/// when its restriction is efficient in the residual.
std::vector<Solution> neighbors(const Instance& inst, const Solution& sol,
                                const Archive& population, int depth,
                                const SubsolverSpec& subsolver,
                                std::uint64_t seed);

}  // namespace momkp

#endif  // MOMKP_NEIGHBORHOOD_HPP
