#ifndef MOMKP_SUBSOLVERS_HPP
#define MOMKP_SUBSOLVERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "momkp/archive.hpp"
#include "momkp/instance.hpp"

namespace momkp {

/// Raised when solve_exact_bb exhausts its node budget; the search never
/// silently returns a partial front.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// LP-relaxation optimum of a single-constraint knapsack: pack by
/// non-increasing efficiency profit/weight, take the split item
/// fractionally. Zero-weight items are taken fully first.
double dantzig_bound(std::span<const double> profits,
                     std::span<const double> weights, double capacity);

struct BbOptions {
  std::optional<std::uint64_t> node_budget;  // unlimited when empty
  bool ideal_point_fathoming = true;         // rule (b); off only for audits
};

struct BbStats {
  std::uint64_t nodes = 0;
};

/// Exact efficient front (one solution per nondominated objective vector)
/// by depth-first branch and bound. Items are branched in order of
/// decreasing aggregate efficiency sum_k c_k / sum_j w_j, include-branch
/// first; a node dies when the branched item no longer fits, or when its
/// ideal point -- partial objectives plus, per objective, the smallest
/// integer Dantzig bound across constraints on the remaining items -- is
/// weakly dominated by an archived solution.
Archive solve_exact_bb(const Instance& prob, const BbOptions& options = {},
                       BbStats* stats = nullptr);

/// Iteration count for the heuristic subsolver as a function of the list
/// depth L: N = 100 + (75/4)(L - 4), rounded to nearest; L below 4 clamps
/// to 100.
int iteration_schedule(int list_depth);

/// Simplified memetic subsolver: archive seeded with a few greedy
/// constructions, then `iterations` rounds of
///   - two parents drawn uniformly from the archive (one if singleton),
///   - uniform crossover on the flags,
///   - greedy repair under a fresh random simplex weight vector,
///   - steepest-ascent weighted-sum local search (single flips and swaps,
///     same weights) until no improving move remains,
/// archiving every feasible solution the search visits, evaluated
/// neighbors included. No density grid, no tabu memory. Deterministic in
/// `seed`.
Archive solve_memots_lite(const Instance& prob, int iterations,
                          std::uint64_t seed);

}  // namespace momkp

#endif  // MOMKP_SUBSOLVERS_HPP
