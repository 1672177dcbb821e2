#ifndef MOMKP_CONSTRUCT_HPP
#define MOMKP_CONSTRUCT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "momkp/archive.hpp"
#include "momkp/instance.hpp"
#include "momkp/rng.hpp"
#include "momkp/solution.hpp"

namespace momkp {

/// Normalized objective weights: nonnegative components summing to one.
using WeightVector = std::vector<double>;

/// One point drawn uniformly from the unit simplex (exponential spacings).
WeightVector sample_simplex(int num_objectives, Rng& rng);

/// Phase-1 weight sets. Biobjective: the uniform grid
/// (i/(S-1), 1-i/(S-1)), i = 0..S-1, with S=1 collapsing to (0.5, 0.5).
/// Three or more objectives: S uniform simplex samples, one derived seed
/// per vector index so the list is the same under any evaluation order.
std::vector<WeightVector> weight_sets(int num_objectives, int count,
                                      std::uint64_t seed);

/// Greedy attractiveness of an unpacked item at the current residual
/// capacities: (sum_k lambda_k c_k) / (sum_j w_j / (r_j + 1)). An item with
/// all-zero weights scores +infinity (always most attractive).
double ratio_r1(const Instance& inst, int item,
                std::span<const std::int64_t> residual,
                const WeightVector& lambda);

/// Builds one solution by repeatedly packing the fitting item with the best
/// R1 ratio (ties toward the lowest index); items that no longer fit are
/// skipped, and the loop stops when nothing fits. Always feasible.
Solution greedy_construct(const Instance& inst, const WeightVector& lambda);

/// The nondominated set of `count` greedy constructions, one per weight
/// vector from weight_sets. Deterministic in `seed`.
Archive initial_population(const Instance& inst, int count, std::uint64_t seed);

}  // namespace momkp

#endif  // MOMKP_CONSTRUCT_HPP
