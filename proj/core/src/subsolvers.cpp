#include "momkp/subsolvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "momkp/construct.hpp"
#include "momkp/rng.hpp"
#include "momkp/solution.hpp"

namespace momkp {

double dantzig_bound(std::span<const double> profits,
                     std::span<const double> weights, double capacity) {
  if (profits.size() != weights.size())
    throw std::invalid_argument("profit and weight spans differ in length");
  if (capacity < 0)
    throw std::invalid_argument("capacity must be nonnegative");
  std::vector<std::size_t> order(profits.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double lhs = profits[a] * weights[b];
    const double rhs = profits[b] * weights[a];
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  double value = 0.0;
  double cap = capacity;
  for (auto idx : order) {
    const double w = weights[idx];
    if (w == 0.0) {
      value += profits[idx];
      continue;
    }
    if (w <= cap) {
      value += profits[idx];
      cap -= w;
    } else {
      value += profits[idx] * (cap / w);
      break;
    }
  }
  return value;
}

namespace {

// Depth-first search state. Items are decided strictly in branch order, so
// at depth d the undecided items are exactly those with position >= d; the
// per-(objective, constraint) efficiency orders are precomputed once and
// walked with that filter when bounding a node.
class BbSearch {
 public:
  BbSearch(const Instance& inst, const BbOptions& opt)
      : inst_(inst),
        opt_(opt),
        archive_(inst.num_objectives),
        current_(empty_solution(inst)),
        ideal_(inst.num_objectives, 0) {
    build_orders();
    seed_archive();
  }

  Archive run() {
    dfs(0);
    return std::move(archive_);
  }

  BbStats stats() const { return stats_; }

 private:
  void build_orders() {
    const int n = inst_.num_items;
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::int64_t> profit_sum(n, 0), weight_sum(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < inst_.num_objectives; ++k)
        profit_sum[i] += inst_.profit(i, k);
      for (int j = 0; j < inst_.num_constraints; ++j)
        weight_sum[i] += inst_.weight(i, j);
    }
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      const auto lhs = static_cast<__int128>(profit_sum[a]) * weight_sum[b];
      const auto rhs = static_cast<__int128>(profit_sum[b]) * weight_sum[a];
      if (lhs != rhs) return lhs > rhs;
      return a < b;
    });
    position_.resize(n);
    for (int d = 0; d < n; ++d) position_[order_[d]] = d;

    eff_order_.resize(static_cast<std::size_t>(inst_.num_objectives) *
                      inst_.num_constraints);
    for (int k = 0; k < inst_.num_objectives; ++k) {
      for (int j = 0; j < inst_.num_constraints; ++j) {
        auto& list = eff_order_[static_cast<std::size_t>(k) *
                                    inst_.num_constraints +
                                j];
        list.resize(n);
        std::iota(list.begin(), list.end(), 0);
        std::sort(list.begin(), list.end(), [&](int a, int b) {
          const auto lhs =
              static_cast<__int128>(inst_.profit(a, k)) * inst_.weight(b, j);
          const auto rhs =
              static_cast<__int128>(inst_.profit(b, k)) * inst_.weight(a, j);
          if (lhs != rhs) return lhs > rhs;
          return a < b;
        });
      }
    }
  }

  // A handful of greedy solutions gives the fathom rule something to cut
  // with from the first dive.
  void seed_archive() {
    std::vector<WeightVector> seeds;
    const int p = inst_.num_objectives;
    if (p == 2) {
      seeds = weight_sets(2, 5, 0);
    } else {
      for (int k = 0; k < p; ++k) {
        WeightVector unit(p, 0.0);
        unit[k] = 1.0;
        seeds.push_back(std::move(unit));
      }
      seeds.emplace_back(p, 1.0 / p);
    }
    for (const auto& lambda : seeds)
      archive_.add(greedy_construct(inst_, lambda));
  }

  // Floor of the LP bound on objective k over the undecided items, using
  // constraint j alone; exact integer arithmetic, so fathoming never loses
  // an efficient completion to rounding.
  std::int64_t single_constraint_bound(int k, int j, int depth) const {
    std::int64_t cap = current_.residual[j];
    std::int64_t value = 0;
    const auto& list = eff_order_[static_cast<std::size_t>(k) *
                                      inst_.num_constraints +
                                  j];
    for (int item : list) {
      if (position_[item] < depth) continue;
      const std::int64_t w = inst_.weight(item, j);
      if (w == 0) {
        value += inst_.profit(item, k);
        continue;
      }
      if (w <= cap) {
        value += inst_.profit(item, k);
        cap -= w;
      } else {
        value += static_cast<std::int64_t>(
            static_cast<__int128>(inst_.profit(item, k)) * cap / w);
        break;
      }
    }
    return value;
  }

  bool fathomed(int depth) {
    if (!opt_.ideal_point_fathoming || archive_.empty()) return false;
    for (int k = 0; k < inst_.num_objectives; ++k) {
      std::int64_t bound = std::numeric_limits<std::int64_t>::max();
      for (int j = 0; j < inst_.num_constraints; ++j)
        bound = std::min(bound, single_constraint_bound(k, j, depth));
      ideal_[k] = current_.objectives[k] + bound;
    }
    return archive_.covers(ideal_);
  }

  void dfs(int depth) {
    ++stats_.nodes;
    if (opt_.node_budget && stats_.nodes > *opt_.node_budget)
      throw BudgetExceeded("node budget of " +
                           std::to_string(*opt_.node_budget) +
                           " exceeded; front incomplete");
    if (depth == inst_.num_items) {
      if (!archive_.covers(current_.objectives)) archive_.add(current_);
      return;
    }
    if (fathomed(depth)) return;
    const int item = order_[depth];
    bool fits = true;
    for (int j = 0; j < inst_.num_constraints; ++j) {
      if (inst_.weight(item, j) > current_.residual[j]) {
        fits = false;
        break;
      }
    }
    if (fits) {
      current_.include(inst_, item);
      dfs(depth + 1);
      current_.exclude(inst_, item);
    }
    dfs(depth + 1);
  }

  const Instance& inst_;
  const BbOptions& opt_;
  BbStats stats_;
  Archive archive_;
  Solution current_;
  std::vector<std::int64_t> ideal_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> eff_order_;
};

}  // namespace

Archive solve_exact_bb(const Instance& prob, const BbOptions& options,
                       BbStats* stats) {
  BbSearch search(prob, options);
  Archive front = search.run();
  if (stats != nullptr) *stats = search.stats();
  return front;
}

int iteration_schedule(int list_depth) {
  if (list_depth < 4) return 100;
  return static_cast<int>(std::lround(100.0 + 75.0 / 4.0 * (list_depth - 4)));
}

namespace {

bool fits_in(const Instance& inst, const Solution& sol, int item) {
  for (int j = 0; j < inst.num_constraints; ++j)
    if (inst.weight(item, j) > sol.residual[j]) return false;
  return true;
}

bool swap_fits(const Instance& inst, const Solution& sol, int drop, int add) {
  for (int j = 0; j < inst.num_constraints; ++j)
    if (sol.residual[j] + inst.weight(drop, j) - inst.weight(add, j) < 0)
      return false;
  return true;
}

}  // namespace

Archive solve_memots_lite(const Instance& prob, int iterations,
                          std::uint64_t seed) {
  if (iterations < 0)
    throw std::invalid_argument("iteration count must be nonnegative");
  const int n = prob.num_items;
  const int p = prob.num_objectives;

  Archive archive(p);
  const int init_count = std::max(2, std::min(10, iterations));
  for (const auto& lambda :
       weight_sets(p, init_count, derive_seed(seed, {kSeedTagMemotsInit})))
    archive.add(greedy_construct(prob, lambda));

  Rng rng(derive_seed(seed, {kSeedTagMemotsMain}));
  std::vector<std::uint8_t> child(n);
  std::vector<double> value(n);

  for (int it = 0; it < iterations; ++it) {
    {
      std::size_t ia = 0, ib = 0;
      if (archive.size() > 1) {
        ia = rng.bounded(archive.size());
        ib = rng.bounded(archive.size() - 1);
        if (ib >= ia) ++ib;
      }
      const auto& fa = archive[ia].flags;
      const auto& fb = archive[ib].flags;
      std::uint64_t word = 0;
      int bits = 0;
      for (int i = 0; i < n; ++i) {
        if (bits == 0) {
          word = rng.next();
          bits = 64;
        }
        child[i] = (word & 1) ? fa[i] : fb[i];
        word >>= 1;
        --bits;
      }
    }

    const WeightVector lambda = sample_simplex(p, rng);
    Solution cur = greedy_repair(prob, child, lambda);
    archive.add(cur);

    for (int i = 0; i < n; ++i) {
      double v = 0.0;
      for (int k = 0; k < p; ++k)
        v += lambda[k] * static_cast<double>(prob.profit(i, k));
      value[i] = v;
    }

    // Every feasible neighbor the scan looks at counts as visited and is
    // offered to the archive; a covers() probe keeps the common rejected
    // case allocation-free.
    std::vector<std::int64_t> probe(p);
    auto offer = [&](int drop, int add) {
      for (int k = 0; k < p; ++k) {
        probe[k] = cur.objectives[k];
        if (drop >= 0) probe[k] -= prob.profit(drop, k);
        if (add >= 0) probe[k] += prob.profit(add, k);
      }
      if (archive.covers(probe)) return;
      Solution candidate = cur;
      if (drop >= 0) candidate.exclude(prob, drop);
      if (add >= 0) candidate.include(prob, add);
      archive.add(std::move(candidate));
    };

    // Steepest ascent: best strictly improving flip or swap, ties broken by
    // scan order (flips by index, then swaps by (drop, add) index pairs).
    for (;;) {
      double best_gain = 0.0;
      int best_add = -1, best_drop = -1;
      for (int i = 0; i < n; ++i) {
        if (cur.flags[i]) {
          offer(i, -1);
          if (-value[i] > best_gain) {
            best_gain = -value[i];
            best_add = -1;
            best_drop = i;
          }
        } else if (fits_in(prob, cur, i)) {
          offer(-1, i);
          if (value[i] > best_gain) {
            best_gain = value[i];
            best_add = i;
            best_drop = -1;
          }
        }
      }
      for (int drop = 0; drop < n; ++drop) {
        if (!cur.flags[drop]) continue;
        for (int add = 0; add < n; ++add) {
          if (cur.flags[add]) continue;
          if (!swap_fits(prob, cur, drop, add)) continue;
          offer(drop, add);
          const double gain = value[add] - value[drop];
          if (gain > best_gain) {
            best_gain = gain;
            best_add = add;
            best_drop = drop;
          }
        }
      }
      if (best_gain <= 0.0) break;
      if (best_drop >= 0) cur.exclude(prob, best_drop);
      if (best_add >= 0) cur.include(prob, best_add);
      archive.add(cur);
    }
  }
  return archive;
}

}  // namespace momkp
