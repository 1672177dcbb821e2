#include <momkp/archive.hpp>
#include <momkp/construct.hpp>
#include <momkp/neighborhood.hpp>
#include <momkp/rng.hpp>
#include <momkp/solution.hpp>

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

using namespace momkp;

namespace {

Solution point(std::vector<std::int64_t> objectives) {
  Solution sol;
  sol.objectives = std::move(objectives);
  return sol;
}

Instance make_instance(int n, int m, int p,
                       std::vector<std::int64_t> profits,
                       std::vector<std::int64_t> weights,
                       std::vector<std::int64_t> capacities) {
  Instance inst;
  inst.num_items = n;
  inst.num_constraints = m;
  inst.num_objectives = p;
  inst.profit_data = std::move(profits);
  inst.weight_data = std::move(weights);
  inst.capacities = std::move(capacities);
  return inst;
}

}  // namespace

TEST_CASE("adaptive weights reward the objectives a solution is good at") {
  Rng rng(1);

  Archive population(2);
  population.add(point({10, 0}));
  population.add(point({5, 5}));
  population.add(point({0, 10}));

  const auto balanced = adaptive_weight(population[1], population, 2, rng);
  CHECK(balanced == WeightVector{0.5, 0.5});

  // Best first objective, worst second: all the weight goes to objective 1.
  const Solution* top = nullptr;
  for (const auto& member : population)
    if (member.objectives[0] == 10) top = &member;
  REQUIRE(top != nullptr);
  CHECK(adaptive_weight(*top, population, 2, rng) == WeightVector{1.0, 0.0});
}

TEST_CASE("adaptive weights fall back to 0.5 on degenerate ranges") {
  Rng rng(2);
  Archive population(2);
  population.add(point({7, 3}));
  CHECK(adaptive_weight(population[0], population, 2, rng) ==
        WeightVector{0.5, 0.5});
}

TEST_CASE("adaptive weights for three objectives are simplex draws") {
  Archive population(3);
  population.add(point({1, 2, 3}));
  Rng rng_a(9), rng_b(9);
  const auto a = adaptive_weight(population[0], population, 3, rng_a);
  const auto b = adaptive_weight(population[0], population, 3, rng_b);
  CHECK(a == b);
  double sum = 0.0;
  for (auto component : a) {
    CHECK(component >= 0.0);
    sum += component;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adaptive weights need a population") {
  Rng rng(3);
  Archive empty(2);
  Solution sol = point({1, 1});
  CHECK_THROWS_AS(adaptive_weight(sol, empty, 2, rng), std::invalid_argument);
}

TEST_CASE("lists truncate when the solution is small") {
  const Instance inst = generate_zmkp(10, 2, 6);
  std::vector<std::uint8_t> flags(10, 0);
  flags[2] = flags[7] = 1;
  const Solution sol = evaluate(inst, flags);
  const auto [out_list, in_list] = build_lists(inst, sol, {0.5, 0.5}, 3);
  CHECK(out_list.size() == 2);
  CHECK(in_list.size() == 3);
}

TEST_CASE("cheap items head the removal list") {
  // Item 0: value 3, weight 3 -> R2 = 1. Item 1: value 8, weight 4 -> R2 = 2.
  const Instance inst =
      make_instance(2, 1, 2, {3, 0, 8, 0}, {3, 4}, {10});
  const Solution sol = evaluate(inst, {1, 1});
  const auto [out_list, in_list] = build_lists(inst, sol, {1.0, 0.0}, 2);
  REQUIRE(out_list.size() == 2);
  CHECK(out_list[0] == 0);
  CHECK(out_list[1] == 1);
  CHECK(in_list.empty());
}

TEST_CASE("lists match a full-sort reference on a random instance") {
  const Instance inst = generate_zmkp(30, 2, 77);
  Rng rng(4);
  Solution sol = greedy_construct(inst, {0.5, 0.5});
  for (int i = 0; i < 30; ++i)  // thin the solution out, staying feasible
    if (sol.flags[i] && rng.bounded(2) == 0) sol.exclude(inst, i);
  const WeightVector lambda{0.3, 0.7};
  const int depth = 5;
  const auto [out_list, in_list] = build_lists(inst, sol, lambda, depth);

  auto value_of = [&](int i) {
    return lambda[0] * static_cast<double>(inst.profit(i, 0)) +
           lambda[1] * static_cast<double>(inst.profit(i, 1));
  };

  std::vector<std::pair<double, int>> removal, insertion;
  for (int i = 0; i < 30; ++i) {
    if (sol.flags[i]) {
      const double total =
          static_cast<double>(inst.weight(i, 0) + inst.weight(i, 1));
      removal.emplace_back(value_of(i) / total, i);
    } else {
      double load = 0.0;
      for (int j = 0; j < 2; ++j)
        load += static_cast<double>(inst.weight(i, j)) /
                static_cast<double>(sol.residual[j] + 1);
      insertion.emplace_back(value_of(i) / load, i);
    }
  }
  std::sort(removal.begin(), removal.end());
  std::sort(insertion.begin(), insertion.end());
  std::reverse(insertion.begin(), insertion.end());

  for (std::size_t i = 0; i < out_list.size(); ++i)
    CHECK(out_list[i] == removal[i].second);
  for (std::size_t i = 0; i < in_list.size(); ++i)
    CHECK(in_list[i] == insertion[i].second);
}

TEST_CASE("reduced capacities fix the kept packed items in place") {
  // W = 10, packed items weigh 3 and 4.
  const Instance inst =
      make_instance(3, 1, 2, {5, 5, 6, 6, 7, 7}, {3, 4, 2}, {10});
  const Solution sol = evaluate(inst, {1, 1, 0});

  SUBCASE("only the weight-3 item is released") {
    const auto residual = build_residual(inst, sol, {0}, {2});
    CHECK(residual.reduced_capacities == std::vector<std::int64_t>{6});
    CHECK(residual.sub_instance.num_items == 2);
    CHECK(residual.candidate_items == std::vector<int>{0, 2});
  }
  SUBCASE("releasing every packed item restores the full capacity") {
    const auto residual = build_residual(inst, sol, {0, 1}, {2});
    CHECK(residual.reduced_capacities == std::vector<std::int64_t>{10});
  }
  SUBCASE("an empty solution keeps the full capacity") {
    const Solution empty = empty_solution(inst);
    const auto residual = build_residual(inst, empty, {}, {0, 1, 2});
    CHECK(residual.reduced_capacities == std::vector<std::int64_t>{10});
    CHECK(residual.sub_instance.num_items == 3);
  }
}

TEST_CASE("the no-items edge case yields the solution itself") {
  const Instance inst = make_instance(0, 1, 2, {}, {}, {4});
  const Solution sol = empty_solution(inst);
  Archive population(2);
  population.add(sol);
  const auto moves =
      neighbors(inst, sol, population, 3, {SubsolverKind::kExact, 0}, 1);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0] == sol);
}

TEST_CASE("a single attractive residual item gives exactly one neighbor") {
  const Instance inst = make_instance(1, 1, 2, {4, 9}, {3}, {5});
  const Solution sol = empty_solution(inst);
  Archive population(2);
  population.add(sol);
  const auto moves =
      neighbors(inst, sol, population, 2, {SubsolverKind::kExact, 0}, 1);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].flags == std::vector<std::uint8_t>{1});
  CHECK(moves[0].objectives == std::vector<std::int64_t>{4, 9});
}

TEST_CASE("exact neighbors cover every completion of the fixed part") {
  const Instance inst = generate_zmkp(15, 2, 13);
  const Solution sol = greedy_construct(inst, {0.5, 0.5});
  Archive population(2);
  population.add(sol);
  const int depth = 4;
  const std::uint64_t seed = 99;

  const auto moves =
      neighbors(inst, sol, population, depth, {SubsolverKind::kExact, 0}, seed);
  REQUIRE(!moves.empty());

  for (const auto& neighbor : moves) {
    CHECK(is_feasible(neighbor));
    CHECK(neighbor == evaluate(inst, neighbor.flags));  // additive merge
  }

  // Recover the candidate set by rebuilding the lists the same way.
  Rng weight_rng(derive_seed(seed, {kSeedTagAdaptiveWeight}));
  const auto lambda = adaptive_weight(sol, population, 2, weight_rng);
  const auto [out_list, in_list] = build_lists(inst, sol, lambda, depth);
  std::vector<int> candidates = out_list;
  candidates.insert(candidates.end(), in_list.begin(), in_list.end());

  std::vector<oracle::Vec> neighbor_vectors;
  for (const auto& neighbor : moves) neighbor_vectors.push_back(neighbor.objectives);

  // Every feasible completion over the candidate subspace must be weakly
  // dominated by some neighbor.
  const auto size = candidates.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    auto flags = sol.flags;
    for (std::size_t t = 0; t < size; ++t)
      flags[candidates[t]] = static_cast<std::uint8_t>((mask >> t) & 1);
    const Solution completion = evaluate(inst, flags);
    if (!is_feasible(completion)) continue;
    bool covered = false;
    for (const auto& vector : neighbor_vectors)
      if (oracle::weakly_dominates(vector, completion.objectives)) {
        covered = true;
        break;
      }
    CHECK(covered);
  }
}

TEST_CASE("list selection is invariant under exact weight scaling") {
  const Instance inst = generate_zmkp(25, 2, 15);
  const Solution sol = greedy_construct(inst, {0.6, 0.4});
  const WeightVector lambda{0.6, 0.4};
  WeightVector scaled{0.6 * 8.0, 0.4 * 8.0};
  CHECK(build_lists(inst, sol, lambda, 6) ==
        build_lists(inst, sol, scaled, 6));
}
