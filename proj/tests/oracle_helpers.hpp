// Independent reference implementations used to check the solver modules.
// Everything here is deliberately written from the definitions (plain loops,
// exhaustive enumeration) and shares no code with the library paths it
// audits.

#ifndef MOMKP_TESTS_ORACLE_HELPERS_HPP
#define MOMKP_TESTS_ORACLE_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <momkp/instance.hpp>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline bool weakly_dominates(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

inline bool dominates(const Vec& a, const Vec& b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

// Maximal nondominated subset with one representative per distinct vector,
// first occurrence kept.
inline std::vector<Vec> nondominated(const std::vector<Vec>& points) {
  std::vector<Vec> kept;
  for (const auto& candidate : points) {
    bool covered = false;
    for (const auto& k : kept) {
      if (weakly_dominates(k, candidate)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const Vec& k) { return dominates(candidate, k); }),
               kept.end());
    kept.push_back(candidate);
  }
  return kept;
}

inline std::set<Vec> as_set(const std::vector<Vec>& points) {
  return {points.begin(), points.end()};
}

// Exact front by enumerating all 2^n subsets (Gray-code walk, so each step
// toggles one item).
inline std::set<Vec> enumerate_front(const momkp::Instance& inst) {
  const int n = inst.num_items;
  const int m = inst.num_constraints;
  const int p = inst.num_objectives;
  std::vector<std::int64_t> z(p, 0);
  std::vector<std::int64_t> load(m, 0);
  std::vector<char> in(n, 0);

  std::vector<Vec> feasible;
  auto record = [&]() {
    for (int j = 0; j < m; ++j)
      if (load[j] > inst.capacities[j]) return;
    feasible.push_back(z);
  };

  record();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int item = __builtin_ctzll(step);
    const int sign = in[item] ? -1 : 1;
    in[item] ^= 1;
    for (int k = 0; k < p; ++k) z[k] += sign * inst.profit(item, k);
    for (int j = 0; j < m; ++j) load[j] += sign * inst.weight(item, j);
    record();
  }
  return as_set(nondominated(feasible));
}

}  // namespace oracle

#endif  // MOMKP_TESTS_ORACLE_HELPERS_HPP
