#include "momkp/archive.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace momkp {

bool dominates(std::span<const std::int64_t> a,
               std::span<const std::int64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("objective vectors differ in length");
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

bool weakly_dominates(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("objective vectors differ in length");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

bool Archive::add(Solution sol) {
  if (!sol.feasible())
    throw std::logic_error("attempt to archive an infeasible solution");
  if (p_ == 0) p_ = static_cast<int>(sol.objectives.size());
  if (static_cast<int>(sol.objectives.size()) != p_)
    throw std::invalid_argument("solution objective count does not match archive");
  return p_ == 2 ? add2(std::move(sol)) : addk(std::move(sol));
}

// Biobjective archive: members_ sorted by ascending z1, hence strictly
// descending z2. The first member with z1 >= cand.z1 carries the largest z2
// among all such members, so one lookup decides weak dominance, and members
// dominated by the candidate form a contiguous run just below it.
bool Archive::add2(Solution&& sol) {
  const std::int64_t z1 = sol.objectives[0];
  const std::int64_t z2 = sol.objectives[1];
  auto lb = std::lower_bound(
      members_.begin(), members_.end(), z1,
      [](const Solution& m, std::int64_t v) { return m.objectives[0] < v; });
  if (lb != members_.end() && lb->objectives[1] >= z2) return false;

  auto erase_end = lb;
  if (erase_end != members_.end() && erase_end->objectives[0] == z1)
    ++erase_end;  // equal z1 with smaller z2: dominated
  auto erase_begin = lb;
  while (erase_begin != members_.begin() &&
         std::prev(erase_begin)->objectives[1] <= z2)
    --erase_begin;

  const auto b = static_cast<std::size_t>(erase_begin - members_.begin());
  const auto e = static_cast<std::size_t>(erase_end - members_.begin());
  members_.erase(members_.begin() + b, members_.begin() + e);
  seq_.erase(seq_.begin() + b, seq_.begin() + e);
  members_.insert(members_.begin() + b, std::move(sol));
  seq_.insert(seq_.begin() + b, next_seq_++);
  return true;
}

bool Archive::addk(Solution&& sol) {
  for (const auto& member : members_)
    if (weakly_dominates(member.objectives, sol.objectives)) return false;

  std::size_t kept = 0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (dominates(sol.objectives, members_[i].objectives)) continue;
    if (kept != i) {
      members_[kept] = std::move(members_[i]);
      seq_[kept] = seq_[i];
    }
    ++kept;
  }
  members_.resize(kept);
  seq_.resize(kept);
  members_.push_back(std::move(sol));
  seq_.push_back(next_seq_++);
  return true;
}

bool Archive::covers(std::span<const std::int64_t> objectives) const {
  if (static_cast<int>(objectives.size()) != p_)
    throw std::invalid_argument("objective vector length does not match archive");
  if (p_ == 2) {
    auto lb = std::lower_bound(members_.begin(), members_.end(), objectives[0],
                               [](const Solution& m, std::int64_t v) {
                                 return m.objectives[0] < v;
                               });
    return lb != members_.end() && lb->objectives[1] >= objectives[1];
  }
  for (const auto& member : members_)
    if (weakly_dominates(member.objectives, objectives)) return true;
  return false;
}

std::vector<std::size_t> Archive::insertion_order() const {
  std::vector<std::size_t> order(members_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return seq_[a] < seq_[b]; });
  return order;
}

std::vector<std::vector<std::int64_t>> Archive::objective_vectors() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(members_.size());
  for (const auto& member : members_) out.push_back(member.objectives);
  return out;
}

Archive nondominated_filter(const std::vector<Solution>& points) {
  Archive archive;
  for (const auto& point : points) archive.add(point);
  return archive;
}

void write_front_csv(const Archive& archive, std::ostream& out,
                     bool include_flags) {
  std::vector<std::size_t> order(archive.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return archive[a].objectives > archive[b].objectives;
  });
  for (auto idx : order) {
    const Solution& sol = archive[idx];
    for (std::size_t k = 0; k < sol.objectives.size(); ++k) {
      if (k > 0) out << ',';
      out << sol.objectives[k];
    }
    if (include_flags) {
      out << ',';
      for (auto flag : sol.flags) out << (flag ? '1' : '0');
    }
    out << '\n';
  }
}

std::string front_csv(const Archive& archive, bool include_flags) {
  std::ostringstream out;
  write_front_csv(archive, out, include_flags);
  return out.str();
}

}  // namespace momkp
