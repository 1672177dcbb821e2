#ifndef MOMKP_ARCHIVE_HPP
#define MOMKP_ARCHIVE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "momkp/solution.hpp"

namespace momkp {

/// Pareto dominance in maximization orientation: a >= b componentwise with
/// at least one strict index.
bool dominates(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// a >= b componentwise (equality allowed everywhere).
bool weakly_dominates(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b);

/// A mutually nondominated set of feasible solutions with unique objective
/// vectors; the evolving approximation of the efficient set.
///
/// Adding a solution that is weakly dominated by a member (equal vectors
/// included) is a no-op; otherwise the solution enters and every member it
/// dominates leaves. Fronts routinely grow to tens of thousands of points,
/// so the biobjective archive is kept sorted by the first objective and
/// queried by binary search; higher dimensions fall back to linear scans in
/// insertion order.
class Archive {
 public:
  Archive() = default;
  explicit Archive(int num_objectives) : p_(num_objectives) {}

  /// AddSolution: returns true when `sol` entered the archive.
  bool add(Solution sol);

  /// True when some member weakly dominates `objectives`.
  bool covers(std::span<const std::int64_t> objectives) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int num_objectives() const { return p_; }

  /// Storage order: ascending first objective for p == 2, insertion order
  /// otherwise.
  const std::vector<Solution>& members() const { return members_; }
  const Solution& operator[](std::size_t i) const { return members_[i]; }

  /// Indices of members() sorted by insertion recency (oldest first).
  std::vector<std::size_t> insertion_order() const;

  std::vector<std::vector<std::int64_t>> objective_vectors() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  bool add2(Solution&& sol);
  bool addk(Solution&& sol);

  int p_ = 0;
  std::uint64_t next_seq_ = 0;
  std::vector<Solution> members_;
  std::vector<std::uint64_t> seq_;
};

/// Bulk AddSolution: the maximal nondominated subset of `points`, keeping
/// the first occurrence of each distinct objective vector.
Archive nondominated_filter(const std::vector<Solution>& points);

/// Front export: one line per member, comma-separated objective values,
/// sorted lexicographically descending; optionally a trailing 0/1 flag
/// string column.
void write_front_csv(const Archive& archive, std::ostream& out,
                     bool include_flags = false);
std::string front_csv(const Archive& archive, bool include_flags = false);

}  // namespace momkp

#endif  // MOMKP_ARCHIVE_HPP
