#ifndef MOMKP_INSTANCE_HPP
#define MOMKP_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace momkp {

/// Error raised by the instance/front parsers; the message names the
/// offending line when one is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 0/1 multidimensional multiobjective knapsack instance: `num_items`
/// items, each with `num_objectives` profits and `num_constraints` weights,
/// plus one capacity per constraint. All coefficients are nonnegative.
struct Instance {
  int num_items = 0;
  int num_constraints = 0;
  int num_objectives = 0;
  std::vector<std::int64_t> profit_data;  // num_items x num_objectives, row-major
  std::vector<std::int64_t> weight_data;  // num_items x num_constraints, row-major
  std::vector<std::int64_t> capacities;   // num_constraints

  std::int64_t profit(int item, int objective) const {
    return profit_data[static_cast<std::size_t>(item) * num_objectives + objective];
  }
  std::int64_t weight(int item, int constraint) const {
    return weight_data[static_cast<std::size_t>(item) * num_constraints + constraint];
  }
  std::span<const std::int64_t> item_profits(int item) const {
    return {profit_data.data() + static_cast<std::size_t>(item) * num_objectives,
            static_cast<std::size_t>(num_objectives)};
  }
  std::span<const std::int64_t> item_weights(int item) const {
    return {weight_data.data() + static_cast<std::size_t>(item) * num_constraints,
            static_cast<std::size_t>(num_constraints)};
  }

  bool operator==(const Instance&) const = default;
};

/// Parses the canonical text format (see README / serialize_instance).
/// Malformed input raises ParseError with the line number. Non-fatal
/// oddities (an item that cannot fit alone) are appended to `warnings`
/// when a sink is given.
Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);

/// Canonical serialization:
///   p momkp <n> <m> <p>
///   w <W_1> ... <W_m>
///   i <c_1> ... <c_p> <w_1> ... <w_m>     (one line per item, in index order)
/// Space-separated decimal integers, LF line endings, no comments.
/// parse_instance(serialize_instance(x)) == x, bit-exactly.
std::string serialize_instance(const Instance& inst);

/// Random instance in the classic benchmark scheme with an explicit number
/// of constraints: every profit and weight uniform in [10, 100], capacities
/// floor(0.5 * column weight sum). Deterministic in `seed` (xoshiro256**
/// stream; per item, profits are drawn first, then weights).
Instance generate_uniform(int num_items, int num_constraints,
                          int num_objectives, std::uint64_t seed);

/// The standard scheme: as generate_uniform with m = p. Supported
/// objective counts are 2, 3 and 4.
Instance generate_zmkp(int num_items, int num_objectives, std::uint64_t seed);

Instance load_instance_file(const std::string& path,
                            std::vector<std::string>* warnings = nullptr);

}  // namespace momkp

#endif  // MOMKP_INSTANCE_HPP
