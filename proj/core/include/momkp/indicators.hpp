#ifndef MOMKP_INDICATORS_HPP
#define MOMKP_INDICATORS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momkp/archive.hpp"

namespace momkp {

/// A set of points in objective space (profits, so all-nonnegative
/// integers); no structure is assumed beyond that.
struct Front {
  std::vector<std::vector<std::int64_t>> points;

  int num_objectives() const {
    return points.empty() ? 0 : static_cast<int>(points.front().size());
  }
  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

Front front_of(const Archive& archive);

/// Reads the front CSV format produced by write_front_csv (plain objective
/// columns; a flags column is not accepted here).
Front parse_front_csv(const std::string& text);
Front load_front_csv(const std::string& path);

/// Everything the reference-based indicators need. `make_reference_data`
/// fills the conventional defaults: utopian point = componentwise maximum
/// of the reference front scaled by 1.01, hypervolume reference point at
/// the origin, 201 weight vectors for two objectives and 50 otherwise.
struct ReferenceData {
  Front reference_front;
  std::vector<double> utopian_point;
  std::vector<double> hv_reference_point;
  int weight_count = 201;
};

ReferenceData make_reference_data(Front reference);

/// Area dominated by a biobjective front, measured from a reference point
/// that every front point weakly dominates. Dominated and duplicate points
/// are filtered internally. Two objectives only.
double hypervolume_2d(const Front& front, std::span<const double> ref_point);

/// Multiplicative epsilon indicator: the smallest factor by which `approx`
/// must be inflated so that every point of `reference` is weakly dominated.
/// Requires strictly positive components in `approx`.
double eps_indicator(const Front& approx, const Front& reference);

/// Mean weighted Tchebycheff distance from the utopian point over the
/// deterministic weight grid (uniform grid for two objectives, a
/// low-discrepancy simplex sequence otherwise). Lower is better.
double r_metric(const Front& approx, const ReferenceData& refdata);

/// Average and maximal Euclidean distance from each reference point to its
/// nearest approximation point.
std::pair<double, double> d1_d2(const Front& approx, const Front& reference);

/// Share of reference points reproduced exactly (integer equality of the
/// objective vectors).
double proportion_nondominated(const Front& approx, const Front& reference);

struct IndicatorReport {
  std::optional<double> hypervolume;  // two objectives only
  double eps = 0.0;
  double r_value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double p_yn = 0.0;
  std::int64_t pe_count = 0;
};

IndicatorReport assemble_report(const Front& approx,
                                const ReferenceData& refdata);

/// JSON object with keys hypervolume (when present), eps, r, d1, d2, p_yn,
/// pe_count, and the matching one-row CSV for table building.
std::string report_json(const IndicatorReport& report);
std::string report_csv_header();
std::string report_csv_row(const IndicatorReport& report);

}  // namespace momkp

#endif  // MOMKP_INDICATORS_HPP
