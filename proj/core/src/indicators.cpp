#include "momkp/indicators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "momkp/construct.hpp"
#include "momkp/instance.hpp"

namespace momkp {

Front front_of(const Archive& archive) {
  Front front;
  front.points = archive.objective_vectors();
  return front;
}

Front parse_front_csv(const std::string& text) {
  Front front;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::int64_t> point;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      std::size_t end = line.find(',', begin);
      if (end == std::string::npos) end = line.size();
      const std::string field = line.substr(begin, end - begin);
      std::int64_t value = 0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last)
        throw ParseError("line " + std::to_string(line_no) +
                         ": invalid objective value '" + field + "'");
      point.push_back(value);
      begin = end + 1;
      if (end == line.size()) break;
    }
    if (!front.points.empty() && point.size() != front.points.front().size())
      throw ParseError("line " + std::to_string(line_no) +
                       ": inconsistent column count");
    front.points.push_back(std::move(point));
  }
  return front;
}

Front load_front_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open front file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_front_csv(buf.str());
}

ReferenceData make_reference_data(Front reference) {
  if (reference.empty())
    throw std::invalid_argument("reference front must be nonempty");
  ReferenceData data;
  const int p = reference.num_objectives();
  data.utopian_point.assign(p, 0.0);
  for (const auto& point : reference.points)
    for (int k = 0; k < p; ++k)
      data.utopian_point[k] =
          std::max(data.utopian_point[k], static_cast<double>(point[k]));
  for (auto& coordinate : data.utopian_point) coordinate *= 1.01;
  data.hv_reference_point.assign(p, 0.0);
  data.weight_count = p == 2 ? 201 : 50;
  data.reference_front = std::move(reference);
  return data;
}

double hypervolume_2d(const Front& front, std::span<const double> ref_point) {
  if (front.num_objectives() != 2)
    throw std::invalid_argument(
        "hypervolume is only computed for two objectives");
  if (ref_point.size() != 2)
    throw std::invalid_argument("reference point must have two components");
  for (const auto& point : front.points)
    if (static_cast<double>(point[0]) < ref_point[0] ||
        static_cast<double>(point[1]) < ref_point[1])
      throw std::invalid_argument(
          "reference point must be weakly dominated by every front point");

  // Nondominated subset: descending z1, keep strict improvements in z2.
  auto points = front.points;
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a > b; });
  std::vector<std::pair<std::int64_t, std::int64_t>> chain;
  std::int64_t best_z2 = std::numeric_limits<std::int64_t>::min();
  for (const auto& point : points) {
    if (point[1] <= best_z2) continue;
    chain.emplace_back(point[0], point[1]);
    best_z2 = point[1];
  }
  // chain is descending in z1 and ascending in z2; sweep it by ascending z1,
  // adding one vertical slab per point.
  double area = 0.0;
  double prev_z1 = ref_point[0];
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    area += (static_cast<double>(it->first) - prev_z1) *
            (static_cast<double>(it->second) - ref_point[1]);
    prev_z1 = static_cast<double>(it->first);
  }
  return area;
}

double eps_indicator(const Front& approx, const Front& reference) {
  if (approx.empty() || reference.empty())
    throw std::invalid_argument("epsilon indicator needs nonempty fronts");
  if (approx.num_objectives() != reference.num_objectives())
    throw std::invalid_argument("fronts differ in objective count");
  for (const auto& point : approx.points)
    for (auto value : point)
      if (value <= 0)
        throw std::invalid_argument(
            "epsilon indicator needs strictly positive approximation values");

  const int p = approx.num_objectives();
  double worst = 0.0;
  for (const auto& target : reference.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& point : approx.points) {
      double factor = 0.0;
      for (int k = 0; k < p; ++k)
        factor = std::max(factor, static_cast<double>(target[k]) /
                                      static_cast<double>(point[k]));
      best = std::min(best, factor);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

namespace {

double halton(std::uint32_t index, std::uint32_t base) {
  double fraction = 1.0;
  double result = 0.0;
  while (index != 0) {
    fraction /= base;
    result += fraction * (index % base);
    index /= base;
  }
  return result;
}

// Deterministic spread of weight vectors for the R metric: the exact
// uniform grid for two objectives, otherwise sorted Halton coordinates
// whose spacings give simplex points (run-independent by construction).
std::vector<WeightVector> r_weight_grid(int num_objectives, int count) {
  if (num_objectives == 2) return weight_sets(2, count, 0);
  static constexpr std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  std::vector<WeightVector> grid;
  grid.reserve(count);
  std::vector<double> cut(num_objectives + 1);
  for (int i = 1; i <= count; ++i) {
    cut[0] = 0.0;
    for (int d = 0; d < num_objectives - 1; ++d)
      cut[d + 1] = halton(static_cast<std::uint32_t>(i), primes[d]);
    cut[num_objectives] = 1.0;
    std::sort(cut.begin() + 1, cut.end() - 1);
    WeightVector lambda(num_objectives);
    for (int d = 0; d < num_objectives; ++d) lambda[d] = cut[d + 1] - cut[d];
    grid.push_back(std::move(lambda));
  }
  return grid;
}

}  // namespace

double r_metric(const Front& approx, const ReferenceData& refdata) {
  if (approx.empty())
    throw std::invalid_argument("R metric needs a nonempty front");
  if (refdata.weight_count < 1)
    throw std::invalid_argument("weight count must be >= 1");
  const int p = approx.num_objectives();
  if (static_cast<int>(refdata.utopian_point.size()) != p)
    throw std::invalid_argument("utopian point has wrong dimension");

  const auto grid = r_weight_grid(p, refdata.weight_count);
  double total = 0.0;
  for (const auto& lambda : grid) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& point : approx.points) {
      double chebyshev = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < p; ++k)
        chebyshev =
            std::max(chebyshev, lambda[k] * (refdata.utopian_point[k] -
                                             static_cast<double>(point[k])));
      best = std::min(best, chebyshev);
    }
    total += best;
  }
  return total / static_cast<double>(grid.size());
}

std::pair<double, double> d1_d2(const Front& approx, const Front& reference) {
  if (approx.empty() || reference.empty())
    throw std::invalid_argument("distance indicators need nonempty fronts");
  if (approx.num_objectives() != reference.num_objectives())
    throw std::invalid_argument("fronts differ in objective count");
  const int p = approx.num_objectives();
  double sum = 0.0;
  double worst = 0.0;
  for (const auto& target : reference.points) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& point : approx.points) {
      double squared = 0.0;
      for (int k = 0; k < p; ++k) {
        const double delta = static_cast<double>(target[k] - point[k]);
        squared += delta * delta;
      }
      nearest = std::min(nearest, squared);
    }
    const double distance = std::sqrt(nearest);
    sum += distance;
    worst = std::max(worst, distance);
  }
  return {sum / static_cast<double>(reference.size()), worst};
}

double proportion_nondominated(const Front& approx, const Front& reference) {
  if (reference.empty())
    throw std::invalid_argument("reference front must be nonempty");
  std::set<std::vector<std::int64_t>> seen(approx.points.begin(),
                                           approx.points.end());
  std::size_t hits = 0;
  for (const auto& target : reference.points)
    if (seen.count(target) != 0) ++hits;
  return static_cast<double>(hits) / static_cast<double>(reference.size());
}

IndicatorReport assemble_report(const Front& approx,
                                const ReferenceData& refdata) {
  IndicatorReport report;
  const int p = refdata.reference_front.num_objectives();
  if (p == 2)
    report.hypervolume = hypervolume_2d(approx, refdata.hv_reference_point);
  report.eps = eps_indicator(approx, refdata.reference_front);
  report.r_value = r_metric(approx, refdata);
  std::tie(report.d1, report.d2) = d1_d2(approx, refdata.reference_front);
  report.p_yn = proportion_nondominated(approx, refdata.reference_front);
  report.pe_count = static_cast<std::int64_t>(approx.size());
  return report;
}

std::string report_json(const IndicatorReport& report) {
  nlohmann::ordered_json object;
  if (report.hypervolume) object["hypervolume"] = *report.hypervolume;
  object["eps"] = report.eps;
  object["r"] = report.r_value;
  object["d1"] = report.d1;
  object["d2"] = report.d2;
  object["p_yn"] = report.p_yn;
  object["pe_count"] = report.pe_count;
  return object.dump();
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

}  // namespace

std::string report_csv_header() {
  return "hypervolume,eps,r,d1,d2,p_yn,pe_count";
}

std::string report_csv_row(const IndicatorReport& report) {
  std::string row;
  if (report.hypervolume) row += format_double(*report.hypervolume);
  row += ',';
  row += format_double(report.eps);
  row += ',';
  row += format_double(report.r_value);
  row += ',';
  row += format_double(report.d1);
  row += ',';
  row += format_double(report.d2);
  row += ',';
  row += format_double(report.p_yn);
  row += ',';
  row += std::to_string(report.pe_count);
  return row;
}

}  // namespace momkp
