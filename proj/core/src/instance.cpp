#include "momkp/instance.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>

#include "momkp/rng.hpp"

namespace momkp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::int64_t> parse_ints(const std::string& rest, int line,
                                     const char* what) {
  std::vector<std::int64_t> out;
  std::istringstream in(rest);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail(line, std::string("invalid ") + what + " token '" + token + "'");
    }
    if (used != token.size())
      fail(line, std::string("invalid ") + what + " token '" + token + "'");
    if (value < 0)
      fail(line, std::string("negative ") + what + " (" + token + ")");
    out.push_back(value);
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings) {
  Instance inst;
  bool have_header = false;
  bool have_capacities = false;
  int items_seen = 0;
  int header_line = 0;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    std::string rest;
    std::getline(ls, rest);

    if (tag == "c") continue;

    if (tag == "p") {
      if (have_header) fail(line_no, "duplicate header line");
      std::istringstream hs(rest);
      std::string format;
      long long n = 0, m = 0, p = 0;
      if (!(hs >> format >> n >> m >> p) || format != "momkp")
        fail(line_no, "malformed header, expected 'p momkp <n> <m> <p>'");
      std::string extra;
      if (hs >> extra) fail(line_no, "malformed header, trailing tokens");
      if (n <= 0) fail(line_no, "n must be positive");
      if (m <= 0) fail(line_no, "m must be positive");
      if (p < 2) fail(line_no, "p must be at least 2");
      inst.num_items = static_cast<int>(n);
      inst.num_constraints = static_cast<int>(m);
      inst.num_objectives = static_cast<int>(p);
      inst.profit_data.reserve(static_cast<std::size_t>(n) * p);
      inst.weight_data.reserve(static_cast<std::size_t>(n) * m);
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (!have_header) fail(line_no, "'" + tag + "' line before header");

    if (tag == "w") {
      if (have_capacities) fail(line_no, "duplicate capacities line");
      auto values = parse_ints(rest, line_no, "capacity");
      if (static_cast<int>(values.size()) != inst.num_constraints)
        fail(line_no, "expected " + std::to_string(inst.num_constraints) +
                          " capacities, got " + std::to_string(values.size()));
      inst.capacities = std::move(values);
      have_capacities = true;
      continue;
    }

    if (tag == "i") {
      if (!have_capacities) fail(line_no, "item line before capacities line");
      if (items_seen == inst.num_items)
        fail(line_no,
             "expected " + std::to_string(inst.num_items) + " item lines");
      auto values = parse_ints(rest, line_no, "coefficient");
      const int want = inst.num_objectives + inst.num_constraints;
      if (static_cast<int>(values.size()) != want)
        fail(line_no, "expected " + std::to_string(inst.num_objectives) +
                          " profits and " +
                          std::to_string(inst.num_constraints) +
                          " weights, got " + std::to_string(values.size()) +
                          " values");
      inst.profit_data.insert(inst.profit_data.end(), values.begin(),
                              values.begin() + inst.num_objectives);
      inst.weight_data.insert(inst.weight_data.end(),
                              values.begin() + inst.num_objectives,
                              values.end());
      ++items_seen;
      continue;
    }

    fail(line_no, "unknown line tag '" + tag + "'");
  }

  if (!have_header) throw ParseError("missing 'p momkp' header line");
  if (!have_capacities)
    fail(header_line, "missing capacities line after header");
  if (items_seen != inst.num_items)
    throw ParseError("expected " + std::to_string(inst.num_items) +
                     " item lines, got " + std::to_string(items_seen));

  if (warnings != nullptr) {
    for (int i = 0; i < inst.num_items; ++i) {
      for (int j = 0; j < inst.num_constraints; ++j) {
        if (inst.weight(i, j) > inst.capacities[j]) {
          warnings->push_back("item " + std::to_string(i + 1) +
                              " does not fit alone in constraint " +
                              std::to_string(j + 1));
          break;
        }
      }
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p momkp " << inst.num_items << ' ' << inst.num_constraints << ' '
      << inst.num_objectives << '\n';
  out << 'w';
  for (auto cap : inst.capacities) out << ' ' << cap;
  out << '\n';
  for (int i = 0; i < inst.num_items; ++i) {
    out << 'i';
    for (int k = 0; k < inst.num_objectives; ++k) out << ' ' << inst.profit(i, k);
    for (int j = 0; j < inst.num_constraints; ++j) out << ' ' << inst.weight(i, j);
    out << '\n';
  }
  return out.str();
}

Instance generate_uniform(int num_items, int num_constraints,
                          int num_objectives, std::uint64_t seed) {
  if (num_items < 1) throw std::invalid_argument("item count must be positive");
  if (num_constraints < 1)
    throw std::invalid_argument("constraint count must be positive");
  if (num_objectives < 2)
    throw std::invalid_argument("objective count must be at least 2");

  Instance inst;
  inst.num_items = num_items;
  inst.num_constraints = num_constraints;
  inst.num_objectives = num_objectives;
  inst.profit_data.resize(static_cast<std::size_t>(num_items) * num_objectives);
  inst.weight_data.resize(static_cast<std::size_t>(num_items) * num_constraints);
  inst.capacities.assign(num_constraints, 0);

  Rng rng(seed);
  for (int i = 0; i < num_items; ++i) {
    for (int k = 0; k < num_objectives; ++k)
      inst.profit_data[static_cast<std::size_t>(i) * num_objectives + k] =
          rng.uniform_int(10, 100);
    for (int j = 0; j < num_constraints; ++j)
      inst.weight_data[static_cast<std::size_t>(i) * num_constraints + j] =
          rng.uniform_int(10, 100);
  }
  for (int j = 0; j < num_constraints; ++j) {
    std::int64_t total = 0;
    for (int i = 0; i < num_items; ++i) total += inst.weight(i, j);
    inst.capacities[j] = total / 2;  // floor of half the column weight
  }
  return inst;
}

Instance generate_zmkp(int num_items, int num_objectives, std::uint64_t seed) {
  if (num_objectives < 2 || num_objectives > 4)
    throw std::invalid_argument("unsupported objective count " +
                                std::to_string(num_objectives) +
                                ", expected 2, 3 or 4");
  return generate_uniform(num_items, num_objectives, num_objectives, seed);
}

Instance load_instance_file(const std::string& path,
                            std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), warnings);
}

}  // namespace momkp
