#include "mvrp/instances.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace mvrp {

namespace {

constexpr int kInstanceFormatVersion = 1;
constexpr int kSolutionFormatVersion = 1;

// Shortest representation that round-trips a double exactly.
std::string fmt_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

// --- line scanner -----------------------------------------------------------

// Splits a file into whitespace-tokenized lines, skipping blank lines, and
// hands them out one at a time with 1-based line numbers for diagnostics.
class LineScanner {
 public:
  explicit LineScanner(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int number = 0;
    while (std::getline(stream, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream tokens(line);
      std::vector<std::string> parts;
      std::string token;
      while (tokens >> token) parts.push_back(token);
      if (parts.empty()) continue;
      lines_.push_back({number, std::move(parts)});
    }
  }

  bool done() const { return next_ >= lines_.size(); }

  // Line number of the most recently consumed line, so diagnostics about a
  // field's values point at the line that carries them (0 before any read).
  int line_number() const { return last_line_; }

  // Line number of the next unread line, for errors about content that should
  // not be there at all; falls back to the last consumed line at end of file.
  int next_line_number() const { return done() ? last_line_ : lines_[next_].number; }

  // Consumes the next line, which must start with `field`; returns its value
  // tokens. Throws ParseError when the file ends or another field appears.
  std::vector<std::string> expect(const std::string& field) {
    if (done()) {
      throw ParseError("unexpected end of file, expected '" + field + "'", last_line_, field);
    }
    const Line& line = lines_[next_];
    if (line.tokens[0] != field) {
      throw ParseError("expected '" + field + "', found '" + line.tokens[0] + "'",
                       line.number, field);
    }
    ++next_;
    last_line_ = line.number;
    return {line.tokens.begin() + 1, line.tokens.end()};
  }

  // Like expect(), but returns false (consuming nothing) when the next line
  // does not start with `field`.
  bool accept(const std::string& field, std::vector<std::string>& values) {
    if (done() || lines_[next_].tokens[0] != field) return false;
    values.assign(lines_[next_].tokens.begin() + 1, lines_[next_].tokens.end());
    last_line_ = lines_[next_].number;
    ++next_;
    return true;
  }

 private:
  struct Line {
    int number;
    std::vector<std::string> tokens;
  };
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int last_line_ = 0;
};

double parse_real(const std::string& token, int line, const std::string& field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("'" + token + "' is not a real number", line, field);
  }
  return value;
}

long long parse_int(const std::string& token, int line, const std::string& field) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("'" + token + "' is not an integer", line, field);
  }
  return value;
}

void require_count(const std::vector<std::string>& values, std::size_t count, int line,
                   const std::string& field) {
  if (values.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " value(s), found " +
                     std::to_string(values.size()), line, field);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string to_string(InstanceClass klass) {
  switch (klass) {
    case InstanceClass::small: return "small";
    case InstanceClass::medium: return "medium";
    case InstanceClass::large: return "large";
    case InstanceClass::custom: return "custom";
  }
  return "?";
}

std::vector<double> default_hri_table(int capacity) {
  std::vector<double> table(capacity + 1, 0.0);
  for (int n = 1; n <= capacity; ++n) {
    table[n] = 10.0 * n + (n >= 5 ? 50.0 : 0.0);
  }
  return table;
}

GeneratorSpec small_spec(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.klass = InstanceClass::small;
  spec.num_pois = 5;
  spec.num_vehicles = 2;
  spec.seed = seed;
  return spec;
}

GeneratorSpec medium_spec(std::uint64_t seed, bool alternate_vehicles) {
  GeneratorSpec spec;
  spec.klass = InstanceClass::medium;
  spec.num_pois = 20;
  spec.num_vehicles = alternate_vehicles ? 5 : 3;
  spec.seed = seed;
  return spec;
}

GeneratorSpec large_spec(std::uint64_t seed, bool alternate_vehicles) {
  GeneratorSpec spec;
  spec.klass = InstanceClass::large;
  spec.num_pois = 40;
  spec.num_vehicles = alternate_vehicles ? 8 : 6;
  spec.seed = seed;
  return spec;
}

Instance generate(const GeneratorSpec& spec) {
  if (spec.num_pois < 1) throw std::invalid_argument("spec: num_pois must be >= 1");
  if (spec.num_vehicles < 1) throw std::invalid_argument("spec: num_vehicles must be >= 1");
  if (!(spec.coord_low < spec.coord_high)) {
    throw std::invalid_argument("spec: coord_low must be < coord_high");
  }
  if (spec.capacity < 1) throw std::invalid_argument("spec: capacity must be >= 1");
  if (spec.demand_low < 1 || spec.demand_high > spec.capacity ||
      spec.demand_low > spec.demand_high) {
    throw std::invalid_argument("spec: demand range must satisfy 1 <= low <= high <= capacity");
  }

  Instance instance;
  instance.num_vehicles = spec.num_vehicles;
  instance.ugv_capacity = spec.capacity;
  instance.hri_table = spec.hri_table.empty() ? default_hri_table(spec.capacity)
                                              : spec.hri_table;
  instance.team_cost = spec.team_cost;
  instance.weights = spec.weights;

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coord(spec.coord_low, spec.coord_high);
  std::uniform_int_distribution<int> demand(spec.demand_low, spec.demand_high);

  instance.depot.x = coord(rng);
  instance.depot.y = coord(rng);
  instance.pois.reserve(spec.num_pois);
  for (int i = 0; i < spec.num_pois; ++i) {
    Poi poi;
    poi.id = i + 1;
    poi.location.x = coord(rng);
    poi.location.y = coord(rng);
    poi.ugv_demand = demand(rng);
    instance.pois.push_back(poi);
  }

  const std::vector<std::string> problems = instance.validate();
  if (!problems.empty()) {
    // Can only happen with a custom hri_table that breaks the invariants.
    throw std::invalid_argument("spec yields invalid instance: " + problems.front());
  }
  return instance;
}

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error([&problems] {
        std::string message = "invalid instance:";
        for (const std::string& p : problems) message += "\n  - " + p;
        return message;
      }()),
      problems_(std::move(problems)) {}

std::string instance_to_string(const Instance& instance) {
  std::ostringstream out;
  out << "mvrp-instance " << kInstanceFormatVersion << '\n';
  out << "capacity " << instance.ugv_capacity << '\n';
  out << "team_cost " << fmt_real(instance.team_cost) << '\n';
  out << "num_vehicles " << instance.num_vehicles << '\n';
  if (instance.hri_at_depot) out << "hri_at_depot 1\n";
  out << "weights " << fmt_real(instance.weights.alpha) << ' '
      << fmt_real(instance.weights.beta) << ' ' << fmt_real(instance.weights.gamma) << '\n';
  out << "hri_table";
  for (double h : instance.hri_table) out << ' ' << fmt_real(h);
  out << '\n';
  out << "depot " << fmt_real(instance.depot.x) << ' ' << fmt_real(instance.depot.y) << '\n';
  for (const Poi& poi : instance.pois) {
    out << "poi " << poi.id << ' ' << fmt_real(poi.location.x) << ' '
        << fmt_real(poi.location.y) << ' ' << poi.ugv_demand << '\n';
  }
  return out.str();
}

void write_instance(const Instance& instance, const std::string& path) {
  write_file(path, instance_to_string(instance));
}

Instance read_instance(const std::string& path) {
  LineScanner scanner(read_file(path));

  std::vector<std::string> values = scanner.expect("mvrp-instance");
  require_count(values, 1, scanner.line_number(), "mvrp-instance");
  const long long version = parse_int(values[0], scanner.line_number(), "mvrp-instance");
  if (version != kInstanceFormatVersion) {
    throw ParseError("unsupported format version " + std::to_string(version),
                     scanner.line_number(), "mvrp-instance");
  }

  Instance instance;

  values = scanner.expect("capacity");
  require_count(values, 1, scanner.line_number(), "capacity");
  instance.ugv_capacity = static_cast<int>(parse_int(values[0], scanner.line_number(),
                                                     "capacity"));

  values = scanner.expect("team_cost");
  require_count(values, 1, scanner.line_number(), "team_cost");
  instance.team_cost = parse_real(values[0], scanner.line_number(), "team_cost");

  values = scanner.expect("num_vehicles");
  require_count(values, 1, scanner.line_number(), "num_vehicles");
  instance.num_vehicles = static_cast<int>(parse_int(values[0], scanner.line_number(),
                                                     "num_vehicles"));

  if (scanner.accept("hri_at_depot", values)) {
    require_count(values, 1, scanner.line_number(), "hri_at_depot");
    instance.hri_at_depot = parse_int(values[0], scanner.line_number(), "hri_at_depot") != 0;
  }

  values = scanner.expect("weights");
  require_count(values, 3, scanner.line_number(), "weights");
  instance.weights.alpha = parse_real(values[0], scanner.line_number(), "weights");
  instance.weights.beta = parse_real(values[1], scanner.line_number(), "weights");
  instance.weights.gamma = parse_real(values[2], scanner.line_number(), "weights");

  values = scanner.expect("hri_table");
  require_count(values, static_cast<std::size_t>(instance.ugv_capacity) + 1,
                scanner.line_number(), "hri_table");
  instance.hri_table.reserve(values.size());
  for (const std::string& v : values) {
    instance.hri_table.push_back(parse_real(v, scanner.line_number(), "hri_table"));
  }

  values = scanner.expect("depot");
  require_count(values, 2, scanner.line_number(), "depot");
  instance.depot.x = parse_real(values[0], scanner.line_number(), "depot");
  instance.depot.y = parse_real(values[1], scanner.line_number(), "depot");

  while (!scanner.done()) {
    values = scanner.expect("poi");
    require_count(values, 4, scanner.line_number(), "poi");
    Poi poi;
    poi.id = static_cast<int>(parse_int(values[0], scanner.line_number(), "poi"));
    poi.location.x = parse_real(values[1], scanner.line_number(), "poi");
    poi.location.y = parse_real(values[2], scanner.line_number(), "poi");
    poi.ugv_demand = static_cast<int>(parse_int(values[3], scanner.line_number(), "poi"));
    instance.pois.push_back(poi);
  }

  std::vector<std::string> problems = instance.validate();
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return instance;
}

std::string solution_to_string(const Solution& solution, const CostBreakdown& cost) {
  std::ostringstream out;
  out << "mvrp-solution " << kSolutionFormatVersion << '\n';
  out << "num_routes " << solution.routes.size() << '\n';
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const RoutePlan& plan = solution.routes[r];
    out << "route " << r;
    for (int id : plan.route.pois) out << ' ' << id;
    out << '\n';
    out << "dispatch " << r << ' ' << plan.assignment.initial_dispatch << '\n';
    out << "replenish " << r;
    for (int z : plan.assignment.replenishments) out << ' ' << z;
    out << '\n';
  }
  out << "cost_path " << fmt_real(cost.path_cost) << '\n';
  out << "cost_replenishment " << fmt_real(cost.replenishment_cost) << '\n';
  out << "cost_hri " << fmt_real(cost.hri_cost) << '\n';
  out << "cost_team " << fmt_real(cost.team_cost_total) << '\n';
  out << "cost_total " << fmt_real(cost.total) << '\n';
  return out.str();
}

void write_solution(const Solution& solution, const CostBreakdown& cost,
                    const std::string& path) {
  write_file(path, solution_to_string(solution, cost));
}

std::pair<Solution, CostBreakdown> read_solution(const std::string& path) {
  LineScanner scanner(read_file(path));

  std::vector<std::string> values = scanner.expect("mvrp-solution");
  require_count(values, 1, scanner.line_number(), "mvrp-solution");
  const long long version = parse_int(values[0], scanner.line_number(), "mvrp-solution");
  if (version != kSolutionFormatVersion) {
    throw ParseError("unsupported format version " + std::to_string(version),
                     scanner.line_number(), "mvrp-solution");
  }

  values = scanner.expect("num_routes");
  require_count(values, 1, scanner.line_number(), "num_routes");
  const long long num_routes = parse_int(values[0], scanner.line_number(), "num_routes");
  if (num_routes < 0) {
    throw ParseError("num_routes must be >= 0", scanner.line_number(), "num_routes");
  }

  Solution solution;
  solution.routes.resize(num_routes);
  for (long long r = 0; r < num_routes; ++r) {
    values = scanner.expect("route");
    if (values.empty()) {
      throw ParseError("missing route index", scanner.line_number(), "route");
    }
    const long long index = parse_int(values[0], scanner.line_number(), "route");
    if (index != r) {
      throw ParseError("expected route " + std::to_string(r) + ", found " +
                       std::to_string(index), scanner.line_number(), "route");
    }
    RoutePlan& plan = solution.routes[r];
    for (std::size_t i = 1; i < values.size(); ++i) {
      plan.route.pois.push_back(static_cast<int>(parse_int(values[i], scanner.line_number(),
                                                           "route")));
    }

    values = scanner.expect("dispatch");
    require_count(values, 2, scanner.line_number(), "dispatch");
    if (parse_int(values[0], scanner.line_number(), "dispatch") != r) {
      throw ParseError("dispatch index does not match route " + std::to_string(r),
                       scanner.line_number(), "dispatch");
    }
    plan.assignment.initial_dispatch = static_cast<int>(parse_int(values[1],
                                                                  scanner.line_number(),
                                                                  "dispatch"));

    values = scanner.expect("replenish");
    if (values.empty()) {
      throw ParseError("missing replenish index", scanner.line_number(), "replenish");
    }
    if (parse_int(values[0], scanner.line_number(), "replenish") != r) {
      throw ParseError("replenish index does not match route " + std::to_string(r),
                       scanner.line_number(), "replenish");
    }
    if (values.size() - 1 != plan.route.size()) {
      throw ParseError("expected " + std::to_string(plan.route.size()) +
                       " replenishment value(s), found " + std::to_string(values.size() - 1),
                       scanner.line_number(), "replenish");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      plan.assignment.replenishments.push_back(
          static_cast<int>(parse_int(values[i], scanner.line_number(), "replenish")));
    }
  }

  CostBreakdown cost;
  values = scanner.expect("cost_path");
  require_count(values, 1, scanner.line_number(), "cost_path");
  cost.path_cost = parse_real(values[0], scanner.line_number(), "cost_path");
  values = scanner.expect("cost_replenishment");
  require_count(values, 1, scanner.line_number(), "cost_replenishment");
  cost.replenishment_cost = parse_real(values[0], scanner.line_number(), "cost_replenishment");
  values = scanner.expect("cost_hri");
  require_count(values, 1, scanner.line_number(), "cost_hri");
  cost.hri_cost = parse_real(values[0], scanner.line_number(), "cost_hri");
  values = scanner.expect("cost_team");
  require_count(values, 1, scanner.line_number(), "cost_team");
  cost.team_cost_total = parse_real(values[0], scanner.line_number(), "cost_team");
  values = scanner.expect("cost_total");
  require_count(values, 1, scanner.line_number(), "cost_total");
  cost.total = parse_real(values[0], scanner.line_number(), "cost_total");

  if (!scanner.done()) {
    throw ParseError("unexpected trailing content", scanner.next_line_number(), "end of file");
  }

  return {std::move(solution), cost};
}

}  // namespace mvrp
