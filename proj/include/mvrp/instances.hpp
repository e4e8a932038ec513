#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvrp/model.hpp"

namespace mvrp {

enum class InstanceClass { small, medium, large, custom };

std::string to_string(InstanceClass klass);

// Default HRI cost table for a given capacity: 10*n per team member up to
// four, with a +50 jump from five on (one human supervises at most four
// comfortably). Always h[0] = 0.
std::vector<double> default_hri_table(int capacity);

struct GeneratorSpec {
  InstanceClass klass = InstanceClass::custom;
  int num_pois = 0;
  int num_vehicles = 0;
  double coord_low = 0.0;
  double coord_high = 100.0;
  int demand_low = 1;
  int demand_high = 12;
  int capacity = 12;
  std::vector<double> hri_table;  // empty -> default_hri_table(capacity)
  double team_cost = 50.0;
  // Path-first emphasis; one of the published sum-to-one settings.
  Weights weights{0.6, 0.1, 0.3};
  std::uint64_t seed = 0;
};

// Class presets. medium/large have two published vehicle counts; the
// alternate flag selects the larger one (5 instead of 3, 8 instead of 6).
GeneratorSpec small_spec(std::uint64_t seed);
GeneratorSpec medium_spec(std::uint64_t seed, bool alternate_vehicles = false);
GeneratorSpec large_spec(std::uint64_t seed, bool alternate_vehicles = false);

// Draws a random instance; a pure function of the spec (seed included).
// Throws std::invalid_argument for invalid specs.
Instance generate(const GeneratorSpec& spec);

// File-format errors carry the offending line (1-based, 0 when the problem
// is not tied to one line) and the field being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, std::string field)
      : std::runtime_error("line " + std::to_string(line) + ", field '" + field +
                           "': " + message),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// A structurally well-formed file whose contents violate the Instance
// invariants; carries every violated invariant, one message each.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Line-oriented text serialization; see docs/format.md for the frozen
// schemas. Reals are written with 17 significant digits, so the round trip
// read(write(x)) == x is exact for all finite values.
void write_instance(const Instance& instance, const std::string& path);
Instance read_instance(const std::string& path);

void write_solution(const Solution& solution, const CostBreakdown& cost,
                    const std::string& path);
std::pair<Solution, CostBreakdown> read_solution(const std::string& path);

// Serialized forms (used by the file writers; exposed for byte-level
// determinism checks).
std::string instance_to_string(const Instance& instance);
std::string solution_to_string(const Solution& solution, const CostBreakdown& cost);

}  // namespace mvrp
