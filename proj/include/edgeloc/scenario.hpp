#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "edgeloc/geometry.hpp"
#include "edgeloc/measurements.hpp"

namespace edgeloc {

// One measured subtended angle: at `observer`, from its bearing toward `from`
// to its bearing toward `to`.
struct MeasuredTriple {
  std::string observer;
  std::string from;
  std::string to;
};

// Explicit angle value that overrides geometric synthesis.
struct AngleOverride {
  std::string observer;
  std::string from;
  std::string to;
  double value = 0.0;
};

// Ground-truth input: agent positions plus which subtended angles are
// measured. Agents keep file order. Identifiers are non-empty and may not
// contain '~', ',', '"' or whitespace ('~' tags virtual vertices downstream).
struct Scenario {
  std::vector<std::pair<std::string, Position>> agents;
  std::vector<MeasuredTriple> measurements;
  std::vector<AngleOverride> angle_overrides;

  bool has_agent(const std::string& id) const;
  const Position& position(const std::string& id) const;
  std::vector<std::string> agent_ids() const;

  // Checks all invariants (unique finite agents, pairwise distinct positions,
  // triples referencing known distinct agents). Throws on violation.
  void validate() const;

  std::string to_json_string() const;
  static Scenario from_json_string(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static Scenario load(const std::filesystem::path& path);
};

// Signed subtended angles synthesized from ground-truth positions for every
// measured triple, closed under sign symmetry, with explicit overrides
// applied last.
AngleMeasurementSet synthesize_measurements(const Scenario& scenario);

// Built-in configurations: "example1", "example3", "figure4a", "figure4b".
Scenario preset_scenario(std::string_view name);
std::vector<std::string> preset_names();

// Random scenario: n_agents >= 3 agents placed uniformly in the unit square
// with minimum pairwise distance 0.05; measured triples are drawn (keeping
// each observer's measured pairs chained together) until the communication
// graph is connected. Throws after 1000 failed attempts.
Scenario random_scenario(std::size_t n_agents, std::uint64_t seed);

}  // namespace edgeloc
