#include "edgeloc/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

namespace edgeloc {

namespace {

using nlohmann::json;

void validate_id(const std::string& id) {
  if (id.empty()) {
    throw MeasurementError("agent identifier may not be empty");
  }
  for (char c : id) {
    if (c == '~' || c == ',' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c))) {
      throw MeasurementError("agent identifier \"" + id +
                             "\" contains a reserved character");
    }
  }
}

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw; keeps streams identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool triples_connect_all(const std::vector<std::string>& ids,
                         const std::vector<MeasuredTriple>& triples) {
  if (ids.empty()) {
    return false;
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    index[ids[i]] = i;
  }
  // Union-find over the undirected communication links (observer-from,
  // observer-to).
  std::vector<std::size_t> parent(ids.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    parent[i] = i;
  }
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    parent[find(a)] = find(b);
  };
  for (const auto& t : triples) {
    unite(index.at(t.observer), index.at(t.from));
    unite(index.at(t.observer), index.at(t.to));
  }
  const std::size_t root = find(0);
  return std::all_of(parent.begin(), parent.end(),
                     [&](std::size_t v) { return find(v) == root; });
}

}  // namespace

bool Scenario::has_agent(const std::string& id) const {
  return std::any_of(agents.begin(), agents.end(),
                     [&](const auto& a) { return a.first == id; });
}

const Position& Scenario::position(const std::string& id) const {
  for (const auto& [aid, pos] : agents) {
    if (aid == id) {
      return pos;
    }
  }
  throw MeasurementError("unknown agent \"" + id + "\"");
}

std::vector<std::string> Scenario::agent_ids() const {
  std::vector<std::string> ids;
  ids.reserve(agents.size());
  for (const auto& [id, pos] : agents) {
    ids.push_back(id);
  }
  return ids;
}

void Scenario::validate() const {
  std::set<std::string> ids;
  for (const auto& [id, pos] : agents) {
    validate_id(id);
    if (!ids.insert(id).second) {
      throw MeasurementError("duplicate agent \"" + id + "\"");
    }
    if (!std::isfinite(pos.x) || !std::isfinite(pos.y)) {
      throw GeometryError("agent \"" + id + "\" has non-finite coordinates");
    }
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = i + 1; j < agents.size(); ++j) {
      if (agents[i].second.x == agents[j].second.x &&
          agents[i].second.y == agents[j].second.y) {
        throw GeometryError("agents \"" + agents[i].first + "\" and \"" +
                            agents[j].first + "\" share a position");
      }
    }
  }
  auto check_triple = [&](const std::string& observer, const std::string& from,
                          const std::string& to) {
    for (const auto* id : {&observer, &from, &to}) {
      if (!ids.count(*id)) {
        throw MeasurementError("measurement references unknown agent \"" +
                               *id + "\"");
      }
    }
    if (observer == from || observer == to) {
      throw MeasurementError("observer \"" + observer +
                             "\" may not be a measured endpoint");
    }
    if (from == to) {
      throw MeasurementError("measured endpoints must be distinct (\"" + from +
                             "\")");
    }
  };
  for (const auto& t : measurements) {
    check_triple(t.observer, t.from, t.to);
  }
  for (const auto& o : angle_overrides) {
    check_triple(o.observer, o.from, o.to);
    if (!std::isfinite(o.value)) {
      throw GeometryError("explicit angle value is not finite");
    }
  }
}

std::string Scenario::to_json_string() const {
  json doc;
  doc["agents"] = json::array();
  for (const auto& [id, pos] : agents) {
    doc["agents"].push_back({{"id", id}, {"x", pos.x}, {"y", pos.y}});
  }
  doc["measurements"] = json::array();
  for (const auto& t : measurements) {
    doc["measurements"].push_back(
        {{"observer", t.observer}, {"from", t.from}, {"to", t.to}});
  }
  if (!angle_overrides.empty()) {
    doc["angles"] = json::array();
    for (const auto& o : angle_overrides) {
      doc["angles"].push_back({{"observer", o.observer},
                               {"from", o.from},
                               {"to", o.to},
                               {"value", o.value}});
    }
  }
  return doc.dump(2) + "\n";
}

Scenario Scenario::from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MeasurementError(std::string("invalid scenario JSON: ") + e.what());
  }
  Scenario sc;
  try {
    for (const auto& a : doc.at("agents")) {
      sc.agents.emplace_back(
          a.at("id").get<std::string>(),
          Position{a.at("x").get<double>(), a.at("y").get<double>()});
    }
    for (const auto& m : doc.at("measurements")) {
      sc.measurements.push_back(MeasuredTriple{m.at("observer").get<std::string>(),
                                               m.at("from").get<std::string>(),
                                               m.at("to").get<std::string>()});
    }
    if (doc.contains("angles")) {
      for (const auto& o : doc.at("angles")) {
        sc.angle_overrides.push_back(
            AngleOverride{o.at("observer").get<std::string>(),
                          o.at("from").get<std::string>(),
                          o.at("to").get<std::string>(),
                          o.at("value").get<double>()});
      }
    }
  } catch (const json::exception& e) {
    throw MeasurementError(std::string("invalid scenario JSON: ") + e.what());
  }
  sc.validate();
  return sc;
}

void Scenario::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write scenario file " + path.string());
  }
  out << to_json_string();
}

Scenario Scenario::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read scenario file " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_string(text);
}

AngleMeasurementSet synthesize_measurements(const Scenario& scenario) {
  scenario.validate();
  AngleMeasurementSet s;
  for (const auto& t : scenario.measurements) {
    const double a = subtended_angle(scenario.position(t.observer),
                                     scenario.position(t.from),
                                     scenario.position(t.to));
    s.insert(t.observer, t.from, t.to, a);
  }
  for (const auto& o : scenario.angle_overrides) {
    s.assign(o.observer, o.from, o.to, o.value);
  }
  return s;
}

Scenario preset_scenario(std::string_view name) {
  Scenario sc;
  if (name == "example1") {
    sc.agents = {{"1", {0.5, 1.0}},
                 {"2", {2.0, 2.5}},
                 {"3", {3.8, 3.0}},
                 {"4", {2.0, 0.5}},
                 {"5", {3.5, 1.5}}};
    sc.measurements = {{"1", "2", "4"}, {"2", "3", "5"}};
  } else if (name == "example3") {
    sc.agents = {{"1", {0.5, 0.5}},
                 {"2", {0.5, 3.5}},
                 {"3", {3.5, 3.5}},
                 {"4", {3.5, 0.5}}};
    sc.measurements = {{"1", "2", "4"}, {"2", "3", "4"}, {"4", "1", "2"}};
  } else if (name == "figure4a" || name == "figure4b") {
    sc.agents = {{"1", {0.5, 3.0}}, {"2", {2.0, 2.0}}, {"3", {3.8, 3.0}},
                 {"4", {0.8, 0.5}}, {"5", {3.5, 1.5}}, {"6", {3.5, 0.5}}};
    sc.measurements = {{"2", "1", "4"}, {"2", "3", "5"}, {"2", "3", "6"}};
    if (name == "figure4b") {
      sc.measurements.push_back({"2", "4", "6"});
    }
  } else {
    throw Error("unknown preset \"" + std::string(name) + "\"");
  }
  sc.validate();
  return sc;
}

std::vector<std::string> preset_names() {
  return {"example1", "example3", "figure4a", "figure4b"};
}

Scenario random_scenario(std::size_t n_agents, std::uint64_t seed) {
  if (n_agents < 3) {
    throw Error("random scenario requires at least 3 agents");
  }
  constexpr double kMinDistance = 0.05;
  constexpr int kMaxAttempts = 1000;
  std::mt19937_64 rng(seed);

  Scenario sc;
  for (std::size_t i = 0; i < n_agents; ++i) {
    Position p;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kMaxAttempts) {
        throw Error("failed to place agents with minimum separation");
      }
      p = Position{uniform01(rng), uniform01(rng)};
      const bool clear = std::all_of(
          sc.agents.begin(), sc.agents.end(), [&](const auto& a) {
            return std::hypot(a.second.x - p.x, a.second.y - p.y) >=
                   kMinDistance;
          });
      if (clear) {
        break;
      }
    }
    sc.agents.emplace_back(std::to_string(i + 1), p);
  }

  const auto ids = sc.agent_ids();
  auto pick = [&](const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(uniform01(rng) *
                                         static_cast<double>(pool.size()))];
  };
  std::map<std::string, std::set<std::string>> measured;  // observer -> agents
  std::set<std::array<std::string, 3>> used;               // observer + pair
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::string u = pick(ids);
    std::vector<std::string> others;
    for (const auto& id : ids) {
      if (id != u) {
        others.push_back(id);
      }
    }
    // Keep each observer's measured pairs chained: reuse one already-measured
    // agent once the observer has any, so the chained-angle closure stays
    // well defined.
    std::string v;
    if (!measured[u].empty()) {
      std::vector<std::string> known(measured[u].begin(), measured[u].end());
      v = pick(known);
    } else {
      v = pick(others);
    }
    std::vector<std::string> rest;
    for (const auto& id : others) {
      if (id != v) {
        rest.push_back(id);
      }
    }
    const std::string w = pick(rest);
    auto pr = std::minmax(v, w);
    if (!used.insert({u, pr.first, pr.second}).second) {
      continue;
    }
    sc.measurements.push_back({u, v, w});
    measured[u].insert(v);
    measured[u].insert(w);
    if (triples_connect_all(ids, sc.measurements)) {
      sc.validate();
      return sc;
    }
  }
  throw Error("failed to reach a connected communication graph");
}

}  // namespace edgeloc
