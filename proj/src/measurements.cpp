#include "edgeloc/measurements.hpp"

#include <cmath>
#include <set>

#include "edgeloc/geometry.hpp"

namespace edgeloc {

namespace {
constexpr double kSymmetryTol = 1e-12;

bool circularly_equal(double a, double b) {
  return std::abs(principal_value(a - b)) <= kSymmetryTol;
}
}  // namespace

void AngleMeasurementSet::validate_key(const std::string& observer,
                                       const std::string& from,
                                       const std::string& to) {
  if (observer == from || observer == to) {
    throw MeasurementError("subtended angle at \"" + observer +
                           "\" may not involve the observer itself");
  }
  if (from == to) {
    throw MeasurementError("subtended angle endpoints must be distinct (\"" +
                           from + "\")");
  }
}

void AngleMeasurementSet::put(Key key, double value, bool allow_override) {
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (allow_override) {
      it->second = value;
      return;
    }
    if (!circularly_equal(it->second, value)) {
      throw MeasurementError("conflicting values for subtended angle (" +
                             key.observer + "," + key.from + "," + key.to +
                             ")");
    }
    return;
  }
  entries_.emplace(std::move(key), value);
}

void AngleMeasurementSet::insert(const std::string& observer,
                                 const std::string& from,
                                 const std::string& to, double angle) {
  validate_key(observer, from, to);
  const double v = principal_value(angle);
  put(Key{observer, from, to}, v, false);
  put(Key{observer, to, from}, principal_value(-v), false);
}

void AngleMeasurementSet::assign(const std::string& observer,
                                 const std::string& from,
                                 const std::string& to, double angle) {
  validate_key(observer, from, to);
  const double v = principal_value(angle);
  put(Key{observer, from, to}, v, true);
  put(Key{observer, to, from}, principal_value(-v), true);
}

std::optional<double> AngleMeasurementSet::angle(const std::string& observer,
                                                 const std::string& from,
                                                 const std::string& to) const {
  auto it = entries_.find(Key{observer, from, to});
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool AngleMeasurementSet::contains(const std::string& observer,
                                   const std::string& from,
                                   const std::string& to) const {
  return entries_.count(Key{observer, from, to}) != 0;
}

bool AngleMeasurementSet::observes_pair_with(const std::string& observer,
                                             const std::string& agent) const {
  auto it = entries_.lower_bound(Key{observer, agent, ""});
  return it != entries_.end() && it->first.observer == observer &&
         it->first.from == agent;
}

std::vector<std::string> AngleMeasurementSet::observers() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : entries_) {
    if (out.empty() || out.back() != key.observer) {
      out.push_back(key.observer);
    }
  }
  return out;  // map order keeps this sorted and unique
}

std::vector<std::pair<std::string, std::string>>
AngleMeasurementSet::measured_pairs(const std::string& observer) const {
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto it = entries_.lower_bound(Key{observer, "", ""});
       it != entries_.end() && it->first.observer == observer; ++it) {
    auto p = std::minmax(it->first.from, it->first.to);
    pairs.emplace(p.first, p.second);
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<std::string> AngleMeasurementSet::measured_agents(
    const std::string& observer) const {
  std::set<std::string> agents;
  for (auto it = entries_.lower_bound(Key{observer, "", ""});
       it != entries_.end() && it->first.observer == observer; ++it) {
    agents.insert(it->first.from);
    agents.insert(it->first.to);
  }
  return {agents.begin(), agents.end()};
}

}  // namespace edgeloc
