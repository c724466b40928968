#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgeloc/errors.hpp"

namespace edgeloc {

// The set S of signed subtended angles. An entry keyed (observer, from, to)
// holds the principal-value angle swept counter-clockwise at the observer
// from its bearing toward `from` to its bearing toward `to`. The set is kept
// closed under sign symmetry: inserting (u,v,w) also inserts (u,w,v) with the
// negated principal value. Immutable sharing across threads is safe once
// construction is done.
class AngleMeasurementSet {
 public:
  struct Key {
    std::string observer;
    std::string from;
    std::string to;
    auto operator<=>(const Key&) const = default;
  };

  // Inserts the measurement and its sign-symmetric mirror. Values are folded
  // to principal form. Re-inserting an existing key with a value that
  // disagrees beyond 1e-12 (circularly) throws MeasurementError.
  void insert(const std::string& observer, const std::string& from,
              const std::string& to, double angle);

  // Override semantics: replaces the entry and its mirror unconditionally.
  void assign(const std::string& observer, const std::string& from,
              const std::string& to, double angle);

  std::optional<double> angle(const std::string& observer,
                              const std::string& from,
                              const std::string& to) const;
  bool contains(const std::string& observer, const std::string& from,
                const std::string& to) const;

  // True when some entry at `observer` involves `agent`, i.e. there exists w
  // with an (observer, agent, w) entry.
  bool observes_pair_with(const std::string& observer,
                          const std::string& agent) const;

  const std::map<Key, double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Distinct observers, sorted.
  std::vector<std::string> observers() const;

  // Unordered pairs {from, to} measured by the observer, each reported once
  // with from < to, sorted.
  std::vector<std::pair<std::string, std::string>> measured_pairs(
      const std::string& observer) const;

  // Agents involved in the observer's measured pairs, sorted.
  std::vector<std::string> measured_agents(const std::string& observer) const;

 private:
  static void validate_key(const std::string& observer, const std::string& from,
                           const std::string& to);
  void put(Key key, double value, bool allow_override);

  std::map<Key, double> entries_;
};

}  // namespace edgeloc
