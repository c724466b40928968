#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeloc/graph.hpp"
#include "edgeloc/measurements.hpp"

namespace edgeloc {

// Symmetric communication graph induced by the measurement set: an entry
// (u,v,w) contributes the directed edges (u,v),(v,u),(u,w),(w,u).
struct CommunicationGraph {
  DirectedGraph graph;
};

// Throws MeasurementError when the set is empty, references agents outside
// `all_agents`, or leaves the graph disconnected.
CommunicationGraph build_communication_graph(
    const AngleMeasurementSet& s, const std::vector<std::string>& all_agents);

// Per-observer connectivity of the auxiliary pair graph: nodes are the agents
// the observer measures, links join each measured pair. An observer whose
// auxiliary graph splits into several components measures angles that cannot
// all be chained together.
struct Assumption2Observer {
  std::string observer;
  std::vector<std::vector<std::string>> components;  // each sorted
  bool satisfied = false;
};

struct Assumption2Report {
  std::vector<Assumption2Observer> observers;
  bool all_satisfied = true;
};

Assumption2Report check_assumption2(const AngleMeasurementSet& s);

// Chained-angle closure: for every observer and every ordered pair of agents
// connected in its auxiliary graph, adds the derived angle obtained by
// summing measured angles along a path. Requires every observer's auxiliary
// graph to be connected; path sums that disagree beyond 1e-9 throw
// MeasurementError.
AngleMeasurementSet close_measurements(const AngleMeasurementSet& s);

// A line-graph adjacency from edge (u,v) to edge (v,w) with u != w that is
// not backed by a measured angle at v between u and w.
struct UndesiredConnection {
  std::pair<std::string, std::string> from_edge;
  std::pair<std::string, std::string> to_edge;
  bool operator==(const UndesiredConnection&) const = default;
};

std::vector<UndesiredConnection> find_undesired_connections(
    const CommunicationGraph& g, const AngleMeasurementSet& s);

// Virtual vertex naming: the copy of `v` that is unreachable from the far
// side of edge (u,v) is called "v~u".
std::string virtual_vertex_name(const std::string& v, const std::string& u);
bool is_virtual_vertex(std::string_view name);
// "v~u" -> "v"; real names pass through.
std::string strip_virtual(std::string_view name);

// Communication graph after virtual-vertex surgery: for every edge pair
// {(u,v),(v,u)} where v measures no angle involving u, the pair becomes
// {(u,"v~u"),("v~u",u)}; real vertices at which nothing is measured drop out.
struct EdgeLocalizationGraph {
  DirectedGraph graph;
  std::vector<std::string> removed_agents;   // real vertices dropped
  std::vector<std::string> virtual_vertices; // in creation order

  // Original communication-graph edge behind edge index e (virtual tags
  // stripped).
  std::pair<std::string, std::string> origin(std::size_t edge_index) const;
};

EdgeLocalizationGraph build_edge_localization_graph(
    const CommunicationGraph& g, const AngleMeasurementSet& s);

// One estimating entity per edge of the edge localization graph.
struct EdgeAgent {
  std::string tail;         // edge-node names, possibly virtual-tagged
  std::string head;
  std::string origin_tail;  // stripped
  std::string origin_head;
};

// Weighted interaction graph of edge agents, isomorphic to the directed line
// graph of the edge localization graph. Agents are numbered by the bijection
// induced by lexicographic order of (tail, head) edge-node names, so the same
// input always yields the same numbering. An interaction edge (k, j) with
// k=(u,v), j=(v,w) carries the relative orientation
//   theta_jk = -pi                         when w == u,
//   theta_jk = PV(alpha^v_{w,u} + pi)      otherwise,
// where alpha^v_{w,u} is the measured angle at v from u to w.
struct LocalizationInteractionGraph {
  std::vector<EdgeAgent> agents;
  // Out-neighbors (j, theta_jk) per agent k, ordered by j.
  std::vector<std::vector<std::pair<std::size_t, double>>> neighbors;

  std::size_t size() const { return agents.size(); }
  std::optional<std::size_t> find_by_origin(const std::string& tail,
                                            const std::string& head) const;
  // Plain directed graph over agent numbers "1".."M" (weights dropped).
  DirectedGraph as_graph() const;
};

// Throws MeasurementError when an interaction edge with w != u has no backing
// measurement; this cannot happen for a correctly built edge localization
// graph with closure applied.
LocalizationInteractionGraph build_localization_interaction_graph(
    const EdgeLocalizationGraph& elg, const AngleMeasurementSet& s);

// DOT serialization with agent numbers as vertex names, origin edges as
// labels, and relative orientations (6 decimal places) as edge labels.
std::string interaction_to_dot(const LocalizationInteractionGraph& lig);

}  // namespace edgeloc
