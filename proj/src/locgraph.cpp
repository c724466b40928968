#include "edgeloc/locgraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "edgeloc/geometry.hpp"

namespace edgeloc {

namespace {
constexpr double kChainTol = 1e-9;
}

CommunicationGraph build_communication_graph(
    const AngleMeasurementSet& s, const std::vector<std::string>& all_agents) {
  if (s.empty()) {
    throw MeasurementError("measurement set is empty");
  }
  CommunicationGraph cg;
  for (const auto& id : all_agents) {
    if (cg.graph.find_vertex(id)) {
      throw MeasurementError("duplicate agent \"" + id + "\"");
    }
    cg.graph.ensure_vertex(id);
  }
  for (const auto& [key, value] : s.entries()) {
    const auto u = cg.graph.find_vertex(key.observer);
    const auto v = cg.graph.find_vertex(key.from);
    if (!u || !v) {
      throw MeasurementError("measurement references an agent outside the "
                             "scenario");
    }
    if (!cg.graph.has_edge(*u, *v)) {
      cg.graph.add_edge(*u, *v);
    }
    if (!cg.graph.has_edge(*v, *u)) {
      cg.graph.add_edge(*v, *u);
    }
    // The (observer, to) edges arrive through the mirrored entry.
  }
  const auto comp = weak_components(cg.graph);
  if (comp.empty() ||
      *std::max_element(comp.begin(), comp.end()) != 0) {
    throw MeasurementError("communication graph is disconnected");
  }
  return cg;
}

Assumption2Report check_assumption2(const AngleMeasurementSet& s) {
  Assumption2Report report;
  for (const auto& observer : s.observers()) {
    Assumption2Observer entry;
    entry.observer = observer;
    const auto agents = s.measured_agents(observer);
    const auto pairs = s.measured_pairs(observer);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      index[agents[i]] = i;
    }
    std::vector<std::vector<std::size_t>> adj(agents.size());
    for (const auto& [a, b] : pairs) {
      adj[index[a]].push_back(index[b]);
      adj[index[b]].push_back(index[a]);
    }
    std::vector<bool> seen(agents.size(), false);
    for (std::size_t start = 0; start < agents.size(); ++start) {
      if (seen[start]) {
        continue;
      }
      std::vector<std::string> component;
      std::vector<std::size_t> work{start};
      seen[start] = true;
      while (!work.empty()) {
        const std::size_t v = work.back();
        work.pop_back();
        component.push_back(agents[v]);
        for (std::size_t w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            work.push_back(w);
          }
        }
      }
      std::sort(component.begin(), component.end());
      entry.components.push_back(std::move(component));
    }
    entry.satisfied = entry.components.size() <= 1;
    report.all_satisfied = report.all_satisfied && entry.satisfied;
    report.observers.push_back(std::move(entry));
  }
  return report;
}

AngleMeasurementSet close_measurements(const AngleMeasurementSet& s) {
  const auto report = check_assumption2(s);
  if (!report.all_satisfied) {
    std::string who;
    for (const auto& o : report.observers) {
      if (!o.satisfied) {
        who += who.empty() ? o.observer : ", " + o.observer;
      }
    }
    throw MeasurementError(
        "measured pairs are not chained together at observer(s): " + who);
  }
  AngleMeasurementSet closed = s;
  for (const auto& observer : s.observers()) {
    const auto agents = s.measured_agents(observer);
    const auto pairs = s.measured_pairs(observer);
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : pairs) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    // Offset of each agent's bearing relative to the first agent; any path
    // realizes it because the angles chain additively.
    std::map<std::string, double> offset;
    offset[agents.front()] = 0.0;
    std::vector<std::string> work{agents.front()};
    while (!work.empty()) {
      const std::string v = work.back();
      work.pop_back();
      for (const auto& w : adj[v]) {
        if (!offset.count(w)) {
          offset[w] = principal_value(offset[v] + *s.angle(observer, v, w));
          work.push_back(w);
        }
      }
    }
    // Every measured link must agree with the offsets; a mismatch means two
    // chains give different sums for the same angle.
    for (const auto& [a, b] : pairs) {
      const double derived = principal_value(offset[b] - offset[a]);
      if (std::abs(principal_value(derived - *s.angle(observer, a, b))) >
          kChainTol) {
        throw MeasurementError("inconsistent chained angles at observer \"" +
                               observer + "\" between \"" + a + "\" and \"" +
                               b + "\"");
      }
    }
    for (const auto& a : agents) {
      for (const auto& b : agents) {
        if (a != b && !closed.contains(observer, a, b)) {
          closed.insert(observer, a, b,
                        principal_value(offset[b] - offset[a]));
        }
      }
    }
  }
  return closed;
}

std::vector<UndesiredConnection> find_undesired_connections(
    const CommunicationGraph& g, const AngleMeasurementSet& s) {
  std::vector<UndesiredConnection> out;
  const auto& graph = g.graph;
  std::vector<std::vector<std::size_t>> by_tail(graph.vertex_count());
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    by_tail[graph.edges()[i].tail].push_back(i);
  }
  for (const auto& e1 : graph.edges()) {
    for (std::size_t j : by_tail[e1.head]) {
      const auto& e2 = graph.edges()[j];
      const std::string& u = graph.name(e1.tail);
      const std::string& v = graph.name(e1.head);
      const std::string& w = graph.name(e2.head);
      if (u != w && !s.contains(v, u, w)) {
        out.push_back(UndesiredConnection{{u, v}, {v, w}});
      }
    }
  }
  return out;
}

std::string virtual_vertex_name(const std::string& v, const std::string& u) {
  return v + "~" + u;
}

bool is_virtual_vertex(std::string_view name) {
  return name.find('~') != std::string_view::npos;
}

std::string strip_virtual(std::string_view name) {
  return std::string(name.substr(0, name.find('~')));
}

std::pair<std::string, std::string> EdgeLocalizationGraph::origin(
    std::size_t edge_index) const {
  const auto& e = graph.edges().at(edge_index);
  return {strip_virtual(graph.name(e.tail)), strip_virtual(graph.name(e.head))};
}

EdgeLocalizationGraph build_edge_localization_graph(
    const CommunicationGraph& g, const AngleMeasurementSet& s) {
  EdgeLocalizationGraph elg;
  std::set<std::pair<std::string, std::string>> handled;
  for (const auto& e : g.graph.edges()) {
    const std::string u = g.graph.name(e.tail);
    const std::string v = g.graph.name(e.head);
    auto pr = std::minmax(u, v);
    if (!handled.emplace(pr.first, pr.second).second) {
      continue;
    }
    const bool v_measures_u = s.observes_pair_with(v, u);
    const bool u_measures_v = s.observes_pair_with(u, v);
    if (v_measures_u && u_measures_v) {
      elg.graph.add_edge(u, v);
      elg.graph.add_edge(v, u);
      continue;
    }
    if (!v_measures_u) {
      const std::string vu = virtual_vertex_name(v, u);
      elg.virtual_vertices.push_back(vu);
      elg.graph.add_edge(u, vu);
      elg.graph.add_edge(vu, u);
    }
    if (!u_measures_v) {
      // Unreachable on both sides cannot arise from a graph built under the
      // measurement assumption, but the definition handles it edge by edge.
      const std::string uv = virtual_vertex_name(u, v);
      elg.virtual_vertices.push_back(uv);
      elg.graph.add_edge(v, uv);
      elg.graph.add_edge(uv, v);
    }
  }
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) {
    if (!elg.graph.find_vertex(g.graph.name(v))) {
      elg.removed_agents.push_back(g.graph.name(v));
    }
  }
  return elg;
}

std::optional<std::size_t> LocalizationInteractionGraph::find_by_origin(
    const std::string& tail, const std::string& head) const {
  for (std::size_t k = 0; k < agents.size(); ++k) {
    if (agents[k].origin_tail == tail && agents[k].origin_head == head) {
      return k;
    }
  }
  return std::nullopt;
}

DirectedGraph LocalizationInteractionGraph::as_graph() const {
  DirectedGraph g;
  for (std::size_t k = 0; k < agents.size(); ++k) {
    g.ensure_vertex(std::to_string(k + 1));
  }
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    for (const auto& [j, theta] : neighbors[k]) {
      g.add_edge(k, j);
    }
  }
  return g;
}

LocalizationInteractionGraph build_localization_interaction_graph(
    const EdgeLocalizationGraph& elg, const AngleMeasurementSet& s) {
  LocalizationInteractionGraph lig;
  const auto& graph = elg.graph;

  // The bijection onto agent numbers: lexicographic order of edge-node names.
  std::vector<std::size_t> order(graph.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = graph.edges()[a];
    const auto& eb = graph.edges()[b];
    return std::pair(graph.name(ea.tail), graph.name(ea.head)) <
           std::pair(graph.name(eb.tail), graph.name(eb.head));
  });
  std::vector<std::size_t> agent_of(graph.edge_count());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& e = graph.edges()[order[k]];
    agent_of[order[k]] = k;
    lig.agents.push_back(EdgeAgent{graph.name(e.tail), graph.name(e.head),
                                   strip_virtual(graph.name(e.tail)),
                                   strip_virtual(graph.name(e.head))});
  }

  std::vector<std::vector<std::size_t>> by_tail(graph.vertex_count());
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    by_tail[graph.edges()[i].tail].push_back(i);
  }
  lig.neighbors.assign(lig.agents.size(), {});
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const std::size_t k = agent_of[i];
    const auto& ka = lig.agents[k];
    for (std::size_t jedge : by_tail[graph.edges()[i].head]) {
      const std::size_t j = agent_of[jedge];
      const auto& ja = lig.agents[j];
      const std::string& u = ka.origin_tail;
      const std::string& v = ka.origin_head;  // == ja.origin_tail
      const std::string& w = ja.origin_head;
      double theta = 0.0;
      if (w == u) {
        theta = -std::numbers::pi;
      } else {
        const auto alpha = s.angle(v, u, w);
        if (!alpha) {
          throw MeasurementError(
              "no measured angle at \"" + v + "\" between \"" + u +
              "\" and \"" + w +
              "\" backs an interaction edge (was the chained-angle closure "
              "applied?)");
        }
        theta = principal_value(*alpha + std::numbers::pi);
      }
      lig.neighbors[k].emplace_back(j, theta);
    }
  }
  for (auto& nbrs : lig.neighbors) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  return lig;
}

std::string interaction_to_dot(const LocalizationInteractionGraph& lig) {
  std::ostringstream os;
  os << "digraph {\n";
  for (std::size_t k = 0; k < lig.agents.size(); ++k) {
    os << "  \"" << k + 1 << "\" [label=\"(" << lig.agents[k].origin_tail
       << "," << lig.agents[k].origin_head << ")\"];\n";
  }
  char buf[32];
  for (std::size_t k = 0; k < lig.neighbors.size(); ++k) {
    for (const auto& [j, theta] : lig.neighbors[k]) {
      std::snprintf(buf, sizeof(buf), "%.6f", theta);
      os << "  \"" << k + 1 << "\" -> \"" << j + 1 << "\" [label=\"" << buf
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace edgeloc
