#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "edgeloc/errors.hpp"

namespace edgeloc {

using BigInt = boost::multiprecision::cpp_int;

// Directed graph over opaque string identifiers. Vertices and edges keep
// insertion order; identifiers map internally to dense indices. No self-loops,
// no duplicate edges. Immutable once built by the callers in this library, so
// all queries are safe to run concurrently.
class DirectedGraph {
 public:
  using VertexId = std::size_t;

  struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    bool operator==(const Edge&) const = default;
  };

  // Returns the id of `name`, inserting a new vertex when unseen.
  VertexId ensure_vertex(std::string name);

  std::optional<VertexId> find_vertex(std::string_view name) const;

  // Like find_vertex but throws GraphError for unknown names.
  VertexId vertex(std::string_view name) const;

  void add_edge(VertexId tail, VertexId head);

  // Convenience: ensures both endpoints exist first.
  void add_edge(const std::string& tail, const std::string& head);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name(VertexId v) const;
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& out_neighbors(VertexId v) const;
  const std::vector<VertexId>& in_neighbors(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }
  bool has_edge(VertexId tail, VertexId head) const;

  // True when (u,v) is an edge whenever (v,u) is.
  bool is_symmetric() const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::set<std::pair<VertexId, VertexId>> edge_set_;
};

// Canonical name for an edge viewed as a line-graph vertex: "(tail,head)".
std::string edge_node_name(const DirectedGraph& g, const DirectedGraph::Edge& e);

// Directed line graph: vertex i of the result corresponds to g.edges()[i],
// named by edge_node_name; it carries an edge (e1, e2) for every pair of
// source edges with head(e1) == tail(e2).
DirectedGraph line_graph(const DirectedGraph& g);

// Component id per vertex. Ids are assigned in order of first discovery and
// are a reverse topological order of the condensation (every edge between
// distinct components goes from a higher id to a lower id).
std::vector<std::size_t> strongly_connected_components(const DirectedGraph& g);

// Weakly connected component id per vertex, in order of first discovery.
std::vector<std::size_t> weak_components(const DirectedGraph& g);

// Exactly the vertices r such that every vertex has a directed path to r,
// i.e. the roots of oriented spanning trees. Computed via the strongly
// connected component condensation: the set is nonempty iff the condensation
// has a unique sink component, and then equals that component's vertices.
std::vector<DirectedGraph::VertexId> spanning_tree_roots(const DirectedGraph& g);

// Number of oriented spanning trees rooted at `root` (each non-root vertex
// with a directed path to the root). Evaluated exactly as the determinant of
// the unit-weight Laplacian (out-degree diagonal minus adjacency) with the
// root row and column deleted, via fraction-free Bareiss elimination.
BigInt count_in_trees(const DirectedGraph& g, DirectedGraph::VertexId root);

// Same count by direct enumeration of all edge subsets of size |V|-1.
// Limited to small graphs (at most 24 edges).
BigInt count_in_trees_exhaustive(const DirectedGraph& g,
                                 DirectedGraph::VertexId root);

// Closed form for the number of oriented spanning trees of the directed line
// graph rooted at the edge node g.edges()[edge_index]:
//   kappa(g, tail(e)) / d_out(head(e)) * prod_v d_out(v)^(d_in(v) - 1)
// Requires every vertex to have in-degree >= 1. The division is exact; a
// non-integral result throws NumericalError.
BigInt knuth_count(const DirectedGraph& g, std::size_t edge_index);

// DOT serialization: one quoted vertex statement per vertex, then one quoted
// edge statement per edge, in insertion order.
std::string to_dot(const DirectedGraph& g);

}  // namespace edgeloc
