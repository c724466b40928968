// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "edgeloc/graph.hpp"

namespace edgeloc::testing {

// All-pairs reachability by repeated squaring of the boolean relation;
// independent of the SCC-based root computation.
inline std::vector<std::vector<bool>> reachability_matrix(
    const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    reach[v][v] = true;
  }
  for (const auto& e : g.edges()) {
    reach[e.tail][e.head] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i][k]) {
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[k][j]) {
            reach[i][j] = true;
          }
        }
      }
    }
  }
  return reach;
}

// Roots per the reachability definition: r is a root iff every vertex
// reaches it.
inline std::vector<DirectedGraph::VertexId> roots_by_reachability(
    const DirectedGraph& g) {
  const auto reach = reachability_matrix(g);
  std::vector<DirectedGraph::VertexId> roots;
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    bool all = true;
    for (std::size_t v = 0; v < g.vertex_count() && all; ++v) {
      all = reach[v][r];
    }
    if (all) {
      roots.push_back(r);
    }
  }
  return roots;
}

// Random symmetric digraph with every vertex incident to at least one edge
// pair (so all in-degrees are >= 1).
inline DirectedGraph random_symmetric_graph(std::mt19937_64& rng,
                                            std::size_t max_vertices = 6) {
  const std::size_t n = 2 + rng() % (max_vertices - 1);
  DirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) {
    g.ensure_vertex(std::to_string(v + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 2 == 0) {
        g.add_edge(i, j);
        g.add_edge(j, i);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) {
      const std::size_t other = (v + 1 + rng() % (n - 1)) % n;
      g.add_edge(v, other);
      g.add_edge(other, v);
    }
  }
  return g;
}

// Random digraph with no structural guarantees beyond simplicity.
inline DirectedGraph random_digraph(std::mt19937_64& rng,
                                    std::size_t max_vertices = 6) {
  const std::size_t n = 1 + rng() % max_vertices;
  DirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) {
    g.ensure_vertex(std::to_string(v + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng() % 10 < 3) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

// The worked line-graph example: edges a=(1,2), b=(2,3), c=(3,1), d=(3,4),
// e=(4,3) in that order.
inline DirectedGraph figure1_graph() {
  DirectedGraph g;
  for (const char* v : {"1", "2", "3", "4"}) {
    g.ensure_vertex(v);
  }
  g.add_edge("1", "2");  // a
  g.add_edge("2", "3");  // b
  g.add_edge("3", "1");  // c
  g.add_edge("3", "4");  // d
  g.add_edge("4", "3");  // e
  return g;
}

}  // namespace edgeloc::testing
