#include "edgeloc/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace edgeloc {

DirectedGraph::VertexId DirectedGraph::ensure_vertex(std::string name) {
  if (auto it = index_.find(name); it != index_.end()) {
    return it->second;
  }
  const VertexId id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

std::optional<DirectedGraph::VertexId> DirectedGraph::find_vertex(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

DirectedGraph::VertexId DirectedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) {
    return *v;
  }
  throw GraphError("unknown vertex \"" + std::string(name) + "\"");
}

void DirectedGraph::check_vertex(VertexId v) const {
  if (v >= names_.size()) {
    throw GraphError("vertex id out of range");
  }
}

void DirectedGraph::add_edge(VertexId tail, VertexId head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) {
    throw GraphError("self-loop rejected at vertex \"" + names_[tail] + "\"");
  }
  if (!edge_set_.emplace(tail, head).second) {
    throw GraphError("duplicate edge (" + names_[tail] + "," + names_[head] +
                     ")");
  }
  edges_.push_back(Edge{tail, head});
  out_[tail].push_back(head);
  in_[head].push_back(tail);
}

void DirectedGraph::add_edge(const std::string& tail, const std::string& head) {
  const VertexId t = ensure_vertex(tail);
  const VertexId h = ensure_vertex(head);
  add_edge(t, h);
}

const std::string& DirectedGraph::name(VertexId v) const {
  check_vertex(v);
  return names_[v];
}

const std::vector<DirectedGraph::VertexId>& DirectedGraph::out_neighbors(
    VertexId v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<DirectedGraph::VertexId>& DirectedGraph::in_neighbors(
    VertexId v) const {
  check_vertex(v);
  return in_[v];
}

bool DirectedGraph::has_edge(VertexId tail, VertexId head) const {
  return edge_set_.count({tail, head}) != 0;
}

bool DirectedGraph::is_symmetric() const {
  return std::all_of(edges_.begin(), edges_.end(), [this](const Edge& e) {
    return has_edge(e.head, e.tail);
  });
}

std::string edge_node_name(const DirectedGraph& g,
                           const DirectedGraph::Edge& e) {
  return "(" + g.name(e.tail) + "," + g.name(e.head) + ")";
}

DirectedGraph line_graph(const DirectedGraph& g) {
  DirectedGraph lg;
  for (const auto& e : g.edges()) {
    lg.ensure_vertex(edge_node_name(g, e));
  }
  // Bucket source edges by tail so successors of an edge come out in source
  // edge order.
  std::vector<std::vector<std::size_t>> by_tail(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    by_tail[g.edges()[i].tail].push_back(i);
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    for (std::size_t j : by_tail[g.edges()[i].head]) {
      lg.add_edge(i, j);
    }
  }
  return lg;
}

std::vector<std::size_t> strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  // Kosaraju with iterative DFS. First pass: post-order on g.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next child)
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) {
      continue;
    }
    seen[s] = true;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = g.out_neighbors(v);
      if (next < succ.size()) {
        const std::size_t w = succ[next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  // Second pass: sweep reversed finish order over the transpose.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnassigned);
  std::size_t ncomp = 0;
  std::vector<std::size_t> work;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != kUnassigned) {
      continue;
    }
    const std::size_t c = ncomp++;
    comp[*it] = c;
    work.push_back(*it);
    while (!work.empty()) {
      const std::size_t v = work.back();
      work.pop_back();
      for (std::size_t w : g.in_neighbors(v)) {
        if (comp[w] == kUnassigned) {
          comp[w] = c;
          work.push_back(w);
        }
      }
    }
  }
  return comp;
}

std::vector<std::size_t> weak_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnassigned);
  std::size_t ncomp = 0;
  std::vector<std::size_t> work;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kUnassigned) {
      continue;
    }
    const std::size_t c = ncomp++;
    comp[s] = c;
    work.push_back(s);
    while (!work.empty()) {
      const std::size_t v = work.back();
      work.pop_back();
      for (std::size_t w : g.out_neighbors(v)) {
        if (comp[w] == kUnassigned) {
          comp[w] = c;
          work.push_back(w);
        }
      }
      for (std::size_t w : g.in_neighbors(v)) {
        if (comp[w] == kUnassigned) {
          comp[w] = c;
          work.push_back(w);
        }
      }
    }
  }
  return comp;
}

std::vector<DirectedGraph::VertexId> spanning_tree_roots(
    const DirectedGraph& g) {
  if (g.vertex_count() == 0) {
    return {};
  }
  const auto comp = strongly_connected_components(g);
  const std::size_t ncomp =
      1 + *std::max_element(comp.begin(), comp.end());
  std::vector<bool> has_out(ncomp, false);
  for (const auto& e : g.edges()) {
    if (comp[e.tail] != comp[e.head]) {
      has_out[comp[e.tail]] = true;
    }
  }
  std::size_t sink = ncomp;
  std::size_t sinks = 0;
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (!has_out[c]) {
      sink = c;
      ++sinks;
    }
  }
  std::vector<DirectedGraph::VertexId> roots;
  if (sinks != 1) {
    return roots;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] == sink) {
      roots.push_back(v);
    }
  }
  return roots;
}

BigInt count_in_trees(const DirectedGraph& g, DirectedGraph::VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) {
    throw GraphError("count_in_trees: unknown vertex");
  }
  if (n == 1) {
    return 1;  // the trivial tree
  }
  const std::size_t m = n - 1;
  std::vector<std::size_t> row(n, 0);
  {
    std::size_t r = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != root) {
        row[v] = r++;
      }
    }
  }
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (std::size_t v = 0; v < n; ++v) {
    if (v != root) {
      a[row[v]][row[v]] = static_cast<long>(g.out_degree(v));
    }
  }
  for (const auto& e : g.edges()) {
    if (e.tail != root && e.head != root) {
      a[row[e.tail]][row[e.head]] -= 1;
    }
  }
  // Bareiss fraction-free elimination; all divisions are exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && a[pivot][k] == 0) {
      ++pivot;
    }
    if (pivot == m) {
      return 0;
    }
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[m - 1][m - 1];
  if (sign < 0) {
    det = -det;
  }
  return det;
}

BigInt count_in_trees_exhaustive(const DirectedGraph& g,
                                 DirectedGraph::VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) {
    throw GraphError("count_in_trees_exhaustive: unknown vertex");
  }
  const std::size_t m = g.edge_count();
  if (m > 24) {
    throw GraphError("count_in_trees_exhaustive: too many edges");
  }
  if (n == 1) {
    return 1;
  }
  const std::size_t need = n - 1;
  BigInt count = 0;
  std::vector<bool> reached(n);
  std::vector<std::size_t> work;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != need) {
      continue;
    }
    // With exactly |V|-1 edges, "every vertex reaches the root" already
    // forces each non-root vertex to own one out-edge and rules out cycles,
    // so reverse reachability from the root is the whole in-tree predicate.
    std::fill(reached.begin(), reached.end(), false);
    reached[root] = true;
    work.assign(1, root);
    std::size_t hit = 1;
    while (!work.empty()) {
      const std::size_t v = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1) {
          const auto& e = g.edges()[i];
          if (e.head == v && !reached[e.tail]) {
            reached[e.tail] = true;
            ++hit;
            work.push_back(e.tail);
          }
        }
      }
    }
    if (hit == n) {
      ++count;
    }
  }
  return count;
}

BigInt knuth_count(const DirectedGraph& g, std::size_t edge_index) {
  if (edge_index >= g.edge_count()) {
    throw GraphError("knuth_count: edge index out of range");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) == 0) {
      throw GraphError("knuth_count: vertex \"" + g.name(v) +
                       "\" has in-degree 0");
    }
  }
  const auto& e = g.edges()[edge_index];
  const std::size_t den = g.out_degree(e.head);
  if (den == 0) {
    throw GraphError("knuth_count: head \"" + g.name(e.head) +
                     "\" has out-degree 0");
  }
  BigInt num = count_in_trees(g, e.tail);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto exp = static_cast<unsigned>(g.in_degree(v) - 1);
    num *= boost::multiprecision::pow(BigInt(g.out_degree(v)), exp);
  }
  if (num % den != 0) {
    throw NumericalError("knuth_count: non-integral result");
  }
  return num / den;
}

std::string to_dot(const DirectedGraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << g.name(v) << "\";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace edgeloc
