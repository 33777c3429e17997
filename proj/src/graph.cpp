#include "kpartite/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace kpartite {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

Graph::Graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!contains_vertex(u) || !contains_vertex(v)) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice_m = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice_m += list.size();
  }
  edge_count_ = twice_m / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains_vertex(u) || !contains_vertex(v)) return false;
  const auto& a = neighbors(u);
  const auto& b = neighbors(v);
  const auto& shorter = a.size() <= b.size() ? a : b;
  return std::binary_search(shorter.begin(), shorter.end(), a.size() <= b.size() ? v : u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = static_cast<int>(adjacency_[v].size());
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, e);
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] <= 0) throw InvalidInput("part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph clique_union(std::span<const int> sizes) {
  std::vector<Graph> cliques;
  for (int s : sizes) {
    if (s <= 0) throw InvalidInput("clique sizes must be positive");
    cliques.push_back(complete_graph(s));
  }
  return disjoint_union(cliques);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    auto it = nb.begin();
    for (int v = u + 1; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : s) {
    if (!g.contains_vertex(v)) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> e;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[static_cast<std::size_t>(v)] >= 0) {
        e.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
      }
    }
  }
  return Graph(next, e);
}

Graph disjoint_union(std::span<const Graph> parts) {
  int offset = 0;
  std::vector<Edge> e;
  for (const auto& part : parts) {
    for (auto [u, v] : part.edges()) e.emplace_back(u + offset, v + offset);
    offset += part.order();
  }
  return Graph(offset, e);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (Vertex u : s) {
    if (!g.contains_vertex(u)) return false;
    for (Vertex v : g.neighbors(u))
      if (s.contains(v)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!g.contains_vertex(m[i])) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.has_edge(m[i], m[j])) return false;
  }
  return true;
}

}  // namespace kpartite
