#include "kpartite/canonical.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace kpartite {
namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
  return adj;
}

Mask cell_mask(const std::vector<int>& cell) {
  Mask m = 0;
  for (int v : cell) m |= Mask{1} << v;
  return m;
}

// Splits cells by neighbor counts into each splitter cell until the partition
// is equitable. New subcells are ordered by ascending count, which keeps the
// result independent of vertex labels.
void refine(Cells& cells, const std::vector<Mask>& adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const Mask splitter = cell_mask(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.size() == 1) continue;
        auto count = [&](int v) { return std::popcount(adj[static_cast<std::size_t>(v)] & splitter); };
        const int first = count(cell.front());
        if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
        Cells pieces;
        for (int v : cell) {
          if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

CanonicalKey key_for_order(const std::vector<int>& order, const std::vector<Mask>& adj) {
  CanonicalKey key;
  key.n = static_cast<int>(order.size());
  int t = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j, ++t) {
      if (adj[static_cast<std::size_t>(order[i])] & (Mask{1} << order[j])) {
        key.bits[static_cast<std::size_t>(t / 64)] |= std::uint64_t{1} << (63 - t % 64);
      }
    }
  }
  return key;
}

struct Search {
  std::vector<Mask> adj;
  bool have_best = false;
  CanonicalKey best;
  std::vector<int> best_order;

  void run(Cells cells) {
    refine(cells, adj);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      for (const auto& c : cells) order.push_back(c.front());
      CanonicalKey key = key_for_order(order, adj);
      if (!have_best || key < best) {
        have_best = true;
        best = key;
        best_order = std::move(order);
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> candidates = *target;
    std::vector<int> tried;
    for (int v : candidates) {
      // Twins u, v: the transposition (u v) is an automorphism fixing every
      // vertex individualized so far, so both subtrees yield the same keys.
      const bool twin_of_tried = std::any_of(tried.begin(), tried.end(), [&](int u) {
        const Mask uv = (Mask{1} << u) | (Mask{1} << v);
        return (adj[static_cast<std::size_t>(u)] & ~uv) == (adj[static_cast<std::size_t>(v)] & ~uv);
      });
      if (twin_of_tried) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<int> rest;
      for (int w : candidates)
        if (w != v) rest.push_back(w);
      next[index] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(index) + 1, rest);
      run(std::move(next));
    }
  }
};

Search canonical_search(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw SizeLimitExceeded("canonical form supports at most " + std::to_string(kCanonicalMaxOrder) +
                            " vertices, got " + std::to_string(g.order()));
  }
  Search search;
  search.adj = adjacency_masks(g);
  if (g.order() == 0) {
    search.have_best = true;
    return search;
  }
  Cells cells(1);
  for (int v = 0; v < g.order(); ++v) cells[0].push_back(v);
  search.run(std::move(cells));
  return search;
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) { return canonical_search(g).best; }

Graph canonical_graph(const Graph& g) {
  Search s = canonical_search(g);
  std::vector<int> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < s.best_order.size(); ++i) position[static_cast<std::size_t>(s.best_order[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  return Graph(g.order(), e);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_key(g) == canonical_key(h);
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  const int p = pattern.order();
  if (p > kInducedPatternMaxOrder) {
    throw SizeLimitExceeded("induced pattern supports at most " + std::to_string(kInducedPatternMaxOrder) +
                            " vertices, got " + std::to_string(p));
  }
  const int n = g.order();
  if (p > n) return false;
  if (p == 0) return true;
  const CanonicalKey want = canonical_key(pattern);
  std::vector<int> pick(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    Graph sub = induced_subgraph(g, VertexSet(pick));
    if (sub.size() == pattern.size() && canonical_key(sub) == want) return true;
    int i = p - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace kpartite
