#include "kpartite/realizations.hpp"

#include <algorithm>
#include <unordered_set>

#include "kpartite/random.hpp"

namespace kpartite {

Graph havel_hakimi_realize(const DegreeSequence& d) {
  if (!is_graphical(d)) throw InvalidInput("degree sequence is not graphical");
  const int n = d.n();
  std::vector<int> residual = d.sorted();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  while (true) {
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    });
    const int top = order.front();
    const int need = residual[static_cast<std::size_t>(top)];
    if (need == 0) break;
    residual[static_cast<std::size_t>(top)] = 0;
    for (int i = 1; i <= need; ++i) {
      const int v = order[static_cast<std::size_t>(i)];
      --residual[static_cast<std::size_t>(v)];
      edges.emplace_back(top, v);
    }
  }
  return Graph(n, edges);
}

RealizationStream::RealizationStream(const DegreeSequence& d) : target_(d), n_(d.n()) {
  if (n_ > kEnumerationMaxOrder) {
    throw SizeLimitExceeded("enumeration supports at most " + std::to_string(kEnumerationMaxOrder) + " vertices");
  }
  if (!is_graphical(d)) throw InvalidInput("degree sequence is not graphical");
  degree_ = d.sorted();
  residual_ = degree_;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
  stage_.assign(pairs_.size(), 0);
  edge_.assign(pairs_.size(), 0);
  matrix_.assign(static_cast<std::size_t>(n_), std::vector<std::uint8_t>(static_cast<std::size_t>(n_), 0));
}

void RealizationStream::undo(std::size_t pos) {
  if (!edge_[pos]) return;
  auto [i, j] = pairs_[pos];
  ++residual_[static_cast<std::size_t>(i)];
  ++residual_[static_cast<std::size_t>(j)];
  matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
  matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
  edge_[pos] = 0;
}

// Checked after deciding pair (row, col).
bool RealizationStream::row_feasible(int row) const {
  std::vector<int> rest(residual_.begin() + row + 1, residual_.end());
  return is_graphical(rest);
}

bool RealizationStream::leader_under_swaps() const {
  const auto at = [&](int a, int b) { return matrix_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_ && degree_[static_cast<std::size_t>(v)] == degree_[static_cast<std::size_t>(u)]; ++v) {
      const auto swap = [&](int x) { return x == u ? v : (x == v ? u : x); };
      // Walk the upper triangle in row-major order, visiting only positions
      // that touch u or v; the first difference decides.
      int verdict = 0;
      for (int a = 0; a < n_ && verdict == 0; ++a) {
        const bool moved = a == u || a == v;
        for (int b = a + 1; b < n_ && verdict == 0; ++b) {
          if (!moved && b != u && b != v) continue;
          verdict = static_cast<int>(at(a, b)) - static_cast<int>(at(swap(a), swap(b)));
        }
      }
      if (verdict < 0) return false;
    }
  }
  return true;
}

Graph RealizationStream::current_graph() const {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (edge_[p]) edges.push_back(pairs_[p]);
  return Graph(n_, edges);
}

std::optional<Graph> RealizationStream::next() {
  const auto last_col = n_ - 1;
  auto decision_ok = [&](std::size_t pos) {
    auto [i, j] = pairs_[pos];
    if (residual_[static_cast<std::size_t>(i)] > last_col - j) return false;
    // Partners still open for j: rows strictly between i and j, then row j.
    if (residual_[static_cast<std::size_t>(j)] > (j - i - 1) + (last_col - j)) return false;
    return j != last_col || row_feasible(i);
  };

  while (!done_) {
    if (pos_ == pairs_.size()) {
      ++leaves_;
      std::optional<Graph> out;
      if (leader_under_swaps()) {
        Graph g = current_graph();
        if (seen_.insert(canonical_key(g)).second) out = std::move(g);
      }
      if (pairs_.empty()) {
        done_ = true;
      } else {
        pos_ = pairs_.size() - 1;
        undo(pos_);
      }
      if (out) return out;
      continue;
    }
    auto [i, j] = pairs_[pos_];
    if (stage_[pos_] == 0) {
      stage_[pos_] = 1;
      if (residual_[static_cast<std::size_t>(i)] > 0 && residual_[static_cast<std::size_t>(j)] > 0) {
        --residual_[static_cast<std::size_t>(i)];
        --residual_[static_cast<std::size_t>(j)];
        matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
        edge_[pos_] = 1;
        if (decision_ok(pos_)) {
          ++pos_;
          continue;
        }
        undo(pos_);
      }
    }
    if (stage_[pos_] == 1) {
      stage_[pos_] = 2;
      if (decision_ok(pos_)) {
        ++pos_;
        continue;
      }
    }
    stage_[pos_] = 0;
    if (pos_ == 0) {
      done_ = true;
      break;
    }
    --pos_;
    undo(pos_);
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_realizations(const DegreeSequence& d) {
  RealizationStream stream(d);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::pair<Edge, Edge> SwitchStep::added() const {
  return rewiring == Rewiring::ad_bc ? std::pair<Edge, Edge>{{a, d}, {b, c}} : std::pair<Edge, Edge>{{a, c}, {b, d}};
}

SwitchStep SwitchStep::inverse() const {
  if (rewiring == Rewiring::ad_bc) return {a, d, c, b, Rewiring::ad_bc};
  return {a, c, b, d, Rewiring::ac_bd};
}

Graph two_switch(const Graph& g, const SwitchStep& step) {
  const std::vector<Vertex> four{step.a, step.b, step.c, step.d};
  for (Vertex v : four)
    if (!g.contains_vertex(v)) throw InvalidInput("switch vertex out of range");
  if (VertexSet(four).size() != 4) throw InvalidInput("switch needs four distinct vertices");
  auto [r1, r2] = step.removed();
  auto [a1, a2] = step.added();
  if (!g.has_edge(r1.first, r1.second) || !g.has_edge(r2.first, r2.second)) {
    throw InvalidInput("switch removes an edge that is not present");
  }
  if (g.has_edge(a1.first, a1.second) || g.has_edge(a2.first, a2.second)) {
    throw InvalidInput("switch adds an edge that is already present");
  }
  const auto norm = [](Edge e) { return Edge{std::min(e.first, e.second), std::max(e.first, e.second)}; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e != norm(r1) && e != norm(r2)) edges.push_back(e);
  edges.push_back(a1);
  edges.push_back(a2);
  return Graph(g.order(), edges);
}

Graph random_switch_walk(const Graph& g, long long steps, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges = g.edges();
  const auto n = static_cast<std::uint64_t>(g.order());
  const auto code = [n](Vertex u, Vertex v) {
    return static_cast<std::uint64_t>(std::min(u, v)) * n + static_cast<std::uint64_t>(std::max(u, v));
  };
  std::unordered_set<std::uint64_t> present;
  for (auto [u, v] : edges) present.insert(code(u, v));
  const auto m = static_cast<std::uint64_t>(edges.size());
  for (long long s = 0; s < steps; ++s) {
    if (m < 2) continue;
    const auto first = uniform_below(rng, m);
    auto second = uniform_below(rng, m - 1);
    if (second >= first) ++second;
    const bool crosswise = uniform_below(rng, 2) == 0;
    auto [a, b] = edges[first];
    auto [c, d] = edges[second];
    const Edge x = crosswise ? Edge{a, d} : Edge{a, c};
    const Edge y = crosswise ? Edge{b, c} : Edge{b, d};
    if (a == c || a == d || b == c || b == d) continue;
    if (present.contains(code(x.first, x.second)) || present.contains(code(y.first, y.second))) continue;
    present.erase(code(a, b));
    present.erase(code(c, d));
    present.insert(code(x.first, x.second));
    present.insert(code(y.first, y.second));
    edges[first] = {std::min(x.first, x.second), std::max(x.first, x.second)};
    edges[second] = {std::min(y.first, y.second), std::max(y.first, y.second)};
  }
  return Graph(g.order(), edges);
}

Graph four_copies(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) throw InvalidInput("four_copies expects a cubic graph; vertex " + std::to_string(v) +
                                             " has degree " + std::to_string(g.degree(v)));
  }
  const std::vector<Graph> copies(4, g);
  return disjoint_union(copies);
}

}  // namespace kpartite
