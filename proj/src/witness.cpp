#include "kpartite/witness.hpp"

#include <algorithm>

namespace kpartite {
namespace {

void count(WitnessStats* stats, std::uint64_t n = 1) {
  if (stats) stats->steps += n;
}

void require_sequence(const Graph& g, const PartitionProfile& p) {
  if (degree_sequence(g) != clique_union_sequence(p)) {
    throw OutsideFamily("graph is not degree-equivalent to the clique union " + format_parts(p));
  }
}

}  // namespace

StrippedGraph strip_clique_components(const Graph& g, const PartitionProfile& p, WitnessStats* stats) {
  require_sequence(g, p);
  std::vector<int> parts = p.parts;
  StrippedGraph out;
  std::vector<Vertex> kept;
  for (const auto& comp : connected_components(g)) {
    count(stats, comp.size());
    const int size = static_cast<int>(comp.size());
    const bool clique = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == size - 1; });
    if (!clique) {
      kept.insert(kept.end(), comp.begin(), comp.end());
      continue;
    }
    auto it = std::find(parts.begin(), parts.end(), size);
    if (it == parts.end()) {
      throw std::logic_error("clique component of size " + std::to_string(size) + " has no matching part");
    }
    parts.erase(it);
    out.removed.push_back(comp);
  }
  std::sort(kept.begin(), kept.end());
  out.graph = induced_subgraph(g, VertexSet(kept));
  out.profile = make_profile(std::move(parts), ProfileFlavor::clique_sizes);
  out.original = std::move(kept);
  return out;
}

ProofState make_proof_state(const Graph& graph, const PartitionProfile& profile) {
  require_sequence(graph, profile);
  ProofState state;
  state.graph = graph;
  state.profile = profile;
  state.c = profile.min_part_count();
  std::vector<std::vector<Vertex>> by_degree(static_cast<std::size_t>(std::max(graph.order(), 1)));
  for (Vertex v = 0; v < graph.order(); ++v) by_degree[static_cast<std::size_t>(graph.degree(v))].push_back(v);
  std::vector<std::size_t> taken(by_degree.size(), 0);
  for (int a : profile.parts) {
    auto& pool = by_degree[static_cast<std::size_t>(a - 1)];
    auto& used = taken[static_cast<std::size_t>(a - 1)];
    state.layers.emplace_back(pool.begin() + static_cast<std::ptrdiff_t>(used),
                              pool.begin() + static_cast<std::ptrdiff_t>(used) + a);
    used += static_cast<std::size_t>(a);
  }
  state.blocked.assign(static_cast<std::size_t>(graph.order()), 0);
  return state;
}

VertexSet base_independent_set(const ProofState& state, WitnessStats* stats) {
  const Graph& g = state.graph;
  std::vector<Vertex> base;
  for (int i = 0; i < state.c; ++i) base.insert(base.end(), state.layers[static_cast<std::size_t>(i)].begin(), state.layers[static_cast<std::size_t>(i)].end());
  std::sort(base.begin(), base.end());
  std::vector<char> in_base(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : base) in_base[static_cast<std::size_t>(v)] = 1;

  // Greedy maximal independent set of the base layers; blocked counts chosen neighbors.
  std::vector<int> blocked(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> chosen;
  for (Vertex v : base) {
    count(stats);
    if (blocked[static_cast<std::size_t>(v)]) continue;
    chosen.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      count(stats);
      ++blocked[static_cast<std::size_t>(u)];
    }
  }
  const auto c = static_cast<std::size_t>(state.c);
  if (chosen.size() > c) return VertexSet(chosen);
  if (chosen.size() < c) {
    throw std::logic_error("maximal independent set smaller than the number of minimum parts");
  }

  // Exactly c: the neighborhoods are disjoint and cover the rest, so any
  // non-adjacent pair inside one neighborhood can replace its center.
  for (Vertex x : chosen) {
    std::vector<Vertex> nb;
    for (Vertex u : g.neighbors(x)) {
      count(stats);
      if (in_base[static_cast<std::size_t>(u)]) nb.push_back(u);
    }
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        count(stats);
        const Vertex y = nb[p];
        const Vertex z = nb[q];
        if (g.has_edge(y, z)) continue;
        if (blocked[static_cast<std::size_t>(y)] != 1 || blocked[static_cast<std::size_t>(z)] != 1) continue;
        std::vector<Vertex> swapped;
        for (Vertex w : chosen)
          if (w != x) swapped.push_back(w);
        swapped.push_back(y);
        swapped.push_back(z);
        return VertexSet(std::move(swapped));
      }
    }
  }
  throw std::logic_error("every neighborhood in the base layers is a clique: input has a clique component");
}

void seed_independent_set(ProofState& state, const VertexSet& set) {
  state.independent = set;
  state.j = 0;
  state.blocked.assign(static_cast<std::size_t>(state.graph.order()), 0);
  for (Vertex v : set)
    for (Vertex u : state.graph.neighbors(v)) ++state.blocked[static_cast<std::size_t>(u)];
}

ProofState extend_independent_set(ProofState state, WitnessStats* stats) {
  const int rounds = state.profile.k() - state.c;
  if (state.j >= rounds) throw std::logic_error("no extension round left");
  const auto floor = static_cast<std::size_t>(state.c + state.j + 1);
  if (state.independent.size() < floor) throw std::logic_error("independent set below the layer invariant");

  std::vector<Vertex> scope;
  for (int i = 0; i < state.c + state.j + 1; ++i) {
    const auto& layer = state.layers[static_cast<std::size_t>(i)];
    scope.insert(scope.end(), layer.begin(), layer.end());
  }
  std::sort(scope.begin(), scope.end());
  count(stats, scope.size());
  for (Vertex v : scope) {
    count(stats);
    if (state.blocked[static_cast<std::size_t>(v)] || state.independent.contains(v)) continue;
    state.independent.insert(v);
    for (Vertex u : state.graph.neighbors(v)) {
      count(stats);
      ++state.blocked[static_cast<std::size_t>(u)];
    }
    ++state.j;
    return state;
  }
  if (state.independent.size() < floor + 1) {
    throw std::logic_error("no vertex extends the independent set");
  }
  ++state.j;
  return state;
}

WitnessCertificate witness_independent_set(const Graph& g, WitnessStats* stats) {
  const auto profile = clique_union_profile_from_degrees(degree_sequence(g));
  if (!profile) throw OutsideFamily("degree sequence is not that of a disjoint union of cliques");
  if (is_clique_union(g)) throw CanonicalInput("graph is the canonical clique union " + format_parts(*profile));

  StrippedGraph stripped = strip_clique_components(g, *profile, stats);
  ProofState state = make_proof_state(stripped.graph, stripped.profile);
  seed_independent_set(state, base_independent_set(state, stats));
  while (state.j < state.profile.k() - state.c) state = extend_independent_set(std::move(state), stats);

  std::vector<Vertex> members;
  for (Vertex v : state.independent) members.push_back(stripped.original[static_cast<std::size_t>(v)]);
  for (const auto& clique : stripped.removed) members.push_back(*clique.begin());
  WitnessCertificate cert{VertexSet(std::move(members)), CertificateKind::independent_set};
  if (!validate(g, cert) || cert.size() < profile->k() + 1) {
    throw std::logic_error("witness construction produced an invalid certificate");
  }
  return cert;
}

WitnessCertificate witness_clique(const Graph& g, WitnessStats* stats) {
  const auto profile = multipartite_profile_from_degrees(degree_sequence(g));
  if (!profile) throw OutsideFamily("degree sequence is not that of a complete multipartite graph");
  if (is_complete_multipartite(g)) {
    throw CanonicalInput("graph is the canonical complete multipartite graph " + format_parts(*profile));
  }
  WitnessCertificate cert = witness_independent_set(complement(g), stats);
  cert.kind = CertificateKind::clique;
  return cert;
}

}  // namespace kpartite
