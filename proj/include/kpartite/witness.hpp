#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpartite/bounds.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/graph.hpp"
#include "kpartite/recognition.hpp"

namespace kpartite {

/// The input is the canonical member of its family, so no (k+1)-witness exists.
class CanonicalInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct WitnessStats {
  std::uint64_t steps = 0;
};

struct StrippedGraph {
  Graph graph;
  PartitionProfile profile;
  /// original[v] is the input vertex behind working vertex v.
  std::vector<Vertex> original;
  /// Removed clique components, in input vertex labels.
  std::vector<VertexSet> removed;
};

/// Removes every connected component that is a complete graph, together with
/// one part of matching size from p. Throws OutsideFamily when g is not
/// degree-equivalent to the clique union of p, and std::logic_error when a
/// removed clique size is missing from p.
StrippedGraph strip_clique_components(const Graph& g, const PartitionProfile& p, WitnessStats* stats = nullptr);

/// Working state of the layered construction on a graph without clique
/// components.
struct ProofState {
  Graph graph;
  PartitionProfile profile;
  /// Number of parts equal to the smallest part.
  int c = 0;
  /// layers[i] holds profile.parts[i] vertices of degree parts[i]-1; equal
  /// degrees are dealt out in ascending vertex order.
  std::vector<std::vector<Vertex>> layers;
  VertexSet independent;
  /// Extension rounds done so far; the set lives in the first c+j layers.
  int j = 0;
  /// blocked[v] counts members of `independent` adjacent to v.
  std::vector<int> blocked;
};

/// Throws OutsideFamily when graph is not degree-equivalent to profile.
ProofState make_proof_state(const Graph& graph, const PartitionProfile& profile);

/// Independent set of size at least c+1 inside the first c layers: a greedy
/// maximal set in ascending vertex order, repaired by one swap when it has
/// exactly c members. Throws std::logic_error when the graph violates the
/// no-clique-component precondition.
VertexSet base_independent_set(const ProofState& state, WitnessStats* stats = nullptr);

/// Installs `set` as the current independent set (j reset to 0).
void seed_independent_set(ProofState& state, const VertexSet& set);

/// Adds the first vertex of layers 1..c+j+1 not adjacent to the current set and
/// advances j. Throws std::logic_error when no round is left or no vertex can
/// be added while the set is still below c+j+2.
ProofState extend_independent_set(ProofState state, WitnessStats* stats = nullptr);

/// Independent set of size >= k+1 for a non-canonical realization of a clique
/// union degree sequence. Throws CanonicalInput or OutsideFamily.
WitnessCertificate witness_independent_set(const Graph& g, WitnessStats* stats = nullptr);
/// Clique of size >= k+1 for a non-canonical realization of a complete
/// multipartite degree sequence, via the complement.
WitnessCertificate witness_clique(const Graph& g, WitnessStats* stats = nullptr);

}  // namespace kpartite
