#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "kpartite/canonical.hpp"
#include "kpartite/graph.hpp"
#include "kpartite/recognition.hpp"

namespace kpartite {

inline constexpr int kEnumerationMaxOrder = 10;

/// Builds one realization; vertex i receives the i-th largest degree.
/// Throws InvalidInput when d is not graphical.
Graph havel_hakimi_realize(const DegreeSequence& d);

/// Resumable enumeration of every realization of a degree sequence, one graph
/// per isomorphism class.
///
/// The upper triangle is filled in row-major order (edge before non-edge),
/// pruned by per-row slot counts and an Erdős–Gallai check on the residual
/// sequence at each row end. Completed matrices that are not lexicographic
/// leaders under swaps of equal-degree vertices are dropped, and the rest are
/// deduplicated by canonical key. Vertex i has the i-th largest target degree.
class RealizationStream {
 public:
  /// Throws InvalidInput for non-graphical d, SizeLimitExceeded above
  /// kEnumerationMaxOrder vertices.
  explicit RealizationStream(const DegreeSequence& d);

  /// Next non-isomorphic realization, or nullopt when exhausted.
  std::optional<Graph> next();

  [[nodiscard]] const DegreeSequence& target() const { return target_; }
  [[nodiscard]] std::uint64_t completed_matrices() const { return leaves_; }

 private:
  bool row_feasible(int row) const;
  bool leader_under_swaps() const;
  Graph current_graph() const;
  void undo(std::size_t pos);

  DegreeSequence target_;
  int n_ = 0;
  std::vector<int> degree_;    // target degree per vertex
  std::vector<int> residual_;  // still to be placed
  std::vector<Edge> pairs_;
  std::vector<std::uint8_t> stage_;  // 0 untried, 1 edge tried, 2 both tried
  std::vector<std::uint8_t> edge_;   // current decision per pair
  std::vector<std::vector<std::uint8_t>> matrix_;
  std::size_t pos_ = 0;
  bool done_ = false;
  bool at_leaf_ = false;
  std::uint64_t leaves_ = 0;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen_;
};

/// Drains a RealizationStream.
std::vector<Graph> enumerate_realizations(const DegreeSequence& d);

/// Degree-preserving swap: removes {a,b} and {c,d}, then adds either
/// {a,d},{b,c} or {a,c},{b,d}.
struct SwitchStep {
  enum class Rewiring { ad_bc, ac_bd };

  Vertex a = 0, b = 0, c = 0, d = 0;
  Rewiring rewiring = Rewiring::ad_bc;

  [[nodiscard]] std::pair<Edge, Edge> removed() const { return {{a, b}, {c, d}}; }
  [[nodiscard]] std::pair<Edge, Edge> added() const;
  /// The step that undoes this one.
  [[nodiscard]] SwitchStep inverse() const;
};

/// Throws InvalidInput unless all four vertices are distinct, the removed
/// edges are present and the added edges absent.
Graph two_switch(const Graph& g, const SwitchStep& step);

/// `steps` proposals, each an ordered pair of distinct edges and a rewiring
/// chosen uniformly; invalid proposals are rejected but still consume a step.
Graph random_switch_walk(const Graph& g, long long steps, std::uint64_t seed);

/// Disjoint union of four copies of a cubic graph. Throws InvalidInput when
/// some vertex degree is not 3.
Graph four_copies(const Graph& g);

}  // namespace kpartite
