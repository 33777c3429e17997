#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpartite/graph.hpp"

namespace kpartite {

/// Multiset of vertex degrees with a multiplicity index.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws InvalidInput on negative entries. Graphicality is not required.
  explicit DegreeSequence(std::vector<int> degrees);

  [[nodiscard]] int n() const { return static_cast<int>(sorted_.size()); }
  /// Non-increasing order.
  [[nodiscard]] const std::vector<int>& sorted() const { return sorted_; }
  /// degree value -> multiplicity, ascending by degree.
  [[nodiscard]] const std::map<int, int>& multiplicities() const { return multiplicities_; }
  [[nodiscard]] long long degree_sum() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> sorted_;
  std::map<int, int> multiplicities_;
};

DegreeSequence degree_sequence(const Graph& g);
/// {n-1-d : d in seq}.
DegreeSequence complement_sequence(const DegreeSequence& seq);

/// "1,2,3" or "1 2 3" (commas and whitespace both separate).
DegreeSequence parse_degree_list(std::string_view text);

enum class ProfileFlavor { multipartite_parts, clique_sizes };

/// Part sizes a_1 <= ... <= a_k of a complete multipartite graph or clique union.
struct PartitionProfile {
  std::vector<int> parts;  // ascending
  ProfileFlavor flavor = ProfileFlavor::clique_sizes;

  [[nodiscard]] int k() const { return static_cast<int>(parts.size()); }
  [[nodiscard]] int total() const;
  /// Number of parts equal to the smallest part (c in the counting argument).
  [[nodiscard]] int min_part_count() const;

  friend bool operator==(const PartitionProfile&, const PartitionProfile&) = default;
};

/// Sorts the parts ascending; throws InvalidInput on non-positive entries.
PartitionProfile make_profile(std::vector<int> parts, ProfileFlavor flavor);
PartitionProfile parse_profile(std::string_view text, ProfileFlavor flavor);
std::string format_parts(const PartitionProfile& p, char sep = ',');

/// Canonical member of each family for a profile (ignores the flavor field).
Graph canonical_clique_union(const PartitionProfile& p);
Graph canonical_multipartite(const PartitionProfile& p);
/// Degree sequence of the clique union (each part a contributes a copies of a-1).
DegreeSequence clique_union_sequence(const PartitionProfile& p);
DegreeSequence multipartite_sequence(const PartitionProfile& p);

/// Work counters for checking the recognition cost budgets.
struct RecognitionStats {
  std::uint64_t adjacency_reads = 0;
  std::uint64_t multiplicity_reads = 0;
};

std::optional<PartitionProfile> is_complete_multipartite(const Graph& g, RecognitionStats* stats = nullptr);
std::optional<PartitionProfile> is_clique_union(const Graph& g, RecognitionStats* stats = nullptr);

/// Degree equivalence to some K_{a_1,...,a_k}: every multiplicity mu_d is a
/// positive multiple of n-d. Throws InvalidInput if some d >= n.
std::optional<PartitionProfile> multipartite_profile_from_degrees(const DegreeSequence& d,
                                                                  RecognitionStats* stats = nullptr);
/// Degree equivalence to some clique union: every mu_d is a multiple of d+1.
std::optional<PartitionProfile> clique_union_profile_from_degrees(const DegreeSequence& d,
                                                                  RecognitionStats* stats = nullptr);

/// Erdős–Gallai.
bool is_graphical(const DegreeSequence& d);
bool is_graphical(std::span<const int> degrees);

}  // namespace kpartite
