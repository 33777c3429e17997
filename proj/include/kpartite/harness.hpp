#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpartite/bounds.hpp"
#include "kpartite/graph.hpp"
#include "kpartite/recognition.hpp"

namespace kpartite {

inline constexpr int kCampaignMaxOrder = 10;

/// All integer partitions with sum 1..max_n: by sum, then lexicographically
/// as ascending part lists.
std::vector<PartitionProfile> partitions_up_to(int max_n);
std::vector<PartitionProfile> partitions_of(int n);

struct CampaignOptions {
  /// Worker threads; 0 or 1 runs inline. Results are merged in profile order.
  unsigned threads = 1;
  /// Keep a BoundReport for every realization.
  bool keep_reports = false;
  /// Also run the witness construction on every realization.
  bool check_witness = true;
};

struct CampaignResult {
  PartitionProfile profile;
  DegreeSequence sequence;
  int realization_count = 0;
  bool canonical_found = false;
  std::optional<int> canonical_alpha;
  std::optional<int> min_noncanonical_alpha;
  /// Canonical realization has alpha = k and every other one alpha >= k+1.
  bool theorem_holds = false;
  /// Witnesses valid with size >= k+1 on every non-canonical realization and
  /// rejected on the canonical one.
  bool witness_sound = true;
  std::vector<BoundReport> reports;
  double wall_seconds = 0.0;
};

/// Checks one profile: enumerates every realization of its clique-union degree
/// sequence and solves each exactly.
CampaignResult verify_profile(const PartitionProfile& profile, const CampaignOptions& options = {});
/// Throws SizeLimitExceeded for max_n > kCampaignMaxOrder.
std::vector<CampaignResult> verify_theorem(int max_n, const CampaignOptions& options = {});
std::vector<CampaignResult> verify_profiles(std::span<const PartitionProfile> profiles,
                                            const CampaignOptions& options = {});

/// Deterministic CSV summary, one row per profile (no timing columns).
void write_campaign_csv(std::ostream& out, std::span<const CampaignResult> results);

/// p<k> path, c<k> cycle, k<k> complete graph, e<k> edgeless graph.
Graph named_pattern(std::string_view name);
std::vector<Graph> parse_patterns(std::string_view list);

/// First enumerated non-canonical realization of the profile's clique-union
/// degree sequence with alpha exactly k+1 that contains every pattern as an
/// induced subgraph. Throws SizeLimitExceeded when the profile sums past 10.
std::optional<Graph> find_sharp_example(const PartitionProfile& profile, std::span<const Graph> patterns);

/// One CSV row per realization of each profile; the `classical_not_sharp`
/// column is 1 for non-canonical rows where caro_wei, turan_alpha and
/// hansen_zheng are all below k+1 <= exact alpha.
void bounds_report_campaign(std::span<const PartitionProfile> profiles, std::ostream& out);
void bounds_report_campaign(std::span<const PartitionProfile> profiles, const std::filesystem::path& path);
std::string bounds_campaign_header();

}  // namespace kpartite
