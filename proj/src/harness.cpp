#include "kpartite/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "kpartite/canonical.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/graph_io.hpp"
#include "kpartite/realizations.hpp"
#include "kpartite/witness.hpp"

namespace kpartite {

std::vector<PartitionProfile> partitions_of(int n) {
  std::vector<PartitionProfile> out;
  std::vector<int> current;
  // Parts are non-decreasing; extending with the smallest admissible part
  // first yields lexicographic order.
  std::function<void(int, int)> build = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.push_back(PartitionProfile{current, ProfileFlavor::clique_sizes});
      return;
    }
    for (int a = min_part; a <= remaining; ++a) {
      if (remaining - a != 0 && remaining - a < a) continue;
      current.push_back(a);
      build(remaining - a, a);
      current.pop_back();
    }
  };
  if (n > 0) build(n, 1);
  return out;
}

std::vector<PartitionProfile> partitions_up_to(int max_n) {
  std::vector<PartitionProfile> out;
  for (int n = 1; n <= max_n; ++n) {
    auto batch = partitions_of(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

namespace {

void require_campaign_size(int n) {
  if (n > kCampaignMaxOrder) {
    throw SizeLimitExceeded("campaigns support at most " + std::to_string(kCampaignMaxOrder) + " vertices");
  }
}

bool witness_matches(const Graph& g, bool canonical, int k) {
  try {
    const auto cert = witness_independent_set(g);
    return !canonical && validate(g, cert) && cert.size() >= k + 1;
  } catch (const CanonicalInput&) {
    return canonical;
  }
}

}  // namespace

CampaignResult verify_profile(const PartitionProfile& profile, const CampaignOptions& options) {
  require_campaign_size(profile.total());
  const auto start = std::chrono::steady_clock::now();
  CampaignResult r;
  r.profile = profile;
  r.sequence = clique_union_sequence(profile);
  const int k = profile.k();
  bool others_ok = true;

  RealizationStream stream(r.sequence);
  int index = 0;
  while (auto g = stream.next()) {
    ++r.realization_count;
    const bool canonical = is_clique_union(*g).has_value();
    const int alpha = max_independent_set(*g).size();
    if (canonical) {
      r.canonical_found = true;
      r.canonical_alpha = alpha;
    } else {
      r.min_noncanonical_alpha = std::min(alpha, r.min_noncanonical_alpha.value_or(alpha));
      others_ok = others_ok && alpha >= k + 1;
    }
    if (options.check_witness) r.witness_sound = r.witness_sound && witness_matches(*g, canonical, k);
    if (options.keep_reports) {
      r.reports.push_back(compare_bounds(*g, true, format_parts(profile, '+') + "#" + std::to_string(index)));
    }
    ++index;
  }
  r.theorem_holds = r.canonical_found && r.canonical_alpha == k && others_ok;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CampaignResult> verify_profiles(std::span<const PartitionProfile> profiles,
                                            const CampaignOptions& options) {
  for (const auto& p : profiles) require_campaign_size(p.total());
  std::vector<CampaignResult> results(profiles.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(profiles.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < profiles.size(); ++i) results[i] = verify_profile(profiles[i], options);
    return results;
  }
  // Largest profiles sit at the end, so workers pull from the back first.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = next++; t < profiles.size(); t = next++) {
          const std::size_t i = profiles.size() - 1 - t;
          results[i] = verify_profile(profiles[i], options);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::vector<CampaignResult> verify_theorem(int max_n, const CampaignOptions& options) {
  require_campaign_size(max_n);
  const auto profiles = partitions_up_to(max_n);
  return verify_profiles(profiles, options);
}

void write_campaign_csv(std::ostream& out, std::span<const CampaignResult> results) {
  out << "schema_version,profile,n,k,degree_sequence,realizations,canonical_found,canonical_alpha,"
         "min_noncanonical_alpha,theorem_holds,witness_sound\n";
  for (const auto& r : results) {
    std::string seq;
    for (int d : r.sequence.sorted()) seq += (seq.empty() ? "" : " ") + std::to_string(d);
    out << kReportSchemaVersion << "," << format_parts(r.profile, ' ') << "," << r.profile.total() << ","
        << r.profile.k() << "," << seq << "," << r.realization_count << "," << (r.canonical_found ? 1 : 0) << ","
        << (r.canonical_alpha ? std::to_string(*r.canonical_alpha) : "") << ","
        << (r.min_noncanonical_alpha ? std::to_string(*r.min_noncanonical_alpha) : "") << ","
        << (r.theorem_holds ? 1 : 0) << "," << (r.witness_sound ? 1 : 0) << "\n";
  }
}

Graph named_pattern(std::string_view name) {
  if (name.size() < 2) throw InvalidInput("bad pattern name '" + std::string(name) + "'");
  int size = 0;
  try {
    std::size_t used = 0;
    size = std::stoi(std::string(name.substr(1)), &used);
    if (used != name.size() - 1) throw InvalidInput("");
  } catch (const std::exception&) {
    throw InvalidInput("bad pattern name '" + std::string(name) + "'");
  }
  switch (name[0]) {
    case 'p':
    case 'P':
      return path_graph(size);
    case 'c':
    case 'C':
      return cycle_graph(size);
    case 'k':
    case 'K':
      return complete_graph(size);
    case 'e':
    case 'E':
      return empty_graph(size);
    default:
      throw InvalidInput("bad pattern name '" + std::string(name) + "'");
  }
}

std::vector<Graph> parse_patterns(std::string_view list) {
  std::vector<Graph> out;
  std::string text(list);
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(named_pattern(token));
  }
  return out;
}

std::optional<Graph> find_sharp_example(const PartitionProfile& profile, std::span<const Graph> patterns) {
  require_campaign_size(profile.total());
  RealizationStream stream(clique_union_sequence(profile));
  const int k = profile.k();
  while (auto g = stream.next()) {
    if (is_clique_union(*g)) continue;
    if (max_independent_set(*g).size() != k + 1) continue;
    const bool all = std::all_of(patterns.begin(), patterns.end(),
                                 [&](const Graph& p) { return contains_induced(*g, p); });
    if (all) return g;
  }
  return std::nullopt;
}

std::string bounds_campaign_header() {
  return "profile,k,canonical,graph6," + report_csv_header() + ",classical_not_sharp";
}

void bounds_report_campaign(std::span<const PartitionProfile> profiles, std::ostream& out) {
  out << bounds_campaign_header() << "\n";
  for (const auto& profile : profiles) {
    require_campaign_size(profile.total());
    const int k = profile.k();
    RealizationStream stream(clique_union_sequence(profile));
    int index = 0;
    while (auto g = stream.next()) {
      const bool canonical = is_clique_union(*g).has_value();
      const auto report = compare_bounds(*g, true, format_parts(profile, '+') + "#" + std::to_string(index++));
      const Rational target = k + 1;
      const bool flagged = !canonical && report.caro_wei < target && report.turan_alpha < target &&
                           report.hansen_zheng < k + 1 && report.exact_alpha.value_or(0) >= k + 1;
      out << format_parts(profile, ' ') << "," << k << "," << (canonical ? 1 : 0) << "," << to_graph6(*g) << ","
          << report_to_csv_row(report) << "," << (flagged ? 1 : 0) << "\n";
    }
  }
}

void bounds_report_campaign(std::span<const PartitionProfile> profiles, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  bounds_report_campaign(profiles, out);
}

}  // namespace kpartite
