#include "kpartite/recognition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kpartite {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : sorted_(std::move(degrees)) {
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
  if (!sorted_.empty() && sorted_.back() < 0) throw InvalidInput("negative degree");
  // Equal values are adjacent after sorting, so one pass builds the index.
  for (std::size_t i = 0; i < sorted_.size();) {
    std::size_t j = i;
    while (j < sorted_.size() && sorted_[j] == sorted_[i]) ++j;
    multiplicities_.emplace(sorted_[i], static_cast<int>(j - i));
    i = j;
  }
}

long long DegreeSequence::degree_sum() const {
  return std::accumulate(sorted_.begin(), sorted_.end(), 0LL);
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

DegreeSequence complement_sequence(const DegreeSequence& seq) {
  std::vector<int> out;
  out.reserve(seq.sorted().size());
  for (int d : seq.sorted()) {
    if (d > seq.n() - 1) throw InvalidInput("degree " + std::to_string(d) + " exceeds n-1");
    out.push_back(seq.n() - 1 - d);
  }
  return DegreeSequence(std::move(out));
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InvalidInput("not an integer: '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

DegreeSequence parse_degree_list(std::string_view text) { return DegreeSequence(parse_int_list(text)); }

int PartitionProfile::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int PartitionProfile::min_part_count() const {
  if (parts.empty()) return 0;
  return static_cast<int>(std::count(parts.begin(), parts.end(), parts.front()));
}

PartitionProfile make_profile(std::vector<int> parts, ProfileFlavor flavor) {
  if (std::any_of(parts.begin(), parts.end(), [](int a) { return a <= 0; })) {
    throw InvalidInput("part sizes must be positive");
  }
  std::sort(parts.begin(), parts.end());
  return PartitionProfile{std::move(parts), flavor};
}

PartitionProfile parse_profile(std::string_view text, ProfileFlavor flavor) {
  return make_profile(parse_int_list(text), flavor);
}

std::string format_parts(const PartitionProfile& p, char sep) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(p.parts[i]);
  }
  return out;
}

Graph canonical_clique_union(const PartitionProfile& p) { return clique_union(p.parts); }
Graph canonical_multipartite(const PartitionProfile& p) { return complete_multipartite(p.parts); }

DegreeSequence clique_union_sequence(const PartitionProfile& p) {
  std::vector<int> d;
  for (int a : p.parts) d.insert(d.end(), static_cast<std::size_t>(a), a - 1);
  return DegreeSequence(std::move(d));
}

DegreeSequence multipartite_sequence(const PartitionProfile& p) {
  const int n = p.total();
  std::vector<int> d;
  for (int a : p.parts) d.insert(d.end(), static_cast<std::size_t>(a), n - a);
  return DegreeSequence(std::move(d));
}

std::optional<PartitionProfile> is_complete_multipartite(const Graph& g, RecognitionStats* stats) {
  RecognitionStats local;
  RecognitionStats& st = stats ? *stats : local;
  const int n = g.order();
  if (n == 0) return PartitionProfile{{}, ProfileFlavor::multipartite_parts};

  // Counting sort by degree.
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) buckets[static_cast<std::size_t>(g.degree(v))].push_back(v);

  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  for (int d = 0; d < n; ++d) {
    const auto& bucket = buckets[static_cast<std::size_t>(d)];
    if (bucket.empty()) continue;
    // A vertex in a part of size a is adjacent to exactly the other n-a vertices.
    const int a = n - d;
    if (static_cast<int>(bucket.size()) % a != 0) return std::nullopt;
    for (Vertex v : bucket) {
      if (class_of[static_cast<std::size_t>(v)] >= 0) continue;
      const int id = static_cast<int>(sizes.size());
      for (Vertex u : g.neighbors(v)) {
        ++st.adjacency_reads;
        stamp[static_cast<std::size_t>(u)] = id;
      }
      int size = 0;
      for (Vertex u : bucket) {
        ++st.adjacency_reads;
        if (class_of[static_cast<std::size_t>(u)] < 0 && stamp[static_cast<std::size_t>(u)] != id) {
          class_of[static_cast<std::size_t>(u)] = id;
          ++size;
        }
      }
      if (size != a) return std::nullopt;
      sizes.push_back(a);
    }
  }
  // Each class is independent and every vertex has degree n - |class|, so all
  // cross-class pairs are edges.
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      ++st.adjacency_reads;
      if (class_of[static_cast<std::size_t>(u)] == class_of[static_cast<std::size_t>(v)]) return std::nullopt;
    }
  }
  return make_profile(std::move(sizes), ProfileFlavor::multipartite_parts);
}

std::optional<PartitionProfile> is_clique_union(const Graph& g, RecognitionStats* stats) {
  RecognitionStats local;
  RecognitionStats& st = stats ? *stats : local;
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack;
  std::vector<int> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        ++st.adjacency_reads;
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    const int size = static_cast<int>(comp.size());
    for (Vertex u : comp)
      if (g.degree(u) != size - 1) return std::nullopt;
    sizes.push_back(size);
  }
  return make_profile(std::move(sizes), ProfileFlavor::clique_sizes);
}

namespace {

template <typename PartSize>
std::optional<PartitionProfile> profile_from_multiplicities(const DegreeSequence& d, ProfileFlavor flavor,
                                                            RecognitionStats* stats, PartSize part_size) {
  const int n = d.n();
  std::vector<int> parts;
  for (auto [degree, count] : d.multiplicities()) {
    if (stats) ++stats->multiplicity_reads;
    if (degree >= n) {
      throw InvalidInput("degree " + std::to_string(degree) + " impossible with " + std::to_string(n) + " vertices");
    }
    const int a = part_size(degree);
    if (count % a != 0) return std::nullopt;
    parts.insert(parts.end(), static_cast<std::size_t>(count / a), a);
  }
  return make_profile(std::move(parts), flavor);
}

}  // namespace

std::optional<PartitionProfile> multipartite_profile_from_degrees(const DegreeSequence& d, RecognitionStats* stats) {
  const int n = d.n();
  return profile_from_multiplicities(d, ProfileFlavor::multipartite_parts, stats,
                                     [n](int degree) { return n - degree; });
}

std::optional<PartitionProfile> clique_union_profile_from_degrees(const DegreeSequence& d, RecognitionStats* stats) {
  return profile_from_multiplicities(d, ProfileFlavor::clique_sizes, stats, [](int degree) { return degree + 1; });
}

bool is_graphical(const DegreeSequence& d) {
  const auto& seq = d.sorted();  // non-increasing
  const auto n = static_cast<long long>(seq.size());
  if (d.degree_sum() % 2 != 0) return false;
  std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (long long i = n - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + seq[static_cast<std::size_t>(i)];
  long long lhs = 0;
  long long at_least_k = n;  // number of entries with value >= k
  for (long long k = 1; k <= n; ++k) {
    lhs += seq[static_cast<std::size_t>(k - 1)];
    while (at_least_k > 0 && seq[static_cast<std::size_t>(at_least_k - 1)] < k) --at_least_k;
    const long long capped = std::max(0LL, at_least_k - k);
    const long long rhs = k * (k - 1) + k * capped + suffix[static_cast<std::size_t>(std::max(at_least_k, k))];
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical(std::span<const int> degrees) {
  if (std::any_of(degrees.begin(), degrees.end(), [](int x) { return x < 0; })) return false;
  return is_graphical(DegreeSequence(std::vector<int>(degrees.begin(), degrees.end())));
}

}  // namespace kpartite
