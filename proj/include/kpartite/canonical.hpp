#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "kpartite/graph.hpp"

namespace kpartite {

inline constexpr int kCanonicalMaxOrder = 12;
inline constexpr int kInducedPatternMaxOrder = 6;

/// Isomorphism-invariant key: the lexicographically smallest upper-triangle
/// adjacency bit string over all refinement-compatible vertex orderings.
struct CanonicalKey {
  int n = 0;
  std::array<std::uint64_t, 2> bits{};  // 66 pairs fit for n <= 12

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.n) * 0x9E3779B97F4A7C15ULL;
    h ^= k.bits[0] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= k.bits[1] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Throws SizeLimitExceeded for n > kCanonicalMaxOrder.
CanonicalKey canonical_key(const Graph& g);
/// The graph whose adjacency string is the canonical key.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff some vertex subset of g induces a copy of pattern.
/// Throws SizeLimitExceeded for pattern.order() > kInducedPatternMaxOrder.
bool contains_induced(const Graph& g, const Graph& pattern);

}  // namespace kpartite
