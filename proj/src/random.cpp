#include "kpartite/random.hpp"

#include <set>
#include <string>
#include <vector>

namespace kpartite {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

Graph random_graph(Rng& rng, int n, std::uint64_t numerator, std::uint64_t denominator) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_below(rng, denominator) < numerator) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_regular_graph(Rng& rng, int n, int d) {
  if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) {
    throw InvalidInput("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
    std::set<Edge> edges;
    bool ok = true;
    while (!points.empty() && ok) {
      const auto i = uniform_below(rng, points.size());
      std::swap(points[i], points.back());
      const int u = points.back();
      points.pop_back();
      const auto j = uniform_below(rng, points.size());
      std::swap(points[j], points.back());
      const int v = points.back();
      points.pop_back();
      const Edge e{std::min(u, v), std::max(u, v)};
      ok = u != v && edges.insert(e).second;
    }
    if (ok) return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
}

}  // namespace kpartite
