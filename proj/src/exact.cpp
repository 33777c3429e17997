#include "kpartite/exact.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace kpartite {

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::clique ? "clique" : "independent-set";
}

bool validate(const Graph& g, const WitnessCertificate& cert) {
  return cert.kind == CertificateKind::clique ? is_clique(g, cert.vertices) : is_independent_set(g, cert.vertices);
}

namespace {

class Bits {
 public:
  explicit Bits(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  void set(int v) { words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }
  [[nodiscard]] bool test(int v) const {
    return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
  }
  [[nodiscard]] bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  [[nodiscard]] int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  /// Lowest set index, or -1.
  [[nodiscard]] int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w; w &= w - 1) f(static_cast<int>(i * 64) + std::countr_zero(w));
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : n_(g.order()) {
    adj_.reserve(static_cast<std::size_t>(n_));
    closed_.reserve(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      Bits row(n_);
      for (Vertex u : g.neighbors(v)) row.set(u);
      adj_.push_back(row);
      row.set(v);
      closed_.push_back(std::move(row));
    }
  }

  std::vector<Vertex> solve() {
    Bits all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    expand(all);
    return best_;
  }

 private:
  // Each greedy clique holds at most one vertex of any independent set.
  int clique_cover_bound(Bits remaining) const {
    int cliques = 0;
    for (int u = remaining.first(); u >= 0; u = remaining.first()) {
      remaining.reset(u);
      Bits candidates = remaining;
      candidates &= adj_[static_cast<std::size_t>(u)];
      for (int w = candidates.first(); w >= 0; w = candidates.first()) {
        remaining.reset(w);
        candidates.reset(w);
        candidates &= adj_[static_cast<std::size_t>(w)];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(const Bits& pool) {
    if (pool.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (static_cast<int>(current_.size()) + clique_cover_bound(pool) <= static_cast<int>(best_.size())) return;

    int pivot = -1;
    int pivot_degree = -1;
    pool.for_each([&](int v) {
      const int d = pool.count_and(adj_[static_cast<std::size_t>(v)]);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });
    if (pivot_degree == 0) {
      // The pool is itself independent.
      const auto before = current_.size();
      pool.for_each([&](int v) { current_.push_back(v); });
      if (current_.size() > best_.size()) best_ = current_;
      current_.resize(before);
      return;
    }

    current_.push_back(pivot);
    Bits with = pool;
    with.and_not(closed_[static_cast<std::size_t>(pivot)]);
    expand(with);
    current_.pop_back();

    Bits without = pool;
    without.reset(pivot);
    expand(without);
  }

  int n_;
  std::vector<Bits> adj_;
  std::vector<Bits> closed_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

void check_cap(const Graph& g, const ExactOptions& options) {
  if (g.order() > options.max_vertices) {
    throw SizeLimitExceeded("exact solver cap is " + std::to_string(options.max_vertices) + " vertices, got " +
                            std::to_string(g.order()));
  }
}

}  // namespace

WitnessCertificate max_independent_set(const Graph& g, const ExactOptions& options) {
  check_cap(g, options);
  IndependentSetSearch search(g);
  return {VertexSet(search.solve()), CertificateKind::independent_set};
}

WitnessCertificate max_clique(const Graph& g, const ExactOptions& options) {
  check_cap(g, options);
  IndependentSetSearch search(complement(g));
  return {VertexSet(search.solve()), CertificateKind::clique};
}

int brute_force_alpha(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw SizeLimitExceeded("brute force supports at most " + std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint8_t> independent(subsets, 0);
  independent[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(adj[static_cast<std::size_t>(low)] & rest);
    if (independent[s]) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace kpartite
