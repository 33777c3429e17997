#pragma once

#include <string>

#include "kpartite/graph.hpp"

namespace kpartite {

enum class CertificateKind { independent_set, clique };

std::string to_string(CertificateKind kind);

/// An explicit vertex set proving a lower bound on alpha or omega.
struct WitnessCertificate {
  VertexSet vertices;
  CertificateKind kind = CertificateKind::independent_set;

  [[nodiscard]] int size() const { return static_cast<int>(vertices.size()); }
};

/// Checks the certificate against g from scratch.
bool validate(const Graph& g, const WitnessCertificate& cert);

struct ExactOptions {
  int max_vertices = 64;
};

/// Branch and bound with a greedy clique-cover bound; branches on the vertex of
/// maximum remaining degree, lowest index first. The returned set is the first
/// maximum set reached in that deterministic order.
/// Throws SizeLimitExceeded above options.max_vertices.
WitnessCertificate max_independent_set(const Graph& g, const ExactOptions& options = {});
/// Solved as an independent set of the complement.
WitnessCertificate max_clique(const Graph& g, const ExactOptions& options = {});

inline constexpr int kBruteForceMaxOrder = 20;

/// Enumerates all 2^n subsets. Independent of the branch-and-bound path.
int brute_force_alpha(const Graph& g);

}  // namespace kpartite
