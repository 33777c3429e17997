#pragma once

#include <cstdint>
#include <random>

#include "kpartite/graph.hpp"

namespace kpartite {

/// All seeded randomness uses MT19937-64 (std::mt19937_64, whose output
/// sequence is fixed by the C++ standard) together with uniform_below, so
/// walks and generated corpora reproduce across platforms and compilers.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection: draws below 2^64 mod bound are
/// discarded, the rest are reduced modulo bound. bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// G(n, p) with edge probability numerator/denominator, pairs visited in
/// row-major order.
Graph random_graph(Rng& rng, int n, std::uint64_t numerator, std::uint64_t denominator);

/// Uniform-ish d-regular graph by the pairing model with restarts.
/// Throws InvalidInput when n*d is odd or d >= n.
Graph random_regular_graph(Rng& rng, int n, int d);

}  // namespace kpartite
