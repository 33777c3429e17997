#include <doctest.h>

#include "kpartite/canonical.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/random.hpp"
#include "kpartite/realizations.hpp"
#include "oracles.hpp"

using namespace kpartite;

namespace {

bool same_classes(const std::vector<Graph>& a, const std::vector<Graph>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Graph& g) {
    return std::count_if(b.begin(), b.end(), [&](const Graph& h) { return oracle::isomorphic_by_permutation(g, h); }) ==
           1;
  });
}

}  // namespace

TEST_CASE("havel_hakimi") {
  CHECK(is_isomorphic(havel_hakimi_realize(DegreeSequence({2, 2, 2, 2})), cycle_graph(4)));
  CHECK(havel_hakimi_realize(DegreeSequence({0, 0})) == empty_graph(2));
  const DegreeSequence fig({2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
  CHECK(degree_sequence(havel_hakimi_realize(fig)) == fig);
  CHECK_THROWS_AS(havel_hakimi_realize(DegreeSequence({3, 3, 3})), InvalidInput);
  CHECK_THROWS_AS(havel_hakimi_realize(DegreeSequence({1, 1, 1})), InvalidInput);
}

TEST_CASE("enumeration of small sequences") {
  const std::vector<int> three_three{3, 3};
  const auto two_regular = enumerate_realizations(DegreeSequence({2, 2, 2, 2, 2, 2}));
  CHECK(same_classes(two_regular, {cycle_graph(6), clique_union(three_three)}));
  const std::vector<int> three_two{3, 2};
  const auto paths = enumerate_realizations(DegreeSequence({1, 1, 2, 2, 2}));
  CHECK(same_classes(paths, {path_graph(5), clique_union(three_two)}));
  const auto single = enumerate_realizations(DegreeSequence({0}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Graph(1));
  CHECK(enumerate_realizations(DegreeSequence({3, 3, 3, 3, 3, 3, 3, 3, 3, 3})).size() == 21);
  CHECK_THROWS_AS(enumerate_realizations(DegreeSequence(std::vector<int>(11, 2))), SizeLimitExceeded);
  CHECK_THROWS_AS(RealizationStream(DegreeSequence({1, 1, 1})), InvalidInput);
}

TEST_CASE("enumeration matches the filter over all labeled graphs") {
  for (int n = 1; n <= 6; ++n) {
    // Every graphical non-increasing sequence on n vertices.
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (bool more = true; more;) {
      if (std::is_sorted(d.rbegin(), d.rend()) && is_graphical(DegreeSequence(d))) {
        const auto found = enumerate_realizations(DegreeSequence(d));
        const auto expected = oracle::realization_classes(d);
        CHECK_MESSAGE(same_classes(found, expected), "n=", n);
        for (const auto& g : found) CHECK(degree_sequence(g) == DegreeSequence(d));
      }
      more = false;
      for (int i = 0; i < n && !more; ++i) {
        if (d[i] < n - 1) {
          ++d[i];
          more = true;
        } else {
          d[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("two_switch") {
  const Graph c6 = cycle_graph(6);
  const SwitchStep step{0, 1, 3, 4, SwitchStep::Rewiring::ad_bc};
  const Graph h = two_switch(c6, step);
  CHECK(h == Graph(6, {{0, 4}, {0, 5}, {4, 5}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(two_switch(h, step.inverse()) == c6);
  CHECK_THROWS_AS(two_switch(c6, SwitchStep{0, 1, 1, 2, SwitchStep::Rewiring::ad_bc}), InvalidInput);
  CHECK_THROWS_AS(two_switch(c6, SwitchStep{0, 2, 3, 4, SwitchStep::Rewiring::ad_bc}), InvalidInput);

  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 8, 1, 2);
    const auto edges = g.edges();
    if (edges.size() < 2) continue;
    auto [a, b] = edges[uniform_below(rng, edges.size())];
    auto [c, d] = edges[uniform_below(rng, edges.size())];
    if (uniform_below(rng, 2)) std::swap(a, b);
    const auto kind = uniform_below(rng, 2) ? SwitchStep::Rewiring::ad_bc : SwitchStep::Rewiring::ac_bd;
    const SwitchStep s{a, b, c, d, kind};
    Graph switched;
    try {
      switched = two_switch(g, s);
    } catch (const InvalidInput&) {
      continue;
    }
    CHECK(degree_sequence(switched) == degree_sequence(g));
    CHECK(switched.size() == g.size());
    CHECK(two_switch(switched, s.inverse()) == g);
  }
}

TEST_CASE("random walk") {
  const std::vector<int> three_three{3, 3};
  const Graph start = clique_union(three_three);
  CHECK(random_switch_walk(start, 0, 1) == start);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_switch_walk(start, 50, seed);
    CHECK(degree_sequence(g) == degree_sequence(start));
    CHECK(random_switch_walk(start, 50, seed) == g);
  }
  // Both classes are reachable.
  bool saw_cycle = false;
  for (std::uint64_t seed = 0; seed < 20 && !saw_cycle; ++seed)
    saw_cycle = is_isomorphic(random_switch_walk(start, 10, seed), cycle_graph(6));
  CHECK(saw_cycle);
}

TEST_CASE("four_copies") {
  CHECK(max_independent_set(four_copies(complete_graph(4))).size() == 4);
  const std::vector<int> k33{3, 3};
  CHECK(max_independent_set(four_copies(complete_multipartite(k33))).size() == 12);
  const Graph p4 = four_copies(petersen_graph());
  CHECK(p4.order() == 40);
  CHECK(max_independent_set(p4).size() == 16);
  CHECK_THROWS_AS(four_copies(cycle_graph(5)), InvalidInput);
}
