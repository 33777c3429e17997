#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "kpartite/bounds.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/random.hpp"
#include "kpartite/realizations.hpp"
#include "oracles.hpp"

using namespace kpartite;

namespace {

DegreeSequence fig_sequence() { return DegreeSequence({2, 2, 2, 2, 2, 2, 3, 3, 3, 3}); }

// Rational values recomputed from the formulas with plain integers.
Rational caro_wei_by_hand(const std::vector<int>& d) {
  long long num = 0;
  long long den = 1;
  for (int x : d) {
    num = num * (x + 1) + den;
    den *= x + 1;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return Rational(num, den);
}

}  // namespace

TEST_CASE("caro_wei") {
  CHECK(caro_wei(fig_sequence()) == 3);
  CHECK(caro_wei(DegreeSequence({0, 0, 0, 0})) == 4);
  CHECK(caro_wei(DegreeSequence({4, 4, 4, 4, 4})) == 1);
  CHECK(caro_wei(DegreeSequence({1, 1, 2, 2, 2})) == Rational(2));
}

TEST_CASE("turan_alpha") {
  CHECK(turan_alpha(10, 12) == Rational(50, 17));
  CHECK(turan_alpha(4, 0) == 4);
  CHECK(turan_alpha(5, 10) == 1);
  CHECK(to_string(turan_alpha(10, 12)) == "50/17");
  CHECK(to_string(turan_alpha(4, 0)) == "4");
  CHECK_THROWS_AS(turan_alpha(0, 0), InvalidInput);
}

TEST_CASE("hansen_zheng") {
  CHECK(hansen_zheng(10, 12) == 3);
  CHECK(hansen_zheng(6, 3) == 3);
  CHECK(hansen_zheng(4, 0) == 4);
  CHECK(hansen_zheng(3, 1) == 2);
  CHECK(hansen_zheng(7, 3) == 4);
  CHECK(hansen_zheng(5, 10) == 1);
}

TEST_CASE("myers_liu") {
  CHECK(myers_liu(4, 4) == 2);
  CHECK(myers_liu(5, 0) == 1);
  CHECK(myers_liu(10, 33) == Rational(100, 34));
  CHECK(myers_liu(5, 10) == 5);
}

TEST_CASE("edwards_elphick") {
  CHECK(edwards_elphick(fig_sequence()) == doctest::Approx(10.0 / (10.0 - std::sqrt(6.0))).epsilon(1e-12));
  CHECK(edwards_elphick(DegreeSequence({4, 4, 4, 4, 4})) == doctest::Approx(5.0));
  CHECK(edwards_elphick(DegreeSequence({0, 0, 0})) == doctest::Approx(1.0));
}

TEST_CASE("turan graphs") {
  const Graph t52 = turan_graph(5, 2);
  CHECK(is_complete_multipartite(t52)->parts == std::vector<int>{2, 3});
  CHECK(t52.size() == 6);
  CHECK(turan_edge_count(5, 2) == 6);
  CHECK(is_complete_multipartite(turan_graph(6, 3))->parts == std::vector<int>{2, 2, 2});
  CHECK(turan_edge_count(6, 3) == 12);
  CHECK(turan_graph(6, 6) == complete_graph(6));
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) CHECK(turan_edge_count(n, k) == static_cast<long long>(turan_graph(n, k).size()));
  CHECK_THROWS_AS(turan_graph(3, 4), InvalidInput);
}

TEST_CASE("graphs beyond the Turan count contain a larger clique") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 11));
    const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    const Graph g = random_graph(rng, n, 1 + uniform_below(rng, 9), 10);
    if (static_cast<long long>(g.size()) > turan_edge_count(n, k)) CHECK(max_clique(g).size() >= k + 1);
  }
}

TEST_CASE("sharpened bounds") {
  const std::vector<int> three_three{3, 3};
  CHECK(sharpened_alpha_bound(clique_union(three_three)) == 2);
  CHECK(sharpened_alpha_bound(cycle_graph(6)) == 3);
  const std::vector<int> parts{3, 3, 4};
  CHECK(sharpened_omega_bound(complete_multipartite(parts)) == 3);
  CHECK(sharpened_omega_bound(complement(cycle_graph(6))) == 3);
  CHECK_THROWS_AS(sharpened_alpha_bound(cycle_graph(4)), OutsideFamily);

  for (const Graph& g : enumerate_realizations(fig_sequence())) {
    CHECK(sharpened_alpha_bound(g) == sharpened_omega_bound(complement(g)));
    CHECK(max_independent_set(g).size() >= sharpened_alpha_bound(g));
  }
}

TEST_CASE("report") {
  const auto r = compare_bounds(cycle_graph(6), true, "c6");
  CHECK(r.caro_wei == 2);
  CHECK(r.turan_alpha == Rational(36, 18));
  CHECK(r.sharpened_alpha == 3);
  CHECK_FALSE(r.sharpened_omega.has_value());
  CHECK(r.exact_alpha == 3);
  CHECK(r.exact_omega == 2);
  const auto json = nlohmann::json::parse(report_to_json(r));
  CHECK(json["schema_version"] == 1);
  CHECK(json["turan_alpha"] == "2");
  CHECK(json["sharpened_omega"].is_null());
  CHECK(report_to_csv_row(r).rfind("1,c6,6,6,2,2,", 0) == 0);
  const auto k5 = compare_bounds(complete_graph(5), false);
  CHECK(k5.myers_liu == 5);
  CHECK(k5.edwards_elphick == doctest::Approx(5.0));
  CHECK_FALSE(k5.exact_alpha.has_value());
  const auto e4 = compare_bounds(empty_graph(4), false);
  CHECK(e4.caro_wei == 4);
  CHECK(e4.turan_alpha == 4);
  CHECK(e4.hansen_zheng == 4);
  CHECK_THROWS_AS(compare_bounds(Graph(0), false), InvalidInput);
}

TEST_CASE("bounds never exceed the exact values") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 16));
    const Graph g = random_graph(rng, n, uniform_below(rng, 11), 10);
    const auto d = degree_sequence(g);
    const auto m = static_cast<long long>(g.size());
    const int alpha = max_independent_set(g).size();
    const int omega = max_clique(g).size();
    CHECK(caro_wei(d) == caro_wei_by_hand(d.sorted()));
    CHECK(caro_wei(d) >= turan_alpha(n, m));
    CHECK(caro_wei(d) <= alpha);
    CHECK(turan_alpha(n, m) <= alpha);
    CHECK(hansen_zheng(n, m) <= alpha);
    CHECK(myers_liu(n, m) <= omega);
    CHECK(edwards_elphick(d) <= omega + kEdwardsElphickTolerance);
  }
}
