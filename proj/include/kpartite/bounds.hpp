#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "kpartite/exact.hpp"
#include "kpartite/graph.hpp"
#include "kpartite/recognition.hpp"

namespace kpartite {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// The graph's degree sequence is not that of the required family.
class OutsideFamily : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kEdwardsElphickTolerance = 1e-9;

// Lower bounds on the independence number.
Rational caro_wei(const DegreeSequence& d);
Rational turan_alpha(long long n, long long m);
/// When floor(2m/n) = 0 the formula is undefined; returns n - m, which is n for
/// the edgeless graph and a valid lower bound in general.
long long hansen_zheng(long long n, long long m);

// Lower bounds on the clique number.
Rational myers_liu(long long n, long long m);
double edwards_elphick(const DegreeSequence& d);

/// T(n, k): k parts of sizes floor(n/k) and ceil(n/k), smaller parts first.
Graph turan_graph(int n, int k);
long long turan_edge_count(int n, int k);

/// k for the canonical clique union, k+1 for every other realization of its
/// degree sequence. Throws OutsideFamily when the degree sequence is not that
/// of a clique union.
int sharpened_alpha_bound(const Graph& g);
/// Dual statement for complete multipartite degree sequences.
int sharpened_omega_bound(const Graph& g);

struct BoundReport {
  std::string id;
  int n = 0;
  long long m = 0;
  Rational caro_wei;
  Rational turan_alpha;
  long long hansen_zheng = 0;
  Rational myers_liu;
  double edwards_elphick = 0.0;
  std::optional<int> sharpened_alpha;
  std::optional<int> sharpened_omega;
  std::optional<int> exact_alpha;
  std::optional<int> exact_omega;
};

inline constexpr int kReportSchemaVersion = 1;

/// Throws InvalidInput for the empty graph; exact values only when with_exact.
BoundReport compare_bounds(const Graph& g, bool with_exact, std::string id = {},
                           const ExactOptions& options = {});

std::string report_to_json(const BoundReport& r);
/// Column order fixed by report_csv_header().
std::string report_csv_header();
std::string report_to_csv_row(const BoundReport& r);

}  // namespace kpartite
