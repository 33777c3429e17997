#include "kpartite/bounds.hpp"

#include <cmath>
#include <json.hpp>

namespace kpartite {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational caro_wei(const DegreeSequence& d) {
  Rational sum = 0;
  for (auto [degree, count] : d.multiplicities()) sum += Rational(count, degree + 1);
  return sum;
}

namespace {

void require_vertices(long long n) {
  if (n < 1) throw InvalidInput("bound requires at least one vertex");
}

}  // namespace

Rational turan_alpha(long long n, long long m) {
  require_vertices(n);
  return Rational(n * n, n + 2 * m);
}

long long hansen_zheng(long long n, long long m) {
  require_vertices(n);
  const long long q = 2 * m / n;
  if (q == 0) return n - m;
  // ceil((2n - 2m/q) / (q+1)) = ceil((2nq - 2m) / (q(q+1)))
  const long long num = 2 * n * q - 2 * m;
  const long long den = q * (q + 1);
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

Rational myers_liu(long long n, long long m) {
  require_vertices(n);
  return Rational(n * n, n * n - 2 * m);
}

double edwards_elphick(const DegreeSequence& d) {
  const double n = d.n();
  require_vertices(d.n());
  double squares = 0.0;
  for (auto [degree, count] : d.multiplicities()) squares += static_cast<double>(count) * degree * degree;
  return n / (n - std::sqrt(squares / n));
}

Graph turan_graph(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidInput("Turán graph needs 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) parts[static_cast<std::size_t>(k - 1 - i)] += 1;
  return complete_multipartite(parts);
}

long long turan_edge_count(int n, int k) {
  if (k < 1 || k > n) throw InvalidInput("Turán edge count needs 1 <= k <= n");
  const long long small = n / k;
  const long long large_parts = n % k;
  const long long small_parts = k - large_parts;
  const long long squares = small_parts * small * small + large_parts * (small + 1) * (small + 1);
  return (static_cast<long long>(n) * n - squares) / 2;
}

int sharpened_alpha_bound(const Graph& g) {
  const auto profile = clique_union_profile_from_degrees(degree_sequence(g));
  if (!profile) throw OutsideFamily("degree sequence is not that of a disjoint union of cliques");
  const auto actual = is_clique_union(g);
  const bool canonical = actual && actual->parts == profile->parts;
  return profile->k() + (canonical ? 0 : 1);
}

int sharpened_omega_bound(const Graph& g) {
  const auto profile = multipartite_profile_from_degrees(degree_sequence(g));
  if (!profile) throw OutsideFamily("degree sequence is not that of a complete multipartite graph");
  const auto actual = is_complete_multipartite(g);
  const bool canonical = actual && actual->parts == profile->parts;
  return profile->k() + (canonical ? 0 : 1);
}

BoundReport compare_bounds(const Graph& g, bool with_exact, std::string id, const ExactOptions& options) {
  if (g.order() == 0) throw InvalidInput("bounds are undefined for the empty graph");
  const auto seq = degree_sequence(g);
  BoundReport r;
  r.id = std::move(id);
  r.n = g.order();
  r.m = static_cast<long long>(g.size());
  r.caro_wei = caro_wei(seq);
  r.turan_alpha = turan_alpha(r.n, r.m);
  r.hansen_zheng = hansen_zheng(r.n, r.m);
  r.myers_liu = myers_liu(r.n, r.m);
  r.edwards_elphick = edwards_elphick(seq);
  try {
    r.sharpened_alpha = sharpened_alpha_bound(g);
  } catch (const OutsideFamily&) {
  }
  try {
    r.sharpened_omega = sharpened_omega_bound(g);
  } catch (const OutsideFamily&) {
  }
  if (with_exact) {
    r.exact_alpha = max_independent_set(g, options).size();
    r.exact_omega = max_clique(g, options).size();
  }
  return r;
}

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::string optional_csv(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["id"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["caro_wei"] = to_string(r.caro_wei);
  j["turan_alpha"] = to_string(r.turan_alpha);
  j["hansen_zheng"] = r.hansen_zheng;
  j["myers_liu"] = to_string(r.myers_liu);
  j["edwards_elphick"] = r.edwards_elphick;
  j["sharpened_alpha"] = optional_json(r.sharpened_alpha);
  j["sharpened_omega"] = optional_json(r.sharpened_omega);
  j["exact_alpha"] = optional_json(r.exact_alpha);
  j["exact_omega"] = optional_json(r.exact_omega);
  return j.dump(2);
}

std::string report_csv_header() {
  return "schema_version,id,n,m,caro_wei,turan_alpha,hansen_zheng,myers_liu,edwards_elphick,"
         "sharpened_alpha,sharpened_omega,exact_alpha,exact_omega";
}

std::string report_to_csv_row(const BoundReport& r) {
  return std::to_string(kReportSchemaVersion) + "," + r.id + "," + std::to_string(r.n) + "," + std::to_string(r.m) +
         "," + to_string(r.caro_wei) + "," + to_string(r.turan_alpha) + "," + std::to_string(r.hansen_zheng) + "," +
         to_string(r.myers_liu) + "," + format_real(r.edwards_elphick) + "," + optional_csv(r.sharpened_alpha) +
         "," + optional_csv(r.sharpened_omega) + "," + optional_csv(r.exact_alpha) + "," +
         optional_csv(r.exact_omega);
}

}  // namespace kpartite
