#include "kpartite/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace kpartite {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, long long& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::edges;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

GraphFormat guess_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::graph6;
  if (ext == ".dimacs" || ext == ".col" || ext == ".clq") return GraphFormat::dimacs;
  return GraphFormat::edges;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InvalidInput("empty graph6 string");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw InvalidInput("graph6 byte out of range");
  }
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= line.size()) throw InvalidInput("truncated graph6 header");
      value = (value << 6) | (line[pos++] - 63);
    }
    return value;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != need) {
    throw InvalidInput("graph6 length mismatch: expected " + std::to_string(need) + " data bytes");
  }
  std::vector<Edge> edges;
  long long t = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++t) {
      const int byte = line[pos + static_cast<std::size_t>(t / 6)] - 63;
      if (byte & (1 << (5 - t % 6))) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::vector<std::string>> rows;  // one or two labels each
  long long header_n = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    if (body.starts_with("n=")) {
      if (!parse_int(trim(body.substr(2)), header_n) || header_n < 0) {
        throw InvalidInput("bad header on line " + std::to_string(lineno));
      }
      continue;
    }
    std::istringstream tokens{std::string(body)};
    std::string a, b, extra;
    tokens >> a;
    if (!(tokens >> b)) {
      rows.push_back({a});  // lone label: an isolated vertex
      continue;
    }
    if (tokens >> extra) throw InvalidInput("expected two labels on line " + std::to_string(lineno));
    rows.push_back({a, b});
  }

  bool verbatim = header_n >= 0;
  auto in_range = [&](const std::string& s) {
    long long v = 0;
    return parse_int(s, v) && v >= 0 && v < header_n;
  };
  for (const auto& row : rows)
    for (const auto& label : row) verbatim = verbatim && in_range(label);

  std::vector<Edge> edges;
  int n = 0;
  if (verbatim) {
    n = static_cast<int>(header_n);
    for (const auto& row : rows)
      if (row.size() == 2) edges.emplace_back(std::stoi(row[0]), std::stoi(row[1]));
  } else {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> order;
    auto id = [&](const std::string& label) {
      auto [it, fresh] = index.try_emplace(label, static_cast<int>(order.size()));
      if (fresh) order.push_back(label);
      return it->second;
    };
    for (const auto& row : rows) {
      const int u = id(row[0]);
      if (row.size() == 2) edges.emplace_back(u, id(row[1]));
    }
    n = static_cast<int>(order.size());
    if (header_n > n) n = static_cast<int>(header_n);
    if (header_n >= 0 && header_n < static_cast<long long>(order.size())) {
      throw InvalidInput("header n=" + std::to_string(header_n) + " is smaller than the number of labels");
    }
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  long long n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long m = 0;
      if (!(tokens >> kind >> n >> m) || n < 0) throw InvalidInput("bad problem line " + std::to_string(lineno));
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (n < 0) throw InvalidInput("edge before problem line at line " + std::to_string(lineno));
      if (!(tokens >> u >> v) || u < 1 || v < 1 || u > n || v > n) {
        throw InvalidInput("bad edge on line " + std::to_string(lineno));
      }
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw InvalidInput("unknown DIMACS line tag '" + tag + "' on line " + std::to_string(lineno));
    }
  }
  if (n < 0) throw InvalidInput("missing DIMACS problem line");
  return Graph(static_cast<int>(n), edges);
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: {
      std::vector<Graph> out;
      std::string line;
      while (std::getline(in, line)) {
        if (!trim(line).empty()) out.push_back(from_graph6(line));
      }
      return out;
    }
    case GraphFormat::edges:
      return {read_edge_list(in)};
    case GraphFormat::dimacs:
      return {read_dimacs(in)};
  }
  throw InvalidInput("unknown graph format");
}

std::vector<Graph> read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_graphs(in, format);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return to_graph6(g) + "\n";
    case GraphFormat::edges:
      return to_edge_list(g);
    case GraphFormat::dimacs:
      return to_dimacs(g);
  }
  throw InvalidInput("unknown graph format");
}

}  // namespace kpartite
