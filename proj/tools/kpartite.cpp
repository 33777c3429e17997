// kpartite: command-line front end for recognition, exact solving, bounds,
// realization enumeration, witnesses and verification campaigns.
//
// Exit codes: 0 success, 1 property violation found, 2 invalid input.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "kpartite/bounds.hpp"
#include "kpartite/canonical.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/graph_io.hpp"
#include "kpartite/harness.hpp"
#include "kpartite/realizations.hpp"
#include "kpartite/recognition.hpp"
#include "kpartite/witness.hpp"

namespace fs = std::filesystem;
using namespace kpartite;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;

struct Globals {
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
};

GraphFormat format_for(const Globals& g, const fs::path& path) {
  return g.format.empty() ? guess_format(path) : parse_format(g.format);
}

GraphFormat output_format(const Globals& g, GraphFormat fallback) {
  return g.format.empty() ? fallback : parse_format(g.format);
}

Graph read_single(const Globals& globals, const std::string& input) {
  auto graphs = read_graph_file(input, format_for(globals, input));
  if (graphs.size() != 1) {
    throw InvalidInput(input + " holds " + std::to_string(graphs.size()) + " graphs; expected exactly one");
  }
  return graphs.front();
}

void emit(const Globals& globals, const std::string& text) {
  if (globals.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(globals.out);
  if (!out) throw InvalidInput("cannot write " + globals.out);
  out << text;
}

DegreeSequence read_degrees(const std::string& list, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open " + file);
    std::string line;
    std::getline(in, line);
    return parse_degree_list(line);
  }
  if (list.empty()) throw InvalidInput("a degree sequence is required (--degrees or --degrees-file)");
  return parse_degree_list(list);
}

nlohmann::ordered_json profile_json(const std::optional<PartitionProfile>& p) {
  if (!p) return nullptr;
  return nlohmann::ordered_json{{"k", p->k()}, {"parts", p->parts}};
}

std::string certificate_text(const WitnessCertificate& cert) {
  std::string out = "kind " + to_string(cert.kind) + "\nsize " + std::to_string(cert.size()) + "\nvertices";
  for (Vertex v : cert.vertices) out += " " + std::to_string(v);
  return out + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique and independence numbers of complete multipartite degree classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Graph format: graph6, edges, dimacs");
  app.add_option("--out", globals.out, "Output file (or directory for campaigns)");
  app.add_option("--seed", globals.seed, "Seed for randomized commands");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Family membership and degree-equivalence checks");
  std::string rec_input, rec_degrees, rec_degrees_file;
  recognize->add_option("--input", rec_input, "Graph file");
  recognize->add_option("--degrees", rec_degrees, "Comma-separated degree sequence");
  recognize->add_option("--degrees-file", rec_degrees_file, "File with one line 'd1 d2 ... dn'");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Classical and sharpened bounds for one graph or a batch");
  std::string bounds_input;
  bool bounds_exact = false;
  bounds->add_option("--input", bounds_input, "Graph file, multi-graph graph6 file, or directory")->required();
  bounds->add_flag("--exact", bounds_exact, "Also compute exact alpha and omega");

  // bounds-campaign
  auto* campaign = app.add_subcommand("bounds-campaign", "Per-realization bound table for clique-union profiles");
  std::vector<std::string> campaign_profiles;
  campaign->add_option("--profile", campaign_profiles, "Part sizes a1,a2,...; repeatable")->required();

  // exact
  auto* exact = app.add_subcommand("exact", "Exact independence or clique number with a witness");
  std::string exact_input;
  bool want_alpha = false, want_omega = false;
  int exact_cap = ExactOptions{}.max_vertices;
  exact->add_option("--input", exact_input, "Graph file")->required();
  auto* alpha_flag = exact->add_flag("--alpha", want_alpha, "Independence number");
  exact->add_flag("--omega", want_omega, "Clique number")->excludes(alpha_flag);
  exact->add_option("--cap", exact_cap, "Maximum vertex count");

  // witness
  auto* witness = app.add_subcommand("witness", "Size k+1 certificate for a non-canonical family member");
  std::string witness_input;
  bool witness_clique_mode = false, witness_independent_mode = false;
  witness->add_option("--input", witness_input, "Graph file")->required();
  auto* clique_flag = witness->add_flag("--clique", witness_clique_mode, "Clique in a multipartite-degree graph");
  witness->add_flag("--independent", witness_independent_mode, "Independent set (default)")->excludes(clique_flag);

  // realize
  auto* realize = app.add_subcommand("realize", "One realization of a degree sequence (Havel-Hakimi)");
  std::string realize_degrees, realize_degrees_file;
  realize->add_option("--degrees", realize_degrees, "Comma-separated degree sequence");
  realize->add_option("--degrees-file", realize_degrees_file, "File with one line 'd1 d2 ... dn'");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "All realizations up to isomorphism, as graph6");
  std::string enum_degrees, enum_degrees_file;
  enumerate->add_option("--degrees", enum_degrees, "Comma-separated degree sequence");
  enumerate->add_option("--degrees-file", enum_degrees_file, "File with one line 'd1 d2 ... dn'");

  // sample
  auto* sample = app.add_subcommand("sample", "Random walk of 2-switches");
  std::string sample_input;
  long long sample_steps = 0;
  sample->add_option("--input", sample_input, "Graph file")->required();
  sample->add_option("--steps", sample_steps, "Number of proposals")->required()->check(CLI::NonNegativeNumber);

  // reduce4
  auto* reduce4 = app.add_subcommand("reduce4", "Four disjoint copies of a cubic graph");
  std::string reduce_input;
  reduce4->add_option("--input", reduce_input, "Graph file")->required();

  // verify-theorem
  auto* verify = app.add_subcommand("verify-theorem", "Exhaustive check over all clique-union profiles");
  int max_n = 0;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  bool verify_reports = false;
  verify->add_option("--max-n", max_n, "Largest total part size")->required()->check(CLI::Range(1, kCampaignMaxOrder));
  verify->add_option("--threads", threads, "Worker threads");
  verify->add_flag("--reports", verify_reports, "Also write bounds.csv with one row per realization");

  // find-sharp
  auto* sharp = app.add_subcommand("find-sharp", "Non-canonical realization with alpha = k+1 and induced patterns");
  std::string sharp_profile, sharp_patterns;
  sharp->add_option("--profile", sharp_profile, "Part sizes a1,a2,...")->required();
  sharp->add_option("--patterns", sharp_patterns, "Induced patterns, e.g. p4,c5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*recognize) {
      nlohmann::ordered_json j;
      std::optional<DegreeSequence> seq;
      if (!rec_input.empty()) {
        const Graph g = read_single(globals, rec_input);
        j["n"] = g.order();
        j["m"] = g.size();
        j["complete_multipartite"] = profile_json(is_complete_multipartite(g));
        j["clique_union"] = profile_json(is_clique_union(g));
        seq = degree_sequence(g);
      } else {
        seq = read_degrees(rec_degrees, rec_degrees_file);
      }
      j["degree_sequence"] = seq->sorted();
      j["graphical"] = is_graphical(*seq);
      j["degree_equivalent_multipartite"] = profile_json(multipartite_profile_from_degrees(*seq));
      j["degree_equivalent_clique_union"] = profile_json(clique_union_profile_from_degrees(*seq));
      emit(globals, j.dump(2) + "\n");
    } else if (*bounds) {
      std::vector<std::pair<std::string, Graph>> graphs;
      if (fs::is_directory(bounds_input)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(bounds_input))
          if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
          auto batch = read_graph_file(f, format_for(globals, f));
          for (std::size_t i = 0; i < batch.size(); ++i)
            graphs.emplace_back(f.filename().string() + (batch.size() > 1 ? "#" + std::to_string(i) : ""), batch[i]);
        }
      } else {
        auto batch = read_graph_file(bounds_input, format_for(globals, bounds_input));
        const auto stem = fs::path(bounds_input).filename().string();
        for (std::size_t i = 0; i < batch.size(); ++i)
          graphs.emplace_back(batch.size() > 1 ? stem + "#" + std::to_string(i) : stem, batch[i]);
      }
      if (graphs.size() == 1 && !fs::is_directory(bounds_input)) {
        emit(globals, report_to_json(compare_bounds(graphs[0].second, bounds_exact, graphs[0].first)) + "\n");
      } else {
        std::string csv = report_csv_header() + "\n";
        for (const auto& [id, g] : graphs) csv += report_to_csv_row(compare_bounds(g, bounds_exact, id)) + "\n";
        emit(globals, csv);
      }
    } else if (*campaign) {
      std::vector<PartitionProfile> profiles;
      for (const auto& p : campaign_profiles) profiles.push_back(parse_profile(p, ProfileFlavor::clique_sizes));
      std::ostringstream out;
      bounds_report_campaign(profiles, out);
      emit(globals, out.str());
    } else if (*exact) {
      if (!want_alpha && !want_omega) throw InvalidInput("exact needs --alpha or --omega");
      const Graph g = read_single(globals, exact_input);
      const ExactOptions options{exact_cap};
      const auto cert = want_alpha ? max_independent_set(g, options) : max_clique(g, options);
      emit(globals, std::string(want_alpha ? "alpha " : "omega ") + std::to_string(cert.size()) + "\n" +
                        certificate_text(cert));
    } else if (*witness) {
      const Graph g = read_single(globals, witness_input);
      const auto profile = witness_clique_mode ? multipartite_profile_from_degrees(degree_sequence(g))
                                               : clique_union_profile_from_degrees(degree_sequence(g));
      const auto cert = witness_clique_mode ? witness_clique(g) : witness_independent_set(g);
      std::string text = certificate_text(cert);
      if (profile) text += "k " + std::to_string(profile->k()) + "\nparts " + format_parts(*profile) + "\n";
      emit(globals, text);
    } else if (*realize) {
      const Graph g = havel_hakimi_realize(read_degrees(realize_degrees, realize_degrees_file));
      emit(globals, write_graph(g, output_format(globals, GraphFormat::edges)));
    } else if (*enumerate) {
      RealizationStream stream(read_degrees(enum_degrees, enum_degrees_file));
      std::string text;
      int count = 0;
      while (auto g = stream.next()) {
        text += to_graph6(*g) + "\n";
        ++count;
      }
      emit(globals, text);
      if (!globals.out.empty()) std::cout << count << " realizations written to " << globals.out << "\n";
    } else if (*sample) {
      const Graph g = read_single(globals, sample_input);
      const Graph walked = random_switch_walk(g, sample_steps, globals.seed);
      emit(globals, write_graph(walked, output_format(globals, guess_format(sample_input))));
    } else if (*reduce4) {
      const Graph g = read_single(globals, reduce_input);
      emit(globals, write_graph(four_copies(g), output_format(globals, guess_format(reduce_input))));
    } else if (*verify) {
      CampaignOptions options;
      options.threads = threads;
      options.keep_reports = verify_reports;
      const auto results = verify_theorem(max_n, options);
      int violations = 0;
      for (const auto& r : results) {
        const bool ok = r.theorem_holds && r.witness_sound;
        violations += ok ? 0 : 1;
        std::cout << (ok ? "ok   " : "FAIL ") << "profile " << format_parts(r.profile) << "  realizations "
                  << r.realization_count << "  canonical alpha "
                  << (r.canonical_alpha ? std::to_string(*r.canonical_alpha) : "-") << "  min other alpha "
                  << (r.min_noncanonical_alpha ? std::to_string(*r.min_noncanonical_alpha) : "-") << "\n";
      }
      std::cout << results.size() << " profiles, " << violations << " violations\n";
      if (!globals.out.empty()) {
        fs::create_directories(globals.out);
        std::ofstream csv(fs::path(globals.out) / "campaign.csv");
        write_campaign_csv(csv, results);
        if (verify_reports) {
          std::ofstream table(fs::path(globals.out) / "bounds.csv");
          table << report_csv_header() << "\n";
          for (const auto& r : results)
            for (const auto& rep : r.reports) table << report_to_csv_row(rep) << "\n";
        }
      }
      return violations == 0 ? 0 : kExitViolation;
    } else if (*sharp) {
      const auto profile = parse_profile(sharp_profile, ProfileFlavor::clique_sizes);
      const auto patterns = parse_patterns(sharp_patterns);
      const auto found = find_sharp_example(profile, patterns);
      if (!found) {
        std::cout << "none\n";
        return 0;
      }
      const auto alpha = max_independent_set(*found);
      std::cerr << "n " << found->order() << ", m " << found->size() << ", alpha " << alpha.size() << ", k "
                << profile.k() << "\n";
      emit(globals, write_graph(*found, output_format(globals, GraphFormat::graph6)));
    }
  } catch (const CanonicalInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const OutsideFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
