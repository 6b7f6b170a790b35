// Command-line front end: compute Tutte polynomials of multigraphs and
// ranked sets, verify the coefficient identities, and generate test
// families. Exit codes: 0 all checks pass, 1 a verified identity fails,
// 2 invalid input or parameters.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutte/engines.hpp"
#include "tutte/identities.hpp"
#include "tutte/io.hpp"
#include "tutte/rng.hpp"

namespace {

using nlohmann::json;

constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;

struct RunConfig {
  std::string input_path;
  std::string engine = "auto";  // subset | delcon | activities
  std::string format = "json";  // json | text | latex
  int h_max = -1;               // -1 means the m+6 default
  std::uint64_t seed = 0;
  std::string family;
  std::string output_path;
  int m = -1;
  int r = -1;
  int n = -1;
  int path_a = -1;
  int path_b = -1;
  int path_c = -1;
};

enum class InputKind { GraphText, RankTable, Polynomial };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tutte::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InputKind sniff_kind(const std::string& content) {
  for (std::size_t pos = 0; pos < content.size(); ++pos) {
    const char ch = content[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '#') {
      while (pos < content.size() && content[pos] != '\n') ++pos;
      continue;
    }
    if (ch != '{') return InputKind::GraphText;
    const json j = json::parse(content, nullptr, false);
    if (j.is_discarded()) throw tutte::ParseError("malformed JSON input");
    if (j.contains("ranks")) return InputKind::RankTable;
    if (j.contains("terms")) return InputKind::Polynomial;
    throw tutte::ParseError("JSON input is neither a rank table nor a polynomial");
  }
  throw tutte::ParseError("empty input");
}

struct PolynomialInput {
  tutte::BiPoly t;
  int m = 0;
  int r = 0;
};

PolynomialInput polynomial_input_from_json(const std::string& content) {
  const json j = json::parse(content);
  PolynomialInput input;
  input.t = tutte::polynomial_from_json(j);
  if (!j.contains("m") || !j.contains("r")) {
    throw tutte::ParseError("polynomial input needs explicit \"m\" and \"r\"");
  }
  input.m = j.at("m").get<int>();
  input.r = j.at("r").get<int>();
  if (input.m < 0 || input.r < 0 || input.r > input.m) {
    throw tutte::ParseError("polynomial input needs 0 <= r <= m");
  }
  return input;
}

tutte::RankedSet load_rank_table(const std::string& content) {
  const tutte::RankedSet rs = tutte::rank_table_from_json(json::parse(content));
  const tutte::ValidationResult check = tutte::validate_ranked_set(rs);
  if (!check.ok) throw tutte::ParseError("invalid rank table: " + check.message());
  return rs;
}

std::string format_text(const tutte::BiPoly& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : t.terms()) {
    if (!out.empty()) out += ", ";
    out += "t[" + std::to_string(key.first) + "][" + std::to_string(key.second) +
           "]=" + c.get_str();
  }
  return out;
}

std::string format_latex(const tutte::BiPoly& t) {
  if (t.is_zero()) return "0";
  std::string out;
  const auto& terms = t.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [key, c] = *it;
    const mpz_class abs_c = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool has_vars = key.first > 0 || key.second > 0;
    if (abs_c != 1 || !has_vars) out += abs_c.get_str();
    if (key.first > 0) {
      out += "x";
      if (key.first > 1) out += "^{" + std::to_string(key.first) + "}";
    }
    if (key.second > 0) {
      out += "y";
      if (key.second > 1) out += "^{" + std::to_string(key.second) + "}";
    }
  }
  return out;
}

void write_output(const RunConfig& config, const std::string& content) {
  if (config.output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(config.output_path);
  if (!out) throw tutte::ParseError("cannot write \"" + config.output_path + "\"");
  out << content;
}

int cmd_tutte(const RunConfig& config) {
  const std::string content = read_file(config.input_path);
  const InputKind kind = sniff_kind(content);
  if (kind == InputKind::Polynomial) {
    throw tutte::ParseError("the tutte command expects a graph or rank-table input");
  }

  tutte::BiPoly t;
  int m = 0;
  int r = 0;
  if (kind == InputKind::GraphText) {
    const tutte::Multigraph g = tutte::parse_graph_text(content);
    m = g.edge_count();
    r = g.vertex_count() - tutte::component_count(g);
    const std::string engine = config.engine == "auto" ? "delcon" : config.engine;
    if (engine == "delcon") {
      t = tutte::tutte_deletion_contraction(g);
    } else if (engine == "subset") {
      t = tutte::tutte_subset_expansion(tutte::ranked_set_of_graph(g));
    } else if (engine == "activities") {
      t = tutte::tutte_activities(g).to_bipoly();
    } else {
      throw tutte::ParseError("unknown engine \"" + engine + "\"");
    }
  } else {
    const tutte::RankedSet rs = load_rank_table(content);
    m = rs.ground_size();
    r = rs.full_rank();
    const std::string engine = config.engine == "auto" ? "subset" : config.engine;
    if (engine != "subset") {
      throw tutte::ParseError("engine \"" + engine + "\" requires a graph input");
    }
    t = tutte::tutte_subset_expansion(rs);
  }

  if (config.format == "json") {
    json out = tutte::polynomial_to_json(t);
    out["m"] = m;
    out["r"] = r;
    write_output(config, out.dump() + "\n");
  } else if (config.format == "text") {
    write_output(config, format_text(t) + "\n");
  } else if (config.format == "latex") {
    write_output(config, format_latex(t) + "\n");
  } else {
    throw tutte::ParseError("unknown format \"" + config.format + "\"");
  }
  return 0;
}

int cmd_verify(const RunConfig& config) {
  const std::string content = read_file(config.input_path);
  const InputKind kind = sniff_kind(content);

  tutte::BiPoly t;
  int m = 0;
  int r = 0;
  if (kind == InputKind::GraphText) {
    const tutte::Multigraph g = tutte::parse_graph_text(content);
    m = g.edge_count();
    r = g.vertex_count() - tutte::component_count(g);
    t = tutte::tutte_deletion_contraction(g);
  } else if (kind == InputKind::RankTable) {
    const tutte::RankedSet rs = load_rank_table(content);
    m = rs.ground_size();
    r = rs.full_rank();
    t = tutte::tutte_subset_expansion(rs);
  } else {
    const PolynomialInput input = polynomial_input_from_json(content);
    t = input.t;
    m = input.m;
    r = input.r;
  }

  const int h_max = config.h_max >= 0 ? config.h_max : m + 6;
  const tutte::IdentityReport brylawski = tutte::verify_brylawski(t, m, r, h_max);

  bool hyperbola_pass = false;
  std::string hyperbola_error;
  try {
    hyperbola_pass = tutte::verify_hyperbola(t, m, r);
  } catch (const std::invalid_argument& e) {
    hyperbola_error = e.what();
  }

  json coefficient_entries = json::array();
  bool coefficient_pass = true;
  int first_bad_k = -1;
  for (int k = 0; k <= m + 3; ++k) {
    const mpz_class lhs = tutte::coefficient_identity_lhs(t, r, k);
    const mpz_class rhs = k == m ? 1 : 0;
    const bool pass = lhs == rhs;
    if (!pass && first_bad_k < 0) first_bad_k = k;
    coefficient_pass = coefficient_pass && pass;
    coefficient_entries.push_back(
        {{"k", k}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}, {"pass", pass}});
  }

  const bool overall = brylawski.overall && hyperbola_pass && coefficient_pass;
  json out = {
      {"m", m},
      {"r", r},
      {"brylawski", tutte::report_to_json(brylawski)},
      {"hyperbola", {{"pass", hyperbola_pass}}},
      {"coefficient", {{"entries", std::move(coefficient_entries)}, {"overall", coefficient_pass}}},
      {"overall", overall},
  };
  if (!hyperbola_error.empty()) out["hyperbola"]["error"] = hyperbola_error;
  write_output(config, out.dump() + "\n");

  if (!overall) {
    if (!brylawski.overall) {
      for (const tutte::IdentityEntry& entry : brylawski.entries) {
        if (!entry.pass) {
          std::cerr << "FAIL: h=" << entry.h << ": lhs=" << entry.lhs.get_str()
                    << " rhs=" << entry.rhs.get_str() << "\n";
          break;
        }
      }
    } else if (!hyperbola_pass) {
      std::cerr << "FAIL: hyperbola substitution"
                << (hyperbola_error.empty() ? " does not collapse to z^m" : ": " + hyperbola_error)
                << "\n";
    } else {
      std::cerr << "FAIL: k=" << first_bad_k << " in the coefficient identity\n";
    }
    return kExitIdentityFailure;
  }
  return 0;
}

int cmd_gen(const RunConfig& config) {
  const std::string& family = config.family;
  if (family == "uniform" || family == "random-ranked") {
    if (config.m < 0) throw tutte::ParseError("gen " + family + " requires --m");
    if (config.r < 0 || config.r > config.m) {
      throw tutte::ParseError("gen " + family + " requires 0 <= r <= m");
    }
    const tutte::RankedSet rs = family == "uniform"
                                    ? tutte::uniform_matroid(config.r, config.m)
                                    : tutte::random_ranked_set(config.m, config.r, config.seed);
    write_output(config, tutte::rank_table_to_json(rs).dump() + "\n");
    return 0;
  }

  tutte::Multigraph g;
  if (family == "complete-graph") {
    if (config.n < 0) throw tutte::ParseError("gen complete-graph requires --n >= 0");
    std::vector<tutte::Edge> edges;
    for (int u = 0; u < config.n; ++u) {
      for (int v = u + 1; v < config.n; ++v) edges.push_back({u, v});
    }
    g = tutte::Multigraph(config.n, std::move(edges));
  } else if (family == "cycle") {
    if (config.n < 1) throw tutte::ParseError("gen cycle requires --n >= 1");
    std::vector<tutte::Edge> edges;
    for (int v = 0; v < config.n; ++v) edges.push_back({v, (v + 1) % config.n});
    g = tutte::Multigraph(config.n, std::move(edges));
  } else if (family == "theta") {
    // Two hub vertices joined by three internally disjoint paths of
    // --a/--b/--c edges each; length-1 paths degenerate to parallel edges.
    if (config.path_a < 1 || config.path_b < 1 || config.path_c < 1) {
      throw tutte::ParseError("gen theta requires --a, --b, --c >= 1");
    }
    std::vector<tutte::Edge> edges;
    int next_vertex = 2;
    for (int length : {config.path_a, config.path_b, config.path_c}) {
      int previous = 0;
      for (int step = 1; step < length; ++step) {
        edges.push_back({previous, next_vertex});
        previous = next_vertex++;
      }
      edges.push_back({previous, 1});
    }
    g = tutte::Multigraph(next_vertex, std::move(edges));
  } else if (family == "random-multigraph") {
    if (config.n < 1 || config.m < 0) {
      throw tutte::ParseError("gen random-multigraph requires --n >= 1 and --m >= 0");
    }
    tutte::Rng rng(config.seed);
    std::vector<tutte::Edge> edges;
    for (int i = 0; i < config.m; ++i) {
      const int u = static_cast<int>(rng.below(config.n));
      const int v = static_cast<int>(rng.below(config.n));
      edges.push_back({u, v});
    }
    g = tutte::Multigraph(config.n, std::move(edges));
  } else {
    throw tutte::ParseError("unknown family \"" + family + "\"");
  }
  write_output(config, tutte::graph_to_text(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Exact Tutte polynomials and coefficient-identity verification"};
  app.require_subcommand(1);

  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Compute a Tutte polynomial");
  tutte_cmd->add_option("file", config.input_path, "graph file or rank-table JSON")->required();
  tutte_cmd->add_option("--engine", config.engine, "subset | delcon | activities");
  tutte_cmd->add_option("--format", config.format, "json | text | latex");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify the coefficient identities");
  verify_cmd->add_option("file", config.input_path, "graph, rank-table, or polynomial input")
      ->required();
  verify_cmd->add_option("--hmax", config.h_max, "largest h to check (default m+6)");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a test family");
  gen_cmd
      ->add_option("family", config.family,
                   "uniform | random-ranked | complete-graph | cycle | theta | random-multigraph")
      ->required();
  gen_cmd->add_option("--m", config.m, "ground-set or edge count");
  gen_cmd->add_option("--r", config.r, "total rank");
  gen_cmd->add_option("--n", config.n, "vertex count");
  gen_cmd->add_option("--a", config.path_a, "first theta path length");
  gen_cmd->add_option("--b", config.path_b, "second theta path length");
  gen_cmd->add_option("--c", config.path_c, "third theta path length");
  gen_cmd->add_option("--seed", config.seed, "random seed");
  gen_cmd->add_option("-o,--output", config.output_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (tutte_cmd->parsed()) return cmd_tutte(config);
    if (verify_cmd->parsed()) return cmd_verify(config);
    return cmd_gen(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
