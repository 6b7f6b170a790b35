#include "tutte/io.hpp"

#include <cctype>
#include <sstream>

namespace tutte {
namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void fail_line(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long json_nonneg_int(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
  const auto& value = j.at(field);
  if (!value.is_number_integer() || value.get<long>() < 0) {
    throw ParseError(std::string("field \"") + field + "\" must be a nonnegative integer");
  }
  return value.get<long>();
}

}  // namespace

mpz_class parse_decimal(const std::string& text) {
  mpz_class out;
  // mpz set_str accepts an optional sign followed by decimal digits.
  if (text.empty() || mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0) {
    throw ParseError("invalid decimal integer \"" + text + "\"");
  }
  return out;
}

Multigraph parse_graph_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      char tag = 0;
      if (!(fields >> tag) || tag != 'p') fail_line(line_no, "expected header \"p N M\"");
      if (!(fields >> n >> m) || n < 0 || m < 0) fail_line(line_no, "expected header \"p N M\"");
      std::string rest;
      if (fields >> rest) fail_line(line_no, "trailing tokens after header");
      edges.reserve(m);
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(fields >> u >> v)) fail_line(line_no, "expected edge \"u v\"");
    std::string rest;
    if (fields >> rest) fail_line(line_no, "trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail_line(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (static_cast<int>(edges.size()) == m) fail_line(line_no, "more edges than declared");
    edges.push_back({u, v});
  }
  if (n < 0) throw ParseError("missing header \"p N M\"");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                     std::to_string(edges.size()));
  }
  return Multigraph(n, std::move(edges));
}

Multigraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

std::string graph_to_text(const Multigraph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

RankedSet rank_table_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("rank table must be a JSON object");
  const long m = json_nonneg_int(j, "m");
  const long r = json_nonneg_int(j, "r");
  if (m > kMaxExplicitGroundSize) throw ParseError("ground set too large for explicit table");
  if (!j.contains("ranks") || !j.at("ranks").is_object()) {
    throw ParseError("missing \"ranks\" object");
  }
  const auto& table = j.at("ranks");
  const std::uint32_t subsets = std::uint32_t{1} << m;
  if (table.size() != subsets) {
    throw ParseError("rank table must list all " + std::to_string(subsets) + " subsets, found " +
                     std::to_string(table.size()));
  }
  std::vector<int> ranks(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    const std::string key = std::to_string(s);
    if (!table.contains(key)) throw ParseError("missing rank for subset " + key);
    const auto& value = table.at(key);
    if (!value.is_number_integer()) throw ParseError("rank of subset " + key + " must be an integer");
    ranks[s] = value.get<int>();
  }
  return RankedSet(static_cast<int>(m), static_cast<int>(r), std::move(ranks));
}

nlohmann::json rank_table_to_json(const RankedSet& rs) {
  nlohmann::json table = nlohmann::json::object();
  for (std::uint32_t s = 0; s < rs.subset_count(); ++s) {
    table[std::to_string(s)] = rs.rank(s);
  }
  return {{"m", rs.ground_size()}, {"r", rs.full_rank()}, {"ranks", std::move(table)}};
}

BiPoly polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("polynomial must be an object with a \"terms\" array");
  }
  BiPoly p;
  for (const auto& term : j.at("terms")) {
    const long i = json_nonneg_int(term, "i");
    const long j_exp = json_nonneg_int(term, "j");
    if (!term.contains("c") || !term.at("c").is_string()) {
      throw ParseError("term coefficient \"c\" must be a decimal string");
    }
    p.add_term(static_cast<int>(i), static_cast<int>(j_exp),
               parse_decimal(term.at("c").get<std::string>()));
  }
  return p;
}

nlohmann::json polynomial_to_json(const BiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back({{"i", key.first}, {"j", key.second}, {"c", c.get_str()}});
  }
  return {{"terms", std::move(terms)}};
}

nlohmann::json report_to_json(const IdentityReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const IdentityEntry& entry : report.entries) {
    entries.push_back({{"h", entry.h},
                       {"lhs", entry.lhs.get_str()},
                       {"rhs", entry.rhs.get_str()},
                       {"pass", entry.pass}});
  }
  return {{"overall", report.overall}, {"entries", std::move(entries)}};
}

}  // namespace tutte
