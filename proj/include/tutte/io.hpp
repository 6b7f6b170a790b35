#ifndef TUTTE_IO_HPP
#define TUTTE_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tutte/bipoly.hpp"
#include "tutte/identities.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/ranked_set.hpp"

namespace tutte {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graph text format: a "p N M" header followed by M lines "u v" with
/// 0-based vertex indices; u == v encodes a loop, repeated lines parallel
/// edges. Lines starting with '#' are comments. Throws ParseError with a
/// line diagnostic.
Multigraph parse_graph_text(std::istream& in);
Multigraph parse_graph_text(const std::string& text);
std::string graph_to_text(const Multigraph& g);

/// Rank-table JSON: {"m": M, "r": R, "ranks": {"<mask>": rank, ...}} with
/// all 2^M subset keys present, masks written in decimal.
RankedSet rank_table_from_json(const nlohmann::json& j);
nlohmann::json rank_table_to_json(const RankedSet& rs);

/// Polynomial JSON: {"terms":[{"i":I,"j":J,"c":"<signed decimal>"}...]},
/// terms sorted by (i, j) ascending.
BiPoly polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const BiPoly& p);

nlohmann::json report_to_json(const IdentityReport& report);

/// Parses a decimal string (with optional sign) as an exact integer.
mpz_class parse_decimal(const std::string& text);

}  // namespace tutte

#endif  // TUTTE_IO_HPP
