#ifndef TUTTE_ENGINES_HPP
#define TUTTE_ENGINES_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "tutte/bipoly.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/ranked_set.hpp"

namespace tutte {

/// Definition-level engine: the corank/nullity subset expansion
///   T(x,y) = sum over S of (x-1)^(r(E)-r(S)) * (y-1)^(|S|-r(S)).
/// Validates the rank table first and throws on violation.
BiPoly tutte_subset_expansion(const RankedSet& rs);

enum class PivotRule {
  /// Branch on an ordinary edge with maximal parallel multiplicity.
  MaxMultiplicity,
  /// Branch on the first ordinary edge in list order.
  FirstOrdinary,
};

struct DelConOptions {
  bool memoize = true;
  PivotRule pivot = PivotRule::MaxMultiplicity;
};

/// Deletion-contraction engine. Loops multiply by y, bridges by x,
/// ordinary edges branch into T(G-e) + T(G/e); the edgeless graph is 1.
/// Minors are memoized under their canonical certificate within one
/// top-level call. Disconnected input needs no special casing.
BiPoly tutte_deletion_contraction(const Multigraph& g, const DelConOptions& options = {});

/// Spanning-tree counts keyed by (internal activity, external activity).
/// Read as coefficients this equals the Tutte coefficient map of the graph.
struct ActivityTable {
  std::map<std::pair<int, int>, mpz_class> counts;

  mpz_class tree_count() const;
  BiPoly to_bipoly() const;
  friend bool operator==(const ActivityTable&, const ActivityTable&) = default;
};

/// Coefficient-level engine: enumerates spanning trees and counts their
/// internal/external activities with respect to the edge-list order.
/// Throws std::invalid_argument on disconnected input.
ActivityTable tutte_activities(const Multigraph& g);

/// A byte string constant on isomorphism classes of multigraphs: the
/// lexicographically minimal serialized sorted edge multiset over all
/// vertex relabelings, prefixed with the vertex count.
struct CanonicalCertificate {
  std::string bytes;
  friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

CanonicalCertificate canonical_certificate(const Multigraph& g);

}  // namespace tutte

#endif  // TUTTE_ENGINES_HPP
