#ifndef TUTTE_RANKED_SET_HPP
#define TUTTE_RANKED_SET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tutte/multigraph.hpp"

namespace tutte {

/// Explicit rank tables keep every subset addressable; beyond this ground
/// set size the 2^m table stops being a reasonable in-memory object.
inline constexpr int kMaxExplicitGroundSize = 24;

/// A ground set of m elements with a total rank table indexed by subset
/// bitmask. The table is stored as given; use validate_ranked_set to check
/// the rank bounds 0 <= r(S) <= min(r(E), |S|).
class RankedSet {
 public:
  RankedSet() : ranks_(1, 0) {}
  /// Requires ranks.size() == 2^m. Throws std::invalid_argument on size
  /// mismatch or m outside [0, kMaxExplicitGroundSize].
  RankedSet(int ground_size, int full_rank, std::vector<int> ranks);

  int ground_size() const { return m_; }
  int full_rank() const { return r_total_; }
  int rank(std::uint32_t subset_mask) const { return ranks_[subset_mask]; }
  std::uint32_t subset_count() const { return static_cast<std::uint32_t>(ranks_.size()); }
  const std::vector<int>& rank_table() const { return ranks_; }

  friend bool operator==(const RankedSet&, const RankedSet&) = default;

 private:
  int m_ = 0;
  int r_total_ = 0;
  std::vector<int> ranks_;
};

struct RankViolation {
  std::uint32_t subset = 0;
  int rank = 0;
  std::string reason;
};

struct ValidationResult {
  bool ok = true;
  std::optional<RankViolation> violation;
  std::string message() const;
};

/// Accepts iff 0 <= r(S) <= min(r_total, |S|) for every subset and
/// ranks(E) == r_total. Reports the first violating subset otherwise.
ValidationResult validate_ranked_set(const RankedSet& rs);

/// Uniform matroid U(r, m): ranks(S) = min(|S|, r). Requires 0 <= r <= m.
RankedSet uniform_matroid(int r, int m);

/// Every nonempty proper subset gets an independent uniform rank in
/// [0, min(r_total, |S|)]; the empty set gets 0 and the full set r_total.
/// Bit-for-bit reproducible from (m, r_total, seed).
RankedSet random_ranked_set(int m, int r_total, std::uint64_t seed);

/// The graphic rank table of g. Throws "ground set too large for explicit
/// table" when e(G) exceeds kMaxExplicitGroundSize.
RankedSet ranked_set_of_graph(const Multigraph& g);

}  // namespace tutte

#endif  // TUTTE_RANKED_SET_HPP
