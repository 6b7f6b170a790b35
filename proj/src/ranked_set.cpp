#include "tutte/ranked_set.hpp"

#include <bit>
#include <stdexcept>

#include "tutte/rng.hpp"

namespace tutte {

RankedSet::RankedSet(int ground_size, int full_rank, std::vector<int> ranks)
    : m_(ground_size), r_total_(full_rank), ranks_(std::move(ranks)) {
  if (m_ < 0 || m_ > kMaxExplicitGroundSize) {
    throw std::invalid_argument("ground set too large for explicit table");
  }
  if (ranks_.size() != (std::size_t{1} << m_)) {
    throw std::invalid_argument("rank table must have exactly 2^m entries");
  }
}

std::string ValidationResult::message() const {
  if (ok) return "valid";
  return violation ? violation->reason : "invalid";
}

ValidationResult validate_ranked_set(const RankedSet& rs) {
  const int r_total = rs.full_rank();
  const std::uint32_t full = rs.subset_count() - 1;
  if (r_total < 0) {
    return {false, RankViolation{full, r_total, "r(E) = " + std::to_string(r_total) + " is negative"}};
  }
  for (std::uint32_t s = 0; s < rs.subset_count(); ++s) {
    const int rank = rs.rank(s);
    const int size = std::popcount(s);
    if (rank < 0) {
      return {false, RankViolation{s, rank,
                                   "r(S) = " + std::to_string(rank) + " is negative for subset " +
                                       std::to_string(s)}};
    }
    const int bound = std::min(r_total, size);
    if (rank > bound) {
      return {false,
              RankViolation{s, rank, "r(S) = " + std::to_string(rank) + " exceeds min(r(E), |S|) = " +
                                         std::to_string(bound) + " for subset " + std::to_string(s)}};
    }
  }
  if (rs.rank(full) != r_total) {
    return {false, RankViolation{full, rs.rank(full),
                                 "r(E) = " + std::to_string(rs.rank(full)) +
                                     " in the table disagrees with the declared total rank " +
                                     std::to_string(r_total)}};
  }
  return {};
}

RankedSet uniform_matroid(int r, int m) {
  if (r < 0 || r > m) throw std::invalid_argument("uniform matroid requires 0 <= r <= m");
  if (m > kMaxExplicitGroundSize) throw std::invalid_argument("ground set too large for explicit table");
  std::vector<int> ranks(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = std::min(std::popcount(s), r);
  }
  return RankedSet(m, r, std::move(ranks));
}

RankedSet random_ranked_set(int m, int r_total, std::uint64_t seed) {
  if (r_total < 0 || r_total > m) throw std::invalid_argument("requires 0 <= r_total <= m");
  if (m > kMaxExplicitGroundSize) throw std::invalid_argument("ground set too large for explicit table");
  Rng rng(seed);
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<int> ranks(std::size_t{1} << m, 0);
  // Masks in increasing order pin the draw sequence, so the table is a
  // pure function of (m, r_total, seed).
  for (std::uint32_t s = 1; s < full; ++s) {
    const int bound = std::min(r_total, std::popcount(s));
    ranks[s] = static_cast<int>(rng.in_range(0, static_cast<std::uint64_t>(bound)));
  }
  ranks[full] = r_total;
  return RankedSet(m, r_total, std::move(ranks));
}

RankedSet ranked_set_of_graph(const Multigraph& g) {
  const int m = g.edge_count();
  if (m > kMaxExplicitGroundSize) {
    throw std::invalid_argument("ground set too large for explicit table");
  }
  std::vector<int> ranks(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = graphic_rank(g, s);
  }
  const int r_total = ranks.back();
  return RankedSet(m, r_total, std::move(ranks));
}

}  // namespace tutte
