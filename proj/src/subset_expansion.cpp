#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tutte/engines.hpp"

namespace tutte {

BiPoly tutte_subset_expansion(const RankedSet& rs) {
  const ValidationResult check = validate_ranked_set(rs);
  if (!check.ok) throw std::invalid_argument(check.message());

  const int m = rs.ground_size();
  const int r = rs.full_rank();

  // Bucket subsets by (corank, nullity); the validated bounds guarantee
  // both are nonnegative. The polynomial is then
  //   sum over (a, b) of count[a][b] * (x-1)^a * (y-1)^b.
  std::vector<std::vector<std::uint64_t>> count(r + 1, std::vector<std::uint64_t>(m + 1, 0));
  for (std::uint32_t s = 0; s < rs.subset_count(); ++s) {
    const int rank = rs.rank(s);
    ++count[r - rank][std::popcount(s) - rank];
  }

  // signed_binom[p][q] = binom(p, q) * (-1)^(p-q), the coefficient of the
  // q-th power when expanding (v-1)^p.
  const int max_pow = std::max(r, m);
  std::vector<std::vector<mpz_class>> signed_binom(max_pow + 1);
  for (int p = 0; p <= max_pow; ++p) {
    signed_binom[p].resize(p + 1);
    for (int q = 0; q <= p; ++q) {
      signed_binom[p][q] = binomial(p, q);
      if ((p - q) % 2 != 0) signed_binom[p][q] = -signed_binom[p][q];
    }
  }

  std::vector<std::vector<mpz_class>> acc(r + 1, std::vector<mpz_class>(m + 1));
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= m; ++b) {
      if (count[a][b] == 0) continue;
      const mpz_class weight = mpz_class(static_cast<unsigned long>(count[a][b]));
      for (int i = 0; i <= a; ++i) {
        const mpz_class xi = weight * signed_binom[a][i];
        for (int j = 0; j <= b; ++j) {
          acc[i][j] += xi * signed_binom[b][j];
        }
      }
    }
  }

  BiPoly t;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= m; ++j) {
      t.add_term(i, j, acc[i][j]);
    }
  }
  return t;
}

}  // namespace tutte
