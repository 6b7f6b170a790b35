#ifndef TUTTE_IDENTITIES_HPP
#define TUTTE_IDENTITIES_HPP

#include <gmpxx.h>

#include <vector>

#include "tutte/bipoly.hpp"

namespace tutte {

struct IdentityEntry {
  int h = 0;
  mpz_class lhs;
  mpz_class rhs;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;
  bool overall = true;
};

/// The coefficient sum
///   sum_{i=0}^{h} sum_{j=0}^{h-i} binom(h-i, j) * (-1)^j * t_{ij}.
/// Requires h >= 0.
mpz_class brylawski_lhs(const BiPoly& t, int h);

/// The closed form the sum equals for a system with |E| = m, r(E) = r:
/// 0 for h < m, otherwise (-1)^(m-r) * binom(h-r, h-m).
/// Requires 0 <= r <= m and h >= 0; rejects r > m.
mpz_class brylawski_rhs(int m, int r, int h);

/// One entry per h in [0, h_max] comparing the two sides above.
IdentityReport verify_brylawski(const BiPoly& t, int m, int r, int h_max);

/// True iff expand_hyperbola(t, r) is exactly the monomial z^m.
bool verify_hyperbola(const BiPoly& t, int m, int r);

/// The coefficient of z^k in the hyperbola expansion, as the signed sum
///   sum_{i,j} t_{ij} * (-1)^(r-k+j) * binom(r-i, k-(i+j)),
/// which equals 1 when k = m and 0 otherwise for a Tutte polynomial.
/// Requires k >= 0.
mpz_class coefficient_identity_lhs(const BiPoly& t, int r, int k);

/// Weight C_{h,k} = (-1)^k * binom(h-r, h-k) of the coefficient identity
/// at z^k in the linear combination that rebuilds the h-th coefficient
/// relation. Requires 0 <= k <= h; the upper argument h-r may be negative.
mpz_class combination_weight(int h, int r, int k);

/// The Vandermonde collapse used when the weighted identities are summed:
///   sum_{k=0}^{h} binom(h-r, h-k) * binom(r-i, k-(i+j))
///     == binom(h-i, h-(i+j)).
/// Requires h, i, j >= 0.
bool verify_weight_collapse(int h, int r, int i, int j);

}  // namespace tutte

#endif  // TUTTE_IDENTITIES_HPP
