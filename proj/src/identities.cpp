#include "tutte/identities.hpp"

#include <stdexcept>

namespace tutte {
namespace {

// (-1)^e for possibly negative e.
inline int parity_sign(long e) { return (e & 1) ? -1 : 1; }

}  // namespace

mpz_class brylawski_lhs(const BiPoly& t, int h) {
  if (h < 0) throw std::invalid_argument("h must be nonnegative");
  mpz_class total = 0;
  // Summation range i <= h, j <= h - i; terms outside contribute nothing
  // because binom(h-i, j) vanishes for 0 <= h-i < j.
  for (const auto& [key, c] : t.terms()) {
    const int i = key.first;
    const int j = key.second;
    if (i > h || j > h - i) continue;
    mpz_class term = binomial(h - i, j) * c;
    if (j % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

mpz_class brylawski_rhs(int m, int r, int h) {
  if (r < 0 || r > m) throw std::invalid_argument("requires 0 <= r <= m");
  if (h < 0) throw std::invalid_argument("h must be nonnegative");
  if (h < m) return 0;
  mpz_class out = binomial(h - r, h - m);
  if ((m - r) % 2 != 0) out = -out;
  return out;
}

IdentityReport verify_brylawski(const BiPoly& t, int m, int r, int h_max) {
  IdentityReport report;
  for (int h = 0; h <= h_max; ++h) {
    IdentityEntry entry;
    entry.h = h;
    entry.lhs = brylawski_lhs(t, h);
    entry.rhs = brylawski_rhs(m, r, h);
    entry.pass = entry.lhs == entry.rhs;
    report.overall = report.overall && entry.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool verify_hyperbola(const BiPoly& t, int m, int r) {
  return expand_hyperbola(t, r) == UniPoly::monomial(m);
}

mpz_class coefficient_identity_lhs(const BiPoly& t, int r, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  mpz_class total = 0;
  for (const auto& [key, c] : t.terms()) {
    const int i = key.first;
    const int j = key.second;
    mpz_class term = binomial(r - i, k - (i + j)) * c;
    if (parity_sign(static_cast<long>(r) - k + j) < 0) term = -term;
    total += term;
  }
  return total;
}

mpz_class combination_weight(int h, int r, int k) {
  if (k < 0 || k > h) throw std::invalid_argument("requires 0 <= k <= h");
  mpz_class out = binomial(static_cast<long>(h) - r, h - k);
  if (k % 2 != 0) out = -out;
  return out;
}

bool verify_weight_collapse(int h, int r, int i, int j) {
  if (h < 0 || i < 0 || j < 0) throw std::invalid_argument("requires h, i, j >= 0");
  mpz_class sum = 0;
  for (int k = 0; k <= h; ++k) {
    sum += binomial(static_cast<long>(h) - r, h - k) * binomial(static_cast<long>(r) - i, k - (i + j));
  }
  return sum == binomial(static_cast<long>(h) - i, h - (i + j));
}

}  // namespace tutte
