#include "tutte/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tutte {
namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

void append_power(std::ostream& os, const char* var, int exp) {
  if (exp == 0) return;
  os << var;
  if (exp > 1) os << '^' << exp;
}

}  // namespace

BiPoly BiPoly::constant(const mpz_class& c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::monomial(int i, int j, const mpz_class& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

void BiPoly::add_term(int i, int j, const mpz_class& c) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in BiPoly term");
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class BiPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class BiPoly::eval(const mpz_class& x0, const mpz_class& y0) const {
  mpz_class total = 0;
  for (const auto& [key, c] : terms_) {
    total += c * pow_mpz(x0, static_cast<unsigned long>(key.first)) *
             pow_mpz(y0, static_cast<unsigned long>(key.second));
  }
  return total;
}

int BiPoly::max_x_degree() const {
  int deg = -1;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first);
  return deg;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest (i, j) first reads like handwritten polynomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool has_vars = key.first > 0 || key.second > 0;
    if (abs_c != 1 || !has_vars) os << abs_c.get_str();
    if (abs_c != 1 && has_vars) os << '*';
    append_power(os, "x", key.first);
    if (key.first > 0 && key.second > 0) os << '*';
    append_power(os, "y", key.second);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

UniPoly UniPoly::monomial(int degree, const mpz_class& c) {
  UniPoly p;
  p.add_term(degree, c);
  return p;
}

void UniPoly::add_term(int degree, const mpz_class& c) {
  if (c == 0) return;
  if (degree < 0) throw std::invalid_argument("negative exponent in UniPoly term");
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class UniPoly::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class UniPoly::eval(const mpz_class& z0) const {
  mpz_class total = 0;
  for (const auto& [deg, c] : terms_) {
    total += c * pow_mpz(z0, static_cast<unsigned long>(deg));
  }
  return total;
}

int UniPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  for (const auto& [deg, c] : rhs.terms_) add_term(deg, c);
  return *this;
}

std::string UniPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [deg, c] = *it;
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || deg == 0) os << abs_c.get_str();
    if (abs_c != 1 && deg > 0) os << '*';
    append_power(os, "z", deg);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

mpz_class binomial(long n, long k) {
  if (k < 0) return 0;
  mpz_class upper(n);
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), upper.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

UniPoly expand_hyperbola(const BiPoly& t, int r) {
  UniPoly out;
  for (const auto& [key, c] : t.terms()) {
    const int i = key.first;
    const int j = key.second;
    if (i > r) {
      throw std::invalid_argument("rank-exceeding term: t[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "] nonzero with i > r (r = " +
                                  std::to_string(r) + ")");
    }
    // c * z^(i+j) * (z-1)^(r-i), with (z-1)^p expanded by binomials.
    const int p = r - i;
    for (int q = 0; q <= p; ++q) {
      mpz_class coeff = binomial(p, q) * c;
      if ((p - q) % 2 != 0) coeff = -coeff;
      out.add_term(i + j + q, coeff);
    }
  }
  return out;
}

}  // namespace tutte
