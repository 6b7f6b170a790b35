#ifndef TUTTE_BIPOLY_HPP
#define TUTTE_BIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace tutte {

/// Sparse bivariate polynomial in x and y with unbounded integer
/// coefficients. Term maps never store zero coefficients, so equality of
/// term maps is equality of polynomials. Iteration order is (i, j)
/// ascending, which keeps serialization byte-stable.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, mpz_class>;

  BiPoly() = default;

  static BiPoly constant(const mpz_class& c);
  static BiPoly monomial(int i, int j, const mpz_class& c = 1);
  static BiPoly var_x() { return monomial(1, 0); }
  static BiPoly var_y() { return monomial(0, 1); }

  /// Adds c * x^i * y^j, erasing the term if the sum cancels.
  void add_term(int i, int j, const mpz_class& c);

  /// Coefficient t_{ij}; zero when the term is absent.
  mpz_class coefficient(int i, int j) const;

  mpz_class eval(const mpz_class& x0, const mpz_class& y0) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Largest exponent of x over the support; -1 for the zero polynomial.
  int max_x_degree() const;

  const TermMap& terms() const { return terms_; }

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly& lhs, const BiPoly& rhs) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

/// Sparse univariate polynomial in z, same storage conventions as BiPoly.
class UniPoly {
 public:
  using TermMap = std::map<int, mpz_class>;

  UniPoly() = default;

  static UniPoly monomial(int degree, const mpz_class& c = 1);

  void add_term(int degree, const mpz_class& c);
  mpz_class coefficient(int degree) const;
  mpz_class eval(const mpz_class& z0) const;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }

  UniPoly& operator+=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Generalized binomial coefficient: 0 for k < 0, otherwise the falling
/// factorial n(n-1)...(n-k+1)/k!, which is valid for negative n.
mpz_class binomial(long n, long k);

/// Substitutes along the hyperbola (x-1)(y-1) = 1 in cleared-denominator
/// form: returns sum over terms of t_{ij} * z^{i+j} * (z-1)^{r-i}.
/// Throws std::invalid_argument on a nonzero term with i > r
/// ("rank-exceeding term"), since the exponent r-i would be negative.
UniPoly expand_hyperbola(const BiPoly& t, int r);

}  // namespace tutte

#endif  // TUTTE_BIPOLY_HPP
