#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qrep {

/// Dense univariate polynomial over the rationals, used as the numerator and
/// denominator of rational functions in q. Coefficients are stored from the
/// constant term upwards with no trailing zeros, so the zero polynomial is an
/// empty vector.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(mpq_class constant);
  explicit RatPoly(std::vector<mpq_class> coeffs);

  static RatPoly monomial(mpq_class coeff, std::size_t degree);
  static RatPoly one() { return RatPoly(mpq_class(1)); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  // A single nonzero term c*q^k.
  bool is_monomial() const;

  // -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  // Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::int64_t low_degree() const;

  const mpq_class& leading() const { return coeffs_.back(); }
  mpq_class coeff(std::size_t k) const;
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const mpq_class& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiply by q^k.
  RatPoly shifted(std::size_t k) const;
  // Divide by q^k; the k lowest coefficients must vanish.
  RatPoly unshifted(std::size_t k) const;

  // Euclidean division; throws on a zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  // Exact division (remainder must be zero).
  RatPoly exact_div(const RatPoly& divisor) const;
  RatPoly monic() const;

  mpq_class evaluate(const mpq_class& at) const;

  // Human readable form in the variable `var`, highest power first.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

std::string rational_to_string(const mpq_class& value);
std::size_t bit_length(const mpz_class& value);

}  // namespace qrep
