#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qrep/error.hpp"
#include "qrep/poly.hpp"

namespace qrep {

/// An exact element of Q(q): a reduced fraction num/den of rational
/// polynomials in the indeterminate q, with den monic. Plain rationals are the
/// constant case, so the same type serves both supported base fields and
/// equality is structural.
class Scalar {
 public:
  Scalar() : den_(RatPoly::one()) {}
  Scalar(long value) : num_(mpq_class(value)), den_(RatPoly::one()) {}  // NOLINT
  Scalar(int value) : Scalar(static_cast<long>(value)) {}              // NOLINT
  Scalar(const mpq_class& value) : num_(value), den_(RatPoly::one()) {}  // NOLINT

  // Reduces to canonical form; den must be nonzero.
  Scalar(RatPoly num, RatPoly den);

  static Scalar indeterminate();
  static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  mpq_class constant_value() const;

  const RatPoly& num() const noexcept { return num_; }
  const RatPoly& den() const noexcept { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws Error(ZeroArgument) for zero.
  Scalar inverse() const;
  Scalar pow(std::int64_t k) const;

  // Sign of the leading numerator coefficient; used for printing.
  bool has_negative_sign() const;
  // True when the printed form needs parentheses as a factor.
  bool is_compound() const;

  std::string to_string() const;

 private:
  RatPoly num_;
  RatPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class FieldKind { Rationals, RationalFunctions };

/// Base field together with the deformation parameter. Over the rationals q
/// is a fixed nonzero rational; over Q(q) it is the indeterminate itself.
struct FieldConfig {
  FieldKind kind = FieldKind::RationalFunctions;
  Scalar q = Scalar::indeterminate();

  // Validated factories.
  static FieldConfig rationals(const mpq_class& q);
  static FieldConfig generic();

  std::string describe() const;
};

// Throws Error(RootOfUnity) unless q is admissible for the configured field.
void validate_q(const FieldConfig& cfg);

Scalar q_pow(const FieldConfig& cfg, std::int64_t k);

// The unique k with s = q^k, if any. Throws Error(ZeroArgument) for s = 0.
std::optional<std::int64_t> log_q(const FieldConfig& cfg, const Scalar& s);

// [i]_q = (q^i - 1)/(q - 1) for any integer i.
Scalar q_bracket(const FieldConfig& cfg, std::int64_t i);

// Over Q(q) only: s divided by the power of q matching its q-adic valuation,
// a canonical representative of the coset s<q>. Returns nullopt over Q.
std::optional<Scalar> coset_representative(const FieldConfig& cfg, const Scalar& s);

}  // namespace qrep
