#include "qrep/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace qrep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RootOfUnity: return "RootOfUnity";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ZeroDilation: return "ZeroDilation";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidWParams: return "InvalidWParams";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CategoryError: return "CategoryError";
  }
  return "Unknown";
}

namespace {

// gcd with shortcuts for the shapes that dominate in practice (constants and
// pure powers of q).
RatPoly fast_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return RatPoly::one();
  if (a.is_monomial() || b.is_monomial()) {
    auto k = std::min(a.low_degree(), b.low_degree());
    if (a.is_monomial() && b.is_monomial()) k = std::min(a.degree(), b.degree());
    return RatPoly::monomial(1, static_cast<std::size_t>(k));
  }
  return gcd(a, b);
}

RatPoly divide_out(const RatPoly& p, const RatPoly& g) {
  if (g.is_one()) return p;
  if (g.is_monomial()) return p.unshifted(static_cast<std::size_t>(g.degree()));
  return p.exact_div(g);
}

}  // namespace

Scalar::Scalar(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroArgument, "division by zero");
  if (num.is_zero()) {
    den_ = RatPoly::one();
    return;
  }
  if (!den.is_constant()) {
    RatPoly g = fast_gcd(num, den);
    num = divide_out(num, g);
    den = divide_out(den, g);
  }
  mpq_class lead_inv = 1 / den.leading();
  num_ = num * lead_inv;
  den_ = den * lead_inv;
}

Scalar Scalar::indeterminate() {
  return Scalar(RatPoly::monomial(1, 1), RatPoly::one());
}

mpq_class Scalar::constant_value() const {
  return num_.coeff(0) / den_.coeff(0);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_one()) *this = Scalar(std::move(num_), std::move(den_));
    else if (num_.is_zero()) den_ = RatPoly::one();
    return *this;
  }
  *this = Scalar(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_zero() || other.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (den_.is_one() && other.den_.is_one()) {
    num_ = num_ * other.num_;
    return *this;
  }
  RatPoly g1 = fast_gcd(num_, other.den_);
  RatPoly g2 = fast_gcd(other.num_, den_);
  RatPoly n = divide_out(num_, g1) * divide_out(other.num_, g2);
  RatPoly d = divide_out(den_, g2) * divide_out(other.den_, g1);
  mpq_class lead_inv = 1 / d.leading();
  num_ = n * lead_inv;
  den_ = d * lead_inv;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of zero");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar base = *this;
  Scalar acc = 1;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

bool Scalar::has_negative_sign() const { return !is_zero() && num_.leading() < 0; }

bool Scalar::is_compound() const {
  if (!den_.is_one()) return false;
  std::size_t terms = 0;
  for (const auto& c : num_.coeffs()) terms += (c != 0);
  return terms > 1;
}

std::string Scalar::to_string() const {
  if (is_constant()) return rational_to_string(constant_value());
  auto part = [](const RatPoly& p) {
    std::size_t terms = 0;
    for (const auto& c : p.coeffs()) terms += (c != 0);
    std::string s = p.to_string();
    // A lone rational coefficient times a power of q still contains '/'.
    bool fraction_coeff = terms == 1 && p.leading().get_den() != 1;
    return (terms > 1 || fraction_coeff) ? "(" + s + ")" : s;
  };
  if (den_.is_one()) return num_.to_string();
  return part(num_) + "/" + part(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

FieldConfig FieldConfig::rationals(const mpq_class& q) {
  FieldConfig cfg{FieldKind::Rationals, Scalar(q)};
  validate_q(cfg);
  return cfg;
}

FieldConfig FieldConfig::generic() {
  FieldConfig cfg{FieldKind::RationalFunctions, Scalar::indeterminate()};
  validate_q(cfg);
  return cfg;
}

std::string FieldConfig::describe() const {
  if (kind == FieldKind::Rationals) return "Q, q = " + q.to_string();
  return "Q(q)";
}

void validate_q(const FieldConfig& cfg) {
  if (cfg.q.is_zero()) throw Error(ErrorCode::RootOfUnity, "q must be nonzero");
  if (cfg.q.is_one()) throw Error(ErrorCode::RootOfUnity, "q must differ from 1");
  if (cfg.kind == FieldKind::Rationals) {
    if (!cfg.q.is_constant()) {
      throw Error(ErrorCode::RootOfUnity, "q must be a rational number over Q");
    }
    if (cfg.q == Scalar(-1)) throw Error(ErrorCode::RootOfUnity, "q = -1 is a root of unity");
  } else if (!(cfg.q == Scalar::indeterminate())) {
    throw Error(ErrorCode::RootOfUnity, "over Q(q) the parameter must be the indeterminate q");
  }
}

Scalar q_pow(const FieldConfig& cfg, std::int64_t k) {
  if (cfg.kind == FieldKind::RationalFunctions) {
    auto e = static_cast<std::size_t>(k < 0 ? -k : k);
    RatPoly mono = RatPoly::monomial(1, e);
    return k >= 0 ? Scalar(mono, RatPoly::one()) : Scalar(RatPoly::one(), mono);
  }
  return cfg.q.pow(k);
}

std::optional<std::int64_t> log_q(const FieldConfig& cfg, const Scalar& s) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroArgument, "log_q of zero");
  if (cfg.kind == FieldKind::RationalFunctions) {
    if (!s.num().is_monomial() || !s.den().is_monomial()) return std::nullopt;
    if (s.num().leading() != 1) return std::nullopt;
    std::int64_t k = s.num().low_degree() - s.den().low_degree();
    if (!(q_pow(cfg, k) == s)) return std::nullopt;
    return k;
  }
  if (!s.is_constant()) return std::nullopt;
  // |q^k| grows by at least one bit of num*den per step, which bounds |k|.
  const mpq_class value = s.constant_value();
  const mpq_class q = cfg.q.constant_value();
  const mpz_class s_size = abs(value.get_num() * value.get_den());
  const mpz_class q_size = abs(q.get_num() * q.get_den());
  const std::size_t step = std::max<std::size_t>(1, bit_length(q_size) - 1);
  const auto bound = static_cast<std::int64_t>(bit_length(s_size) / step + 1);
  mpq_class up = 1;
  mpq_class down = 1;
  const mpq_class q_inv = 1 / q;
  for (std::int64_t k = 0; k <= bound; ++k) {
    if (up == value) return k;
    if (down == value) return -k;
    up *= q;
    down *= q_inv;
  }
  return std::nullopt;
}

Scalar q_bracket(const FieldConfig& cfg, std::int64_t i) {
  return (q_pow(cfg, i) - 1) / (cfg.q - 1);
}

std::optional<Scalar> coset_representative(const FieldConfig& cfg, const Scalar& s) {
  if (cfg.kind != FieldKind::RationalFunctions || s.is_zero()) return std::nullopt;
  std::int64_t valuation = s.num().low_degree() - s.den().low_degree();
  return s * q_pow(cfg, -valuation);
}

}  // namespace qrep
