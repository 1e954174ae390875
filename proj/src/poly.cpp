#include "qrep/poly.hpp"

#include <stdexcept>

namespace qrep {

RatPoly::RatPoly(mpq_class constant) {
  constant.canonicalize();
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly RatPoly::monomial(mpq_class coeff, std::size_t degree) {
  coeff.canonicalize();
  if (coeff == 0) return {};
  std::vector<mpq_class> c(degree + 1);
  c[degree] = std::move(coeff);
  RatPoly p;
  p.coeffs_ = std::move(c);
  return p;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool RatPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

bool RatPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::int64_t RatPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<std::int64_t>(i);
  }
  return 0;
}

mpq_class RatPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  RatPoly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

RatPoly RatPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  RatPoly r;
  r.coeffs_.assign(k, mpq_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

RatPoly RatPoly::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw std::logic_error("RatPoly::unshifted: not divisible");
  }
  RatPoly r;
  if (k < coeffs_.size()) r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RatPoly::divmod: division by zero");
  if (degree() < divisor.degree()) return {RatPoly{}, *this};
  std::vector<mpq_class> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<mpq_class> quot(coeffs_.size() - dd);
  const mpq_class& lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class c = rem[k + dd] / lead;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
    quot[k] = std::move(c);
  }
  RatPoly q, r;
  q.coeffs_ = std::move(quot);
  q.trim();
  r.coeffs_ = std::move(rem);
  r.trim();
  return {std::move(q), std::move(r)};
}

RatPoly RatPoly::exact_div(const RatPoly& divisor) const {
  if (divisor.is_constant()) {
    if (divisor.is_zero()) throw std::domain_error("RatPoly::exact_div: division by zero");
    return *this * mpq_class(1 / divisor.coeffs_[0]);
  }
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("RatPoly::exact_div: nonzero remainder");
  return q;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / leading());
}

mpq_class RatPoly::evaluate(const mpq_class& at) const {
  mpq_class acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

std::string rational_to_string(const mpq_class& value) {
  return value.get_str();
}

std::size_t bit_length(const mpz_class& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace qrep
