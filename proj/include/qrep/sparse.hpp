#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

/// Finite linear combination of basis keys with nonzero Scalar coefficients.
/// Zero coefficients are never stored, so the empty map is the zero element
/// and operator== is structural equality. Derived types may reject keys by
/// providing check_key().
template <class Derived, class Key>
class SparseSum {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;

  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  Derived& add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) return self();
    self().check_key(key);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return self();
  }

  Derived& operator+=(const Derived& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return self();
  }
  Derived& operator-=(const Derived& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return self();
  }
  Derived& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return self();
    }
    for (auto& [k, v] : terms_) v *= c;
    return self();
  }

  Derived operator-() const {
    Derived r = self();
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(const Scalar& c, Derived a) { return a *= c; }
  friend bool operator==(const Derived& a, const Derived& b) { return a.terms_ == b.terms_; }

  void check_key(const Key&) const {}

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  map_type terms_;
};

// Renders (coefficient, basis label) pairs as a signed sum in the order given.
// An empty label stands for the unit basis element.
std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace qrep
