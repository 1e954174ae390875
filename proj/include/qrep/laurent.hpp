#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/ncalgebra.hpp"
#include "qrep/sparse.hpp"

namespace qrep {

/// Element of F[t, t^{-1}]: finitely many nonzero coefficients of t^i.
class LaurentVector : public SparseSum<LaurentVector, std::int64_t> {
 public:
  LaurentVector() = default;
  static LaurentVector basis(std::int64_t i, const Scalar& c = 1) {
    LaurentVector v;
    v.add_term(i, c);
    return v;
  }

  std::vector<std::int64_t> support() const;
  std::int64_t min_exponent() const { return terms().begin()->first; }
  std::int64_t max_exponent() const { return terms().rbegin()->first; }
};

/// Element of F[t]; exponents must be nonnegative.
class PolyVector : public SparseSum<PolyVector, std::int64_t> {
 public:
  PolyVector() = default;
  static PolyVector basis(std::int64_t i, const Scalar& c = 1) {
    PolyVector v;
    v.add_term(i, c);
    return v;
  }
  // Throws Error(InvalidParam) if p has a negative exponent.
  static PolyVector from_laurent(const LaurentVector& p);
  LaurentVector to_laurent() const;

  void check_key(std::int64_t i) const {
    if (i < 0) throw Error(ErrorCode::InvalidParam, "negative exponent in a polynomial");
  }
};

// Highest power first, `c*t^i`.
std::string to_string(const LaurentVector& p);
std::string to_string(const PolyVector& p);

// Commutative product in F[t^{+-1}].
LaurentVector laurent_multiply(const LaurentVector& p, const LaurentVector& r);

// p(t) -> p(ct). Throws Error(ZeroDilation) for c = 0.
LaurentVector dilate(const LaurentVector& p, const Scalar& c);

// tau_q: p(t) -> p(qt) on polynomials.
PolyVector tau_q(const FieldConfig& cfg, const PolyVector& p);
// Jackson derivative, t^k -> [k]_q t^{k-1}.
PolyVector jackson_derivative(const FieldConfig& cfg, const PolyVector& p);

// Action of the quantum plane on F[t] with x acting as tau_q and y as the
// Jackson derivative.
PolyVector act_jackson(const FieldConfig& cfg, const QPlaneElement& u, const PolyVector& p);

struct FaithfulnessReport {
  bool faithful = true;
  std::int64_t degree_bound = 0;
  // A nonzero element with exponents <= degree_bound acting as zero on all
  // polynomials of degree <= 2*degree_bound, when one exists.
  std::optional<QPlaneElement> kernel_witness;
};

// Finite-degree check of faithfulness of the Jackson representation.
FaithfulnessReport jackson_faithfulness_probe(const FieldConfig& cfg, std::int64_t degree_bound);

/// Row-echelon basis of a subspace of F[t^{+-1}], for exact span and
/// membership tests.
class LaurentSpan {
 public:
  // Adds v; returns true if it enlarged the span.
  bool insert(const LaurentVector& v);
  bool contains(const LaurentVector& v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::vector<LaurentVector> basis() const;

 private:
  LaurentVector reduce(LaurentVector v) const;

  // Keyed by pivot: each row's largest exponent, with coefficient 1 there.
  std::map<std::int64_t, LaurentVector> rows_;
};

}  // namespace qrep
