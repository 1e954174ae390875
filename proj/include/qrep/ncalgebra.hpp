#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

#include "qrep/field.hpp"
#include "qrep/sparse.hpp"

namespace qrep {

/// Exponent pair of an ordered monomial x^a y^b (x-power first).
struct Monomial {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct QPlaneTag {
  static constexpr const char* x = "x";
  static constexpr const char* y = "y";
  static constexpr bool negative_x = false;
};
struct QWeylTag {
  static constexpr const char* x = "X";
  static constexpr const char* y = "Y";
  static constexpr bool negative_x = false;
};
struct LocalizedTag {
  static constexpr const char* x = "x";
  static constexpr const char* y = "y";
  static constexpr bool negative_x = true;
};

/// Element of a two-generator algebra in PBW normal form sum c * x^a y^b.
template <class Tag>
class AlgebraElement : public SparseSum<AlgebraElement<Tag>, Monomial> {
 public:
  using tag = Tag;

  AlgebraElement() = default;

  static AlgebraElement monomial(std::int64_t a, std::int64_t b, const Scalar& c = 1) {
    AlgebraElement e;
    e.add_term({a, b}, c);
    return e;
  }
  static AlgebraElement constant(const Scalar& c) { return monomial(0, 0, c); }
  static AlgebraElement x() { return monomial(1, 0); }
  static AlgebraElement y() { return monomial(0, 1); }

  void check_key(const Monomial& m) const {
    if (m.b < 0 || (!Tag::negative_x && m.a < 0)) {
      throw Error(ErrorCode::InvalidParam, "negative exponent outside the localized algebra");
    }
  }

  // The element as a scalar, if it is a multiple of the identity.
  std::optional<Scalar> as_scalar() const {
    if (this->is_zero()) return Scalar();
    if (this->size() == 1 && this->terms().begin()->first == Monomial{0, 0}) {
      return this->terms().begin()->second;
    }
    return std::nullopt;
  }
};

using QPlaneElement = AlgebraElement<QPlaneTag>;
using QWeylElement = AlgebraElement<QWeylTag>;
using LocalizedElement = AlgebraElement<LocalizedTag>;

// Canonical text form: monomials in descending (a, b) order, `c*x^a*y^b`.
// The letters can be overridden, which is how images in the X-localized
// q-Weyl algebra are printed.
std::string to_string(const QPlaneElement& u);
std::string to_string(const QWeylElement& u);
std::string to_string(const LocalizedElement& u, const char* x = "x", const char* y = "y");

QPlaneElement qp_multiply(const FieldConfig& cfg, const QPlaneElement& u, const QPlaneElement& v);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

// Product in A_1(q), obtained by rewriting YX -> qXY + 1 until no redex remains.
QWeylElement qw_multiply(const FieldConfig& cfg, const QWeylElement& u, const QWeylElement& v,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

LocalizedElement loc_multiply(const FieldConfig& cfg, const LocalizedElement& u,
                              const LocalizedElement& v);

template <class Tag>
AlgebraElement<Tag> multiply(const FieldConfig& cfg, const AlgebraElement<Tag>& u,
                             const AlgebraElement<Tag>& v) {
  if constexpr (std::is_same_v<Tag, QPlaneTag>) return qp_multiply(cfg, u, v);
  else if constexpr (std::is_same_v<Tag, QWeylTag>) return qw_multiply(cfg, u, v);
  else return loc_multiply(cfg, u, v);
}

template <class Tag>
AlgebraElement<Tag> power(const FieldConfig& cfg, const AlgebraElement<Tag>& u, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidParam, "negative power of an algebra element");
  auto acc = AlgebraElement<Tag>::constant(1);
  for (std::int64_t i = 0; i < k; ++i) acc = multiply(cfg, acc, u);
  return acc;
}

// X -> x, Y -> (q-1)^{-1} x^{-1}(y - 1).
LocalizedElement embed_qweyl(const FieldConfig& cfg, const QWeylElement& u);

// Inverse on the localization: x^{+-1} -> X^{+-1}, y -> (q-1)XY + 1. The
// result is expressed in the basis X^a Y^b (a in Z), stored as a
// LocalizedElement whose letters denote X and Y.
LocalizedElement localized_to_qweyl(const FieldConfig& cfg, const LocalizedElement& u);

// Reads an X/Y-lettered localized element back as an element of A_1(q); empty
// when some X exponent is negative.
std::optional<QWeylElement> as_qweyl(const LocalizedElement& u);

// x -> X, y -> (q-1)XY + 1.
QWeylElement sigma(const FieldConfig& cfg, const QPlaneElement& u);
// x -> (q-1)XY + 1, y -> Y.
QWeylElement tau_embed(const FieldConfig& cfg, const QPlaneElement& u);

// Components of u by the grading deg(x^a y^b) = n*a - m*b.
std::map<std::int64_t, QPlaneElement> grade_split(const QPlaneElement& u, std::int64_t m,
                                                  std::int64_t n);

// YX - XY in normal form, i.e. (q-1)XY + 1.
QWeylElement casimir(const FieldConfig& cfg);

}  // namespace qrep
