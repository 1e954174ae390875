#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qrep/field.hpp"
#include "qrep/laurent.hpp"
#include "qrep/ncalgebra.hpp"
#include "qrep/qplane_reps.hpp"
#include "qrep/qweyl_reps.hpp"

namespace qrep {

// Syntactic category of an expression; decides which letters may appear.
//   scalar:    q
//   qplane:    q x y          localized: q x y (x may carry negative powers)
//   qweyl:     q X Y          laurent:   q t (negative powers allowed)
//   poly:      q t
enum class Category { Scalar, QPlane, QWeyl, Localized, Laurent, Poly };

std::string_view category_name(Category cat);
std::optional<Category> category_from_name(std::string_view name);

/// Expression tree. Numbers are nonnegative integers; signs and fractions are
/// expressed with Neg and Div nodes.
struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  mpz_class number;
  char symbol = 0;
  std::int64_t exponent = 0;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_number(const mpz_class& value);
ExprPtr make_symbol(char symbol);
ExprPtr make_unary(Expr::Kind kind, ExprPtr operand);
ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, std::int64_t exponent);

// Grammar:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' ['-'] digits)?
//   atom    := digits | letter | '(' sum ')'
// Throws Error(SyntaxError) with the offending position, or
// Error(CategoryError) for letters or negative powers the category forbids.
ExprPtr parse(std::string_view text, Category cat);

// Minimal-parenthesis rendering; parse(print(e)) reproduces e exactly.
std::string print(const ExprPtr& e);
bool structurally_equal(const Expr& a, const Expr& b);

Scalar eval_scalar(const FieldConfig& cfg, const ExprPtr& e);
QPlaneElement eval_qplane(const FieldConfig& cfg, const ExprPtr& e);
QWeylElement eval_qweyl(const FieldConfig& cfg, const ExprPtr& e);
LocalizedElement eval_localized(const FieldConfig& cfg, const ExprPtr& e);
LaurentVector eval_laurent(const FieldConfig& cfg, const ExprPtr& e);
PolyVector eval_poly(const FieldConfig& cfg, const ExprPtr& e);

Scalar parse_scalar(const FieldConfig& cfg, std::string_view text);
QPlaneElement parse_qplane(const FieldConfig& cfg, std::string_view text);
QWeylElement parse_qweyl(const FieldConfig& cfg, std::string_view text);
LocalizedElement parse_localized(const FieldConfig& cfg, std::string_view text);
LaurentVector parse_laurent(const FieldConfig& cfg, std::string_view text);
PolyVector parse_poly(const FieldConfig& cfg, std::string_view text);

// `V[m,n; f0,...]` and `W[n; g0,...]`.
FWeight parse_fweight(const FieldConfig& cfg, std::string_view text);
GWeight parse_gweight(const FieldConfig& cfg, std::string_view text);

}  // namespace qrep
