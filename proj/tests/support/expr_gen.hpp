#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qrep/parser.hpp"

namespace oracle {

using qrep::Category;
using qrep::Expr;
using qrep::ExprPtr;

inline std::string letters_of(Category cat) {
  switch (cat) {
    case Category::Scalar: return "q";
    case Category::QPlane:
    case Category::Localized: return "qxy";
    case Category::QWeyl: return "qXY";
    case Category::Laurent:
    case Category::Poly: return "qt";
  }
  return "q";
}

inline bool negative_symbol_power_ok(Category cat, char symbol) {
  if (symbol == 'q') return true;
  if (symbol == 'x') return cat == Category::Localized;
  if (symbol == 't') return cat == Category::Laurent;
  return false;
}

/// Random syntax trees that the parser accepts for a given category.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr operator()(Category cat, int depth = 4) { return node(cat, depth); }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ExprPtr leaf(Category cat) {
    if (pick(0, 2) == 0) {
      mpz_class n = pick(0, 40);
      if (pick(0, 9) == 0) n = n * mpz_class("123456789012345678901");
      return qrep::make_number(n);
    }
    const std::string letters = letters_of(cat);
    return qrep::make_symbol(letters[static_cast<std::size_t>(pick(0, static_cast<int>(letters.size()) - 1))]);
  }

  ExprPtr node(Category cat, int depth) {
    if (depth <= 0 || pick(0, 4) == 0) return leaf(cat);
    switch (pick(0, 6)) {
      case 0: return qrep::make_unary(Expr::Kind::Neg, node(cat, depth - 1));
      case 1: return qrep::make_binary(Expr::Kind::Add, node(cat, depth - 1), node(cat, depth - 1));
      case 2: return qrep::make_binary(Expr::Kind::Sub, node(cat, depth - 1), node(cat, depth - 1));
      case 3: return qrep::make_binary(Expr::Kind::Mul, node(cat, depth - 1), node(cat, depth - 1));
      case 4: return qrep::make_binary(Expr::Kind::Div, node(cat, depth - 1), node(cat, depth - 1));
      default: {
        ExprPtr base = node(cat, depth - 1);
        std::int64_t exponent = pick(0, 6);
        const bool symbol = base->kind == Expr::Kind::Symbol;
        if (pick(0, 2) == 0 && (!symbol || negative_symbol_power_ok(cat, base->symbol))) {
          exponent = -exponent;
        }
        return qrep::make_pow(std::move(base), exponent);
      }
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace oracle
