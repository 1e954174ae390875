#include "qrep/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qrep {

std::string_view category_name(Category cat) {
  switch (cat) {
    case Category::Scalar: return "scalar";
    case Category::QPlane: return "qplane";
    case Category::QWeyl: return "qweyl";
    case Category::Localized: return "localized";
    case Category::Laurent: return "laurent";
    case Category::Poly: return "poly";
  }
  return "unknown";
}

std::optional<Category> category_from_name(std::string_view name) {
  for (auto cat : {Category::Scalar, Category::QPlane, Category::QWeyl, Category::Localized,
                   Category::Laurent, Category::Poly}) {
    if (category_name(cat) == name) return cat;
  }
  return std::nullopt;
}

ExprPtr make_number(const mpz_class& value) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->number = value;
  return e;
}

ExprPtr make_symbol(char symbol) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Symbol;
  e->symbol = symbol;
  return e;
}

ExprPtr make_unary(Expr::Kind kind, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_pow(ExprPtr base, std::int64_t exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

namespace {

constexpr std::int64_t kMaxExponent = 100000;

std::string_view letters_for(Category cat) {
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

bool negative_power_allowed(Category cat, char symbol) {
  if (symbol == 'q') return true;
  if (symbol == 'x') return cat == Category::Localized;
  if (symbol == 't') return cat == Category::Laurent;
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, Category cat) : text_(text), cat_(cat) {}

  ExprPtr run() {
    ExprPtr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      if (accept('+')) lhs = make_binary(Expr::Kind::Add, lhs, product());
      else if (accept('-')) lhs = make_binary(Expr::Kind::Sub, lhs, product());
      else return lhs;
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make_binary(Expr::Kind::Mul, lhs, unary());
      else if (accept('/')) lhs = make_binary(Expr::Kind::Div, lhs, unary());
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make_unary(Expr::Kind::Neg, unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    std::int64_t k = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (k > kMaxExponent) fail("exponent too large");
    if (paren && !accept(')')) fail("expected ')'");
    if (negative) {
      k = -k;
      if (base->kind == Expr::Kind::Symbol && !negative_power_allowed(cat_, base->symbol)) {
        throw Error(ErrorCode::CategoryError,
                    std::string("negative power of '") + base->symbol + "' in a " +
                        std::string(category_name(cat_)) + " expression");
      }
    }
    return make_pow(base, k);
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return make_number(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (std::string_view("qxyXYt").find(c) == std::string_view::npos) {
        fail(std::string("unknown symbol '") + c + "'");
      }
      if (letters_for(cat_).find(c) == std::string_view::npos) {
        throw Error(ErrorCode::CategoryError, std::string("'") + c + "' is not allowed in a " +
                                                  std::string(category_name(cat_)) +
                                                  " expression");
      }
      ++pos_;
      return make_symbol(c);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  Category cat_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number:
    case Expr::Kind::Symbol: return 5;
  }
  return 5;
}

std::string print_at(const Expr& e, int min_prec);

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.get_str();
    case Expr::Kind::Symbol: return std::string(1, e.symbol);
    case Expr::Kind::Neg: return "-" + print_at(*e.lhs, 3);
    case Expr::Kind::Add: return print_at(*e.lhs, 1) + " + " + print_at(*e.rhs, 2);
    case Expr::Kind::Sub: return print_at(*e.lhs, 1) + " - " + print_at(*e.rhs, 2);
    case Expr::Kind::Mul: return print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
    case Expr::Kind::Div: return print_at(*e.lhs, 2) + "/" + print_at(*e.rhs, 3);
    case Expr::Kind::Pow: return print_at(*e.lhs, 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

// Evaluation into a target type E. Hooks supply what differs per category.
template <class E>
struct EvalHooks {
  std::function<E(const Scalar&)> from_scalar;
  std::function<E(char)> symbol;
  std::function<E(const E&, const E&)> multiply;
  std::function<std::optional<Scalar>(const E&)> as_scalar;
  std::function<std::optional<E>(const E&)> invert;
};

template <class E>
E eval_with(const FieldConfig& cfg, const Expr& e, const EvalHooks<E>& hooks) {
  switch (e.kind) {
    case Expr::Kind::Number: return hooks.from_scalar(Scalar(mpq_class(e.number)));
    case Expr::Kind::Symbol:
      return e.symbol == 'q' ? hooks.from_scalar(cfg.q) : hooks.symbol(e.symbol);
    case Expr::Kind::Neg: return -eval_with(cfg, *e.lhs, hooks);
    case Expr::Kind::Add: return eval_with(cfg, *e.lhs, hooks) + eval_with(cfg, *e.rhs, hooks);
    case Expr::Kind::Sub: return eval_with(cfg, *e.lhs, hooks) - eval_with(cfg, *e.rhs, hooks);
    case Expr::Kind::Mul:
      return hooks.multiply(eval_with(cfg, *e.lhs, hooks), eval_with(cfg, *e.rhs, hooks));
    case Expr::Kind::Div: {
      auto divisor = hooks.as_scalar(eval_with(cfg, *e.rhs, hooks));
      if (!divisor) throw Error(ErrorCode::CategoryError, "division by a non-scalar");
      if (divisor->is_zero()) throw Error(ErrorCode::ZeroArgument, "division by zero");
      return divisor->inverse() * eval_with(cfg, *e.lhs, hooks);
    }
    case Expr::Kind::Pow: {
      E base = eval_with(cfg, *e.lhs, hooks);
      std::int64_t k = e.exponent;
      if (k < 0) {
        auto s = hooks.as_scalar(base);
        if (s && s->is_zero()) throw Error(ErrorCode::ZeroArgument, "negative power of zero");
        auto inv = hooks.invert(base);
        if (!inv) throw Error(ErrorCode::CategoryError, "negative power of a non-invertible element");
        base = std::move(*inv);
        k = -k;
      }
      E acc = hooks.from_scalar(1);
      while (k > 0) {
        if (k & 1) acc = hooks.multiply(acc, base);
        k >>= 1;
        if (k > 0) base = hooks.multiply(base, base);
      }
      return acc;
    }
  }
  throw Error(ErrorCode::SyntaxError, "malformed expression");
}

template <class Tag>
EvalHooks<AlgebraElement<Tag>> algebra_hooks(const FieldConfig& cfg) {
  using E = AlgebraElement<Tag>;
  EvalHooks<E> h;
  h.from_scalar = [](const Scalar& s) { return E::constant(s); };
  h.symbol = [](char c) {
    return (c == 'x' || c == 'X') ? E::x() : E::y();
  };
  h.multiply = [&cfg](const E& a, const E& b) { return multiply(cfg, a, b); };
  h.as_scalar = [](const E& a) { return a.as_scalar(); };
  h.invert = [](const E& a) -> std::optional<E> {
    if (auto s = a.as_scalar()) return E::constant(s->inverse());
    if constexpr (Tag::negative_x) {
      if (a.size() == 1 && a.terms().begin()->first.b == 0) {
        const auto& [m, c] = *a.terms().begin();
        return E::monomial(-m.a, 0, c.inverse());
      }
    }
    return std::nullopt;
  };
  return h;
}

EvalHooks<LaurentVector> laurent_hooks() {
  EvalHooks<LaurentVector> h;
  h.from_scalar = [](const Scalar& s) { return LaurentVector::basis(0, s); };
  h.symbol = [](char) { return LaurentVector::basis(1); };
  h.multiply = [](const LaurentVector& a, const LaurentVector& b) { return laurent_multiply(a, b); };
  h.as_scalar = [](const LaurentVector& a) -> std::optional<Scalar> {
    if (a.is_zero()) return Scalar();
    if (a.size() == 1 && a.terms().begin()->first == 0) return a.terms().begin()->second;
    return std::nullopt;
  };
  h.invert = [](const LaurentVector& a) -> std::optional<LaurentVector> {
    if (a.size() != 1) return std::nullopt;
    const auto& [i, c] = *a.terms().begin();
    return LaurentVector::basis(-i, c.inverse());
  };
  return h;
}

void require_category(const ExprPtr& e, Category cat) {
  // Re-parsing the printed form checks the letters against the category.
  (void)parse(print(e), cat);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_positive(const std::string& s, std::string_view what) {
  if (s.empty() || s.size() > 9 ||
      s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::SyntaxError, "expected a positive integer for " + std::string(what) +
                                            ", got '" + s + "'");
  }
  const std::int64_t v = std::stoll(s);
  if (v <= 0) {
    throw Error(ErrorCode::InvalidParam, std::string(what) + " must be positive");
  }
  return v;
}

// Splits `P[head; values]` into its two parts.
std::pair<std::vector<std::string>, std::vector<std::string>> split_rep(std::string_view text,
                                                                        char letter) {
  const std::string s = trim(text);
  if (s.size() < 4 || s[0] != letter || s[1] != '[' || s.back() != ']') {
    throw Error(ErrorCode::SyntaxError, std::string("expected ") + letter + "[...; ...], got '" +
                                            s + "'");
  }
  const std::string inner = s.substr(2, s.size() - 3);
  const auto semi = inner.find(';');
  if (semi == std::string::npos || inner.find(';', semi + 1) != std::string::npos) {
    throw Error(ErrorCode::SyntaxError, "expected exactly one ';' in '" + s + "'");
  }
  return {split(std::string_view(inner).substr(0, semi), ','),
          split(std::string_view(inner).substr(semi + 1), ',')};
}

}  // namespace

ExprPtr parse(std::string_view text, Category cat) { return Parser(text, cat).run(); }

std::string print(const ExprPtr& e) { return print_at(*e, 0); }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Symbol: return a.symbol == b.symbol;
    case Expr::Kind::Neg: return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

Scalar eval_scalar(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::Scalar);
  EvalHooks<Scalar> h;
  h.from_scalar = [](const Scalar& s) { return s; };
  h.symbol = [](char) -> Scalar { throw Error(ErrorCode::CategoryError, "not a scalar"); };
  h.multiply = [](const Scalar& a, const Scalar& b) { return a * b; };
  h.as_scalar = [](const Scalar& a) { return std::optional<Scalar>(a); };
  h.invert = [](const Scalar& a) { return std::optional<Scalar>(a.inverse()); };
  return eval_with(cfg, *e, h);
}

QPlaneElement eval_qplane(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::QPlane);
  return eval_with(cfg, *e, algebra_hooks<QPlaneTag>(cfg));
}

QWeylElement eval_qweyl(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::QWeyl);
  return eval_with(cfg, *e, algebra_hooks<QWeylTag>(cfg));
}

LocalizedElement eval_localized(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::Localized);
  return eval_with(cfg, *e, algebra_hooks<LocalizedTag>(cfg));
}

LaurentVector eval_laurent(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::Laurent);
  return eval_with(cfg, *e, laurent_hooks());
}

PolyVector eval_poly(const FieldConfig& cfg, const ExprPtr& e) {
  require_category(e, Category::Poly);
  LaurentVector v = eval_with(cfg, *e, laurent_hooks());
  if (!v.is_zero() && v.min_exponent() < 0) {
    throw Error(ErrorCode::CategoryError, "negative power of t in a poly expression");
  }
  return PolyVector::from_laurent(v);
}

Scalar parse_scalar(const FieldConfig& cfg, std::string_view text) {
  return eval_scalar(cfg, parse(text, Category::Scalar));
}
QPlaneElement parse_qplane(const FieldConfig& cfg, std::string_view text) {
  return eval_qplane(cfg, parse(text, Category::QPlane));
}
QWeylElement parse_qweyl(const FieldConfig& cfg, std::string_view text) {
  return eval_qweyl(cfg, parse(text, Category::QWeyl));
}
LocalizedElement parse_localized(const FieldConfig& cfg, std::string_view text) {
  return eval_localized(cfg, parse(text, Category::Localized));
}
LaurentVector parse_laurent(const FieldConfig& cfg, std::string_view text) {
  return eval_laurent(cfg, parse(text, Category::Laurent));
}
PolyVector parse_poly(const FieldConfig& cfg, std::string_view text) {
  return eval_poly(cfg, parse(text, Category::Poly));
}

FWeight parse_fweight(const FieldConfig& cfg, std::string_view text) {
  auto [head, values] = split_rep(text, 'V');
  if (head.size() != 2) throw Error(ErrorCode::SyntaxError, "expected V[m,n; ...]");
  const std::int64_t m = parse_positive(head[0], "m");
  const std::int64_t n = parse_positive(head[1], "n");
  std::vector<Scalar> base;
  for (const auto& v : values) base.push_back(parse_scalar(cfg, v));
  return FWeight::make(m, n, std::move(base));
}

GWeight parse_gweight(const FieldConfig& cfg, std::string_view text) {
  auto [head, values] = split_rep(text, 'W');
  if (head.size() != 1) throw Error(ErrorCode::SyntaxError, "expected W[n; ...]");
  const std::int64_t n = parse_positive(head[0], "n");
  std::vector<Scalar> base;
  for (const auto& v : values) base.push_back(parse_scalar(cfg, v));
  return make_gweight(n, std::move(base));
}

}  // namespace qrep
