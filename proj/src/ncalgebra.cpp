#include "qrep/ncalgebra.hpp"

#include <string>
#include <vector>

namespace qrep {

std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, label] : terms) {
    const bool negative = c.has_negative_sign();
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string coeff = mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    if (!label.empty() && !mag.is_constant() && !mag.den().is_one()) coeff = "(" + coeff + ")";
    if (label.empty()) {
      out += coeff;
    } else if (mag.is_one()) {
      out += label;
    } else {
      out += coeff + "*" + label;
    }
  }
  return out;
}

namespace {

std::string power_label(const char* letter, std::int64_t e) {
  std::string s = letter;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string monomial_label(const Monomial& m, const char* x, const char* y) {
  std::string s;
  if (m.a != 0) s += power_label(x, m.a);
  if (m.b != 0) {
    if (!s.empty()) s += "*";
    s += power_label(y, m.b);
  }
  return s;
}

template <class Tag>
std::string render(const AlgebraElement<Tag>& u, const char* x, const char* y) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    terms.emplace_back(it->second, monomial_label(it->first, x, y));
  }
  return format_sum(terms);
}

// Exhaustive rewriting of a word in X, Y with YX -> qXY + 1. Words without a
// redex have the shape X^a Y^b and are collected into the result.
QWeylElement normalize_word(const FieldConfig& cfg, const std::string& word,
                            RewriteStrategy strategy) {
  std::map<std::string, Scalar> pending;
  pending.emplace(word, Scalar(1));
  QWeylElement out;
  auto push = [&pending](std::string w, const Scalar& c) {
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Scalar& c = node.mapped();
    auto pos = strategy == RewriteStrategy::LeftmostFirst ? w.find("YX") : w.rfind("YX");
    if (pos == std::string::npos) {
      std::int64_t xs = 0;
      while (xs < static_cast<std::int64_t>(w.size()) && w[static_cast<std::size_t>(xs)] == 'X') ++xs;
      out.add_term({xs, static_cast<std::int64_t>(w.size()) - xs}, c);
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'X';
    swapped[pos + 1] = 'Y';
    std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
    push(std::move(swapped), c * cfg.q);
    push(std::move(dropped), c);
  }
  return out;
}

}  // namespace

std::string to_string(const QPlaneElement& u) { return render(u, "x", "y"); }
std::string to_string(const QWeylElement& u) { return render(u, "X", "Y"); }
std::string to_string(const LocalizedElement& u, const char* x, const char* y) {
  return render(u, x, y);
}

QPlaneElement qp_multiply(const FieldConfig& cfg, const QPlaneElement& u, const QPlaneElement& v) {
  QPlaneElement out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      // y^b x^c = q^{bc} x^c y^b
      out.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2 * q_pow(cfg, m1.b * m2.a));
    }
  }
  return out;
}

LocalizedElement loc_multiply(const FieldConfig& cfg, const LocalizedElement& u,
                              const LocalizedElement& v) {
  LocalizedElement out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      out.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2 * q_pow(cfg, m1.b * m2.a));
    }
  }
  return out;
}

QWeylElement qw_multiply(const FieldConfig& cfg, const QWeylElement& u, const QWeylElement& v,
                         RewriteStrategy strategy) {
  // Only the middle factor Y^b X^c of X^a Y^b X^c Y^d carries redexes.
  std::map<std::pair<std::int64_t, std::int64_t>, QWeylElement> middle;
  QWeylElement out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      auto key = std::make_pair(m1.b, m2.a);
      auto it = middle.find(key);
      if (it == middle.end()) {
        std::string word(static_cast<std::size_t>(m1.b), 'Y');
        word.append(static_cast<std::size_t>(m2.a), 'X');
        it = middle.emplace(key, normalize_word(cfg, word, strategy)).first;
      }
      const Scalar c = c1 * c2;
      for (const auto& [mid, cm] : it->second.terms()) {
        out.add_term({m1.a + mid.a, mid.b + m2.b}, c * cm);
      }
    }
  }
  return out;
}

LocalizedElement embed_qweyl(const FieldConfig& cfg, const QWeylElement& u) {
  const Scalar inv = (cfg.q - 1).inverse();
  const LocalizedElement y_image =
      LocalizedElement::monomial(-1, 1, inv) + LocalizedElement::monomial(-1, 0, -inv);
  std::vector<LocalizedElement> powers{LocalizedElement::constant(1)};
  LocalizedElement out;
  for (const auto& [m, c] : u.terms()) {
    while (static_cast<std::int64_t>(powers.size()) <= m.b) {
      powers.push_back(loc_multiply(cfg, powers.back(), y_image));
    }
    out += loc_multiply(cfg, LocalizedElement::monomial(m.a, 0, c),
                        powers[static_cast<std::size_t>(m.b)]);
  }
  return out;
}

namespace {

// Powers of (q-1)XY + 1, grown on demand.
class CasimirPowers {
 public:
  explicit CasimirPowers(const FieldConfig& cfg) : cfg_(cfg), powers_{QWeylElement::constant(1)} {}

  const QWeylElement& get(std::int64_t k) {
    while (static_cast<std::int64_t>(powers_.size()) <= k) {
      powers_.push_back(qw_multiply(cfg_, powers_.back(), casimir(cfg_)));
    }
    return powers_[static_cast<std::size_t>(k)];
  }

 private:
  const FieldConfig& cfg_;
  std::vector<QWeylElement> powers_;
};

}  // namespace

LocalizedElement localized_to_qweyl(const FieldConfig& cfg, const LocalizedElement& u) {
  CasimirPowers powers(cfg);
  LocalizedElement out;
  for (const auto& [m, c] : u.terms()) {
    for (const auto& [p, cp] : powers.get(m.b).terms()) {
      out.add_term({m.a + p.a, p.b}, c * cp);
    }
  }
  return out;
}

std::optional<QWeylElement> as_qweyl(const LocalizedElement& u) {
  QWeylElement out;
  for (const auto& [m, c] : u.terms()) {
    if (m.a < 0) return std::nullopt;
    out.add_term(m, c);
  }
  return out;
}

QWeylElement sigma(const FieldConfig& cfg, const QPlaneElement& u) {
  CasimirPowers powers(cfg);
  QWeylElement out;
  for (const auto& [m, c] : u.terms()) {
    for (const auto& [p, cp] : powers.get(m.b).terms()) {
      out.add_term({m.a + p.a, p.b}, c * cp);
    }
  }
  return out;
}

QWeylElement tau_embed(const FieldConfig& cfg, const QPlaneElement& u) {
  CasimirPowers powers(cfg);
  QWeylElement out;
  for (const auto& [m, c] : u.terms()) {
    for (const auto& [p, cp] : powers.get(m.a).terms()) {
      out.add_term({p.a, p.b + m.b}, c * cp);
    }
  }
  return out;
}

std::map<std::int64_t, QPlaneElement> grade_split(const QPlaneElement& u, std::int64_t m,
                                                  std::int64_t n) {
  std::map<std::int64_t, QPlaneElement> parts;
  for (const auto& [mono, c] : u.terms()) {
    parts[n * mono.a - m * mono.b].add_term(mono, c);
  }
  return parts;
}

QWeylElement casimir(const FieldConfig& cfg) {
  return QWeylElement::monomial(1, 1, cfg.q - 1) + QWeylElement::constant(1);
}

}  // namespace qrep
