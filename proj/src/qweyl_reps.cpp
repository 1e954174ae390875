#include "qrep/qweyl_reps.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

namespace {

LaurentVector shift(const LaurentVector& p, std::int64_t by) {
  return BasisEmbedding{by, 1}.apply(p);
}

// Y on V^{m,n}_f through the localization.
LaurentVector apply_y_extended(const FieldConfig& cfg, const LaurentVector& p, const FWeight& f,
                               const Scalar& inv_q1) {
  LaurentVector out;
  for (const auto& [i, c] : p.terms()) {
    out.add_term(i - f.m - f.n, c * inv_q1 * f_eval(cfg, f, i));
    out.add_term(i - f.n, -(c * inv_q1));
  }
  return out;
}

}  // namespace

LaurentVector extend_action_qweyl(const FieldConfig& cfg, const QWeylElement& u,
                                  const LaurentVector& p, const FWeight& f) {
  const Scalar inv_q1 = (cfg.q - 1).inverse();
  LaurentVector out;
  // Y^b p is shared by all monomials with the same b.
  std::vector<LaurentVector> y_powers{p};
  for (const auto& [mono, c] : u.terms()) {
    while (static_cast<std::int64_t>(y_powers.size()) <= mono.b) {
      y_powers.push_back(apply_y_extended(cfg, y_powers.back(), f, inv_q1));
    }
    out += c * shift(y_powers[static_cast<std::size_t>(mono.b)], mono.a * f.n);
  }
  return out;
}

LaurentVector act_localized(const FieldConfig& cfg, const LocalizedElement& u,
                            const LaurentVector& p, const FWeight& f) {
  LaurentVector out;
  for (const auto& [mono, c] : u.terms()) {
    for (const auto& [i, v] : p.terms()) {
      Scalar coeff = c * v;
      std::int64_t idx = i;
      for (std::int64_t s = 0; s < mono.b; ++s) {
        coeff *= f_eval(cfg, f, idx);
        idx -= f.m;
      }
      out.add_term(idx + mono.a * f.n, coeff);
    }
  }
  return out;
}

GrowthReport qweyl_not_weight_witness(const FieldConfig& cfg, const FWeight& f,
                                      std::int64_t depth) {
  GrowthReport report;
  const QWeylElement y_image = casimir(cfg);
  LaurentSpan span;
  LaurentVector v = LaurentVector::basis(0);
  for (std::int64_t l = 0; l <= depth; ++l) {
    report.orbit.push_back(v);
    report.supports.push_back(v.support());
    span.insert(v);
    if (l < depth) v = extend_action_qweyl(cfg, y_image, v, f);
  }
  report.span_dimension = span.dimension();
  return report;
}

bool iso_check_qweyl(const FieldConfig& cfg, const FWeight& f, const FWeight& g) {
  if (!is_irreducible(f) || !is_irreducible(g)) {
    throw Error(ErrorCode::NotCoprime, "iso_check_qweyl needs coprime (m, n) on both sides");
  }
  return iso_check(cfg, f, g);
}

std::string GWeight::to_string() const {
  std::ostringstream os;
  os << "W[" << n << ";";
  for (std::size_t i = 0; i < base.size(); ++i) os << (i == 0 ? " " : ", ") << base[i];
  os << "]";
  return os.str();
}

GWeight make_gweight(std::int64_t n, std::vector<Scalar> base) {
  if (n <= 0) throw Error(ErrorCode::InvalidParam, "n must be positive");
  if (static_cast<std::int64_t>(base.size()) != n) {
    throw Error(ErrorCode::InvalidParam, "expected " + std::to_string(n) + " base values, got " +
                                             std::to_string(base.size()));
  }
  return GWeight{n, std::move(base)};
}

void validate_w_params(const FieldConfig& cfg, std::int64_t m, std::int64_t n,
                       const std::function<Scalar(std::int64_t)>& g, std::int64_t window) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::InvalidParam, "m and n must be positive");
  for (std::int64_t i = -window; i <= window; ++i) {
    // YX.t^i = g(i+n) t^{i+n-m}, XY.t^i = g(i) t^{i-m+n}
    LaurentVector v;
    v.add_term(i + n - m, g(i + n));
    v.add_term(i + n - m, -(cfg.q * g(i)));
    v.add_term(i, -1);
    if (v.is_zero()) continue;
    if (m != n) {
      throw Error(ErrorCode::InvalidWParams,
                  "YX - qXY - 1 acts nonzero: m = " + std::to_string(m) +
                      " differs from n = " + std::to_string(n));
    }
    throw Error(ErrorCode::InvalidWParams,
                "g(i+n) != q g(i) + 1 at i = " + std::to_string(i));
  }
}

Scalar h_eval(const FieldConfig& cfg, const GWeight& g, std::int64_t i) {
  const auto r = static_cast<std::size_t>(floor_mod(i, g.n));
  return ((cfg.q - 1) * g.base[r] + 1) * q_pow(cfg, floor_div(i, g.n));
}

Scalar g_eval(const FieldConfig& cfg, const GWeight& g, std::int64_t i) {
  if (floor_div(i, g.n) == 0) return g.base[static_cast<std::size_t>(i)];
  return (h_eval(cfg, g, i) - 1) / (cfg.q - 1);
}

LaurentVector act_w(const FieldConfig& cfg, const QWeylElement& u, const LaurentVector& p,
                    const GWeight& g) {
  LaurentVector out;
  for (const auto& [mono, c] : u.terms()) {
    for (const auto& [i, v] : p.terms()) {
      Scalar coeff = c * v;
      std::int64_t idx = i;
      for (std::int64_t s = 0; s < mono.b && !coeff.is_zero(); ++s) {
        coeff *= g_eval(cfg, g, idx);
        idx -= g.n;
      }
      out.add_term(idx + mono.a * g.n, coeff);
    }
  }
  return out;
}

std::vector<WSummand> decompose_w(const FieldConfig& cfg, const GWeight& g) {
  std::vector<WSummand> out;
  for (std::int64_t k = 0; k < g.n; ++k) {
    out.push_back({make_gweight(1, {g_eval(cfg, g, k)}), BasisEmbedding{k, g.n}});
  }
  return out;
}

namespace {

void require_n1(const GWeight& g) {
  if (g.n != 1) {
    throw Error(ErrorCode::UnsupportedN,
                "operation needs n = 1 (decompose first); got n = " + std::to_string(g.n));
  }
}

}  // namespace

bool w_iso_check(const FieldConfig& cfg, const GWeight& g, const GWeight& g2) {
  require_n1(g);
  require_n1(g2);
  // g(0) = g'(i)  <=>  h(0) = h'(0) q^i
  const Scalar h = h_eval(cfg, g, 0);
  const Scalar h2 = h_eval(cfg, g2, 0);
  if (h2.is_zero() || h.is_zero()) return h2.is_zero() && h.is_zero();
  return log_q(cfg, h / h2).has_value();
}

IrreducibilityReport w_is_irreducible(const FieldConfig& cfg, const GWeight& g) {
  require_n1(g);
  IrreducibilityReport report;
  const Scalar h = h_eval(cfg, g, 0);
  if (h.is_zero()) {
    report.irreducible = false;
    report.witness = ReducibilityWitness::ConstantG;
    return report;
  }
  // g(0) = [i]_q  <=>  h(0) = q^i
  if (auto i = log_q(cfg, h)) {
    report.irreducible = false;
    report.witness = ReducibilityWitness::PolynomialTail;
    report.tail_start = -*i;
  }
  return report;
}

LaurentVector RestrictedAction::operator()(const QPlaneElement& u, const LaurentVector& p) const {
  LaurentVector out;
  const std::int64_t n = g_.n;
  for (const auto& [mono, c] : u.terms()) {
    for (const auto& [i, v] : p.terms()) {
      Scalar coeff = c * v;
      std::int64_t idx = i;
      if (via_ == QPlaneEmbedding::Sigma) {
        for (std::int64_t s = 0; s < mono.b; ++s) coeff *= h_eval(cfg_, g_, idx);
        idx += mono.a * n;
      } else {
        for (std::int64_t s = 0; s < mono.b && !coeff.is_zero(); ++s) {
          coeff *= g_eval(cfg_, g_, idx);
          idx -= n;
        }
        for (std::int64_t s = 0; s < mono.a; ++s) coeff *= h_eval(cfg_, g_, idx);
      }
      out.add_term(idx, coeff);
    }
  }
  return out;
}

RestrictedAction restrict_sigma(const FieldConfig& cfg, const GWeight& g) {
  return RestrictedAction(cfg, g, QPlaneEmbedding::Sigma);
}

RestrictedAction restrict_tau(const FieldConfig& cfg, const GWeight& g) {
  return RestrictedAction(cfg, g, QPlaneEmbedding::Tau);
}

namespace {

bool line_invariant(const RestrictedAction& act, std::int64_t j) {
  const auto v = LaurentVector::basis(j);
  for (const auto& gen : {QPlaneElement::x(), QPlaneElement::y()}) {
    const auto w = act(gen, v);
    if (!w.is_zero() && (w.size() != 1 || w.terms().begin()->first != j)) return false;
  }
  return true;
}

// A two-term vector spans an invariant line only if x maps it into its span.
bool pair_line_invariant(const RestrictedAction& act, std::int64_t j) {
  const auto v = LaurentVector::basis(j) + LaurentVector::basis(j + 1);
  LaurentSpan span;
  span.insert(v);
  return span.contains(act(QPlaneElement::x(), v)) && span.contains(act(QPlaneElement::y(), v));
}

}  // namespace

SocleReport socle_sigma(const FieldConfig& cfg, const GWeight& g, std::int64_t window) {
  require_n1(g);
  const auto act = restrict_sigma(cfg, g);
  SocleReport report;
  report.window_verified = true;
  for (std::int64_t j = -window; j <= window; ++j) {
    if (line_invariant(act, j) || pair_line_invariant(act, j)) report.window_verified = false;
  }
  return report;
}

SocleReport socle_tau(const FieldConfig& cfg, const GWeight& g, std::int64_t window) {
  require_n1(g);
  const auto act = restrict_tau(cfg, g);
  SocleReport report;
  const Scalar h = h_eval(cfg, g, 0);
  if (!h.is_zero()) {
    if (auto i = log_q(cfg, h)) report.lines.push_back(-*i);
  }
  report.window_verified = true;
  for (std::int64_t j = -window; j <= window; ++j) {
    const bool expected =
        std::find(report.lines.begin(), report.lines.end(), j) != report.lines.end();
    if (line_invariant(act, j) != expected) report.window_verified = false;
  }
  for (auto j : report.lines) {
    if (!line_invariant(act, j)) report.window_verified = false;
  }
  return report;
}

}  // namespace qrep
