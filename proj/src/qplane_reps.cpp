#include "qrep/qplane_reps.hpp"

#include <numeric>
#include <sstream>

namespace qrep {

FWeight FWeight::make(std::int64_t m, std::int64_t n, std::vector<Scalar> base) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::InvalidParam, "m and n must be positive");
  if (static_cast<std::int64_t>(base.size()) != n) {
    throw Error(ErrorCode::InvalidParam, "expected " + std::to_string(n) + " base values, got " +
                                             std::to_string(base.size()));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].is_zero()) {
      throw Error(ErrorCode::InvalidParam, "f(" + std::to_string(i) + ") must be nonzero");
    }
  }
  return FWeight{m, n, std::move(base)};
}

std::string FWeight::to_string() const {
  std::ostringstream os;
  os << "V[" << m << "," << n << ";";
  for (std::size_t i = 0; i < base.size(); ++i) os << (i == 0 ? " " : ", ") << base[i];
  os << "]";
  return os.str();
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t floor_div(std::int64_t i, std::int64_t n) {
  std::int64_t d = i / n;
  if ((i % n != 0) && ((i < 0) != (n < 0))) --d;
  return d;
}

std::int64_t floor_mod(std::int64_t i, std::int64_t n) { return i - n * floor_div(i, n); }

Scalar f_eval(const FieldConfig& cfg, const FWeight& f, std::int64_t i) {
  const auto r = static_cast<std::size_t>(floor_mod(i, f.n));
  return f.base[r] * q_pow(cfg, floor_div(i, f.n));
}

FWeight make_f_floor(std::int64_t m, std::int64_t n, const Scalar& mu) {
  if (mu.is_zero()) throw Error(ErrorCode::InvalidParam, "mu must be nonzero");
  if (n <= 0) throw Error(ErrorCode::InvalidParam, "n must be positive");
  return FWeight::make(m, n, std::vector<Scalar>(static_cast<std::size_t>(n), mu));
}

namespace {

void require_coprime(std::int64_t m, std::int64_t n) {
  if (gcd_int(m, n) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                           ") != 1");
  }
}

}  // namespace

FWeight make_f_lambda(const FieldConfig& cfg, std::int64_t m, std::int64_t n,
                      const Scalar& lambda) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::InvalidParam, "m and n must be positive");
  require_coprime(m, n);
  if (lambda.is_zero()) throw Error(ErrorCode::InvalidParam, "lambda must be nonzero");
  // k*m for k = 0, -1, ..., -(n-1) runs through every residue mod n.
  std::vector<Scalar> base(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k > -n; --k) {
    const std::int64_t j = k * m;
    const Scalar value = (k == 0) ? lambda : Scalar(1);
    base[static_cast<std::size_t>(floor_mod(j, n))] = value * q_pow(cfg, -floor_div(j, n));
  }
  return FWeight::make(m, n, std::move(base));
}

LaurentVector act_qp(const FieldConfig& cfg, const QPlaneElement& u, const LaurentVector& p,
                     const FWeight& f) {
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

Scalar pi_f(const FieldConfig& cfg, const FWeight& f, std::int64_t k) {
  require_coprime(f.m, f.n);
  Scalar prod = 1;
  for (std::int64_t i = 0; i < f.n; ++i) prod *= f_eval(cfg, f, k - i * f.m);
  return prod;
}

RepClassInvariant class_invariant(const FieldConfig& cfg, const FWeight& f) {
  return {f.m, f.n, pi_f(cfg, f, 0)};
}

bool same_q_coset(const FieldConfig& cfg, const Scalar& a, const Scalar& b) {
  return log_q(cfg, a / b).has_value();
}

bool is_irreducible(const FWeight& f) { return gcd_int(f.m, f.n) == 1; }

std::vector<Monomial> cyclicity_witness(const FWeight& f, std::int64_t from, std::int64_t to) {
  require_coprime(f.m, f.n);
  const std::int64_t delta = to - from;
  if (delta == 0) return {};
  // Extended Euclid: s*n + t*m = 1, so a = s*delta, b = -t*delta solves
  // n*a - m*b = delta. All solutions are (a + j*m, b + j*n).
  std::int64_t old_r = f.n, r = f.m, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
    old_t -= quot * t;
    std::swap(old_t, t);
  }
  std::int64_t a = old_s * delta;
  std::int64_t b = -old_t * delta;
  // Smallest j with a + j*m > 0 and b + j*n > 0.
  const std::int64_t ja = floor_div(-a, f.m) + 1;
  const std::int64_t jb = floor_div(-b, f.n) + 1;
  const std::int64_t j = std::max(ja, jb);
  return {Monomial{a + j * f.m, b + j * f.n}};
}

QPlaneElement annihilator_generator(const FieldConfig& cfg, const FWeight& f, std::int64_t k) {
  const Scalar root = q_pow(cfg, k) * pi_f(cfg, f, 0);
  return QPlaneElement::monomial(f.m, f.n) - QPlaneElement::constant(root);
}

AnnihilatorResult in_annihilator(const FieldConfig& cfg, const QPlaneElement& u,
                                 const FWeight& f, std::int64_t k) {
  AnnihilatorResult result;
  result.theta_root = q_pow(cfg, k) * pi_f(cfg, f, 0);
  result.annihilates = act_qp(cfg, u, LaurentVector::basis(k), f).is_zero();

  const std::int64_t m = f.m, n = f.n;
  for (const auto& [grade, part] : grade_split(u, m, n)) {
    AnnihilatorComponent comp;
    comp.grade = grade;
    // Monomials of one grade differ by multiples of (m, n); the one with the
    // smallest x-exponent is the common left factor.
    comp.prefix = part.terms().begin()->first;
    const auto [a0, b0] = comp.prefix;
    for (const auto& [mono, c] : part.terms()) {
      const std::int64_t xi = (mono.a - a0) / m;
      // x^{a0} y^{b0} theta^xi = q^{b0*xi*m + m*n*xi*(xi-1)/2} x^a y^b
      const std::int64_t shift = b0 * xi * m + m * n * xi * (xi - 1) / 2;
      if (static_cast<std::int64_t>(comp.theta_coeffs.size()) <= xi) {
        comp.theta_coeffs.resize(static_cast<std::size_t>(xi + 1));
      }
      comp.theta_coeffs[static_cast<std::size_t>(xi)] = c * q_pow(cfg, -shift);
    }
    // Synthetic division by theta - root.
    const auto& w = comp.theta_coeffs;
    Scalar carry;
    comp.quotient.assign(w.size() > 1 ? w.size() - 1 : 0, Scalar());
    for (std::size_t i = w.size(); i-- > 0;) {
      carry = carry * result.theta_root + w[i];
      if (i > 0) comp.quotient[i - 1] = carry;
    }
    comp.remainder = carry;
    result.components.push_back(std::move(comp));
  }
  return result;
}

namespace {

std::vector<Scalar> summand_invariants(const FieldConfig& cfg, const FWeight& f) {
  std::vector<Scalar> out;
  for (const auto& s : decompose(cfg, f)) out.push_back(pi_f(cfg, s.weight, 0));
  return out;
}

}  // namespace

bool iso_check(const FieldConfig& cfg, const FWeight& f, const FWeight& g) {
  if (f.m != g.m || f.n != g.n) return false;
  if (gcd_int(f.m, f.n) == 1) return same_q_coset(cfg, pi_f(cfg, g, 0), pi_f(cfg, f, 0));
  // Semisimple case: match irreducible summands as multisets of classes.
  auto lhs = summand_invariants(cfg, f);
  auto rhs = summand_invariants(cfg, g);
  std::vector<bool> used(rhs.size(), false);
  for (const auto& inv : lhs) {
    bool matched = false;
    for (std::size_t j = 0; j < rhs.size() && !matched; ++j) {
      if (!used[j] && same_q_coset(cfg, inv, rhs[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

LaurentVector BasisEmbedding::apply(const LaurentVector& p) const {
  LaurentVector out;
  for (const auto& [i, c] : p.terms()) out.add_term(image(i), c);
  return out;
}

std::vector<Summand> decompose(const FieldConfig& cfg, const FWeight& f) {
  const std::int64_t d = gcd_int(f.m, f.n);
  std::vector<Summand> out;
  for (std::int64_t k = 0; k < d; ++k) {
    std::vector<Scalar> base;
    for (std::int64_t i = 0; i < f.n / d; ++i) base.push_back(f_eval(cfg, f, k + i * d));
    out.push_back({FWeight::make(f.m / d, f.n / d, std::move(base)), BasisEmbedding{k, d}});
  }
  return out;
}

WeightReport is_weight_qp(const FieldConfig& cfg, const FWeight& f, std::int64_t window) {
  WeightReport report;
  report.is_weight = f.m == f.n;
  const auto h = QPlaneElement::monomial(1, 1);
  if (report.is_weight) {
    for (std::int64_t i = -window; i <= window; ++i) {
      report.eigenvalues.emplace_back(i, f_eval(cfg, f, i));
    }
    return report;
  }
  LaurentVector v = LaurentVector::basis(0);
  for (std::int64_t l = 0; l <= window; ++l) {
    report.orbit.push_back(v);
    v = act_qp(cfg, h, v, f);
  }
  return report;
}

namespace {

bool proportional(const LaurentVector& v, const LaurentVector& w) {
  if (v.size() != w.size() || v.is_zero()) return false;
  auto it = v.terms().begin();
  auto jt = w.terms().begin();
  if (it->first != jt->first) return false;
  const Scalar ratio = jt->second / it->second;
  for (; it != v.terms().end(); ++it, ++jt) {
    if (it->first != jt->first || !(jt->second == ratio * it->second)) return false;
  }
  return true;
}

}  // namespace

WhittakerReport whittaker_eigenvector_probe(const FieldConfig& cfg, const FWeight& f,
                                            std::int64_t window) {
  WhittakerReport report;
  const auto x = QPlaneElement::x();
  const auto y = QPlaneElement::y();
  auto check = [&](const LaurentVector& v) {
    ++report.vectors_checked;
    if (proportional(v, act_qp(cfg, x, v, f)) || proportional(v, act_qp(cfg, y, v, f))) {
      report.has_eigenvector = true;
    }
  };
  for (std::int64_t i = -window; i <= window; ++i) {
    check(LaurentVector::basis(i));
    for (std::int64_t j = i + 1; j <= window; ++j) {
      check(LaurentVector::basis(i) + LaurentVector::basis(j, 2));
    }
  }
  return report;
}

}  // namespace qrep
