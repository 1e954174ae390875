#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/laurent.hpp"
#include "qrep/ncalgebra.hpp"

namespace qrep {

/// Parameters of the representation V^{m,n}_f of the quantum plane on
/// F[t^{+-1}], where x.t^i = t^{i+n} and y.t^i = f(i) t^{i-m}. The function f
/// satisfies f(i+n) = q f(i), so it is determined by f(0), ..., f(n-1).
struct FWeight {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::vector<Scalar> base;

  // Checks m, n > 0, base.size() == n and all base values nonzero.
  static FWeight make(std::int64_t m, std::int64_t n, std::vector<Scalar> base);

  // `V[m,n; f0,...,f{n-1}]`
  std::string to_string() const;

  friend bool operator==(const FWeight&, const FWeight&) = default;
};

std::int64_t gcd_int(std::int64_t a, std::int64_t b);
// Floor division and the matching residue in [0, n).
std::int64_t floor_div(std::int64_t i, std::int64_t n);
std::int64_t floor_mod(std::int64_t i, std::int64_t n);

// f(i) = f(i mod n) q^{floor(i/n)}.
Scalar f_eval(const FieldConfig& cfg, const FWeight& f, std::int64_t i);

// f(i) = mu q^{floor(i/n)}.
FWeight make_f_floor(std::int64_t m, std::int64_t n, const Scalar& mu);

// The unique f with f(0) = lambda and f(km) = 1 for -(n-1) <= k <= -1.
FWeight make_f_lambda(const FieldConfig& cfg, std::int64_t m, std::int64_t n,
                      const Scalar& lambda);

LaurentVector act_qp(const FieldConfig& cfg, const QPlaneElement& u, const LaurentVector& p,
                     const FWeight& f);

// prod_{i=0}^{n-1} f(k - i m); requires gcd(m, n) = 1.
Scalar pi_f(const FieldConfig& cfg, const FWeight& f, std::int64_t k);

/// Isomorphism invariant of V^{m,n}_f for coprime (m, n): the class is
/// determined by (m, n) and Pi_f(0) up to a factor in <q>.
struct RepClassInvariant {
  std::int64_t m = 1;
  std::int64_t n = 1;
  Scalar pi0;
};

RepClassInvariant class_invariant(const FieldConfig& cfg, const FWeight& f);

// True when a and b lie in the same coset of <q>.
bool same_q_coset(const FieldConfig& cfg, const Scalar& a, const Scalar& b);

bool is_irreducible(const FWeight& f);

// Monomials whose composite (applied first to last) sends t^from to a
// nonzero multiple of t^to. Empty when from == to.
std::vector<Monomial> cyclicity_witness(const FWeight& f, std::int64_t from, std::int64_t to);

// x^m y^n - q^k Pi_f(0), the generator of ann(t^k).
QPlaneElement annihilator_generator(const FieldConfig& cfg, const FWeight& f, std::int64_t k);

/// One graded piece u_g = x^a y^b w(theta) of an element tested against
/// ann(t^k), with w divided by theta - c where c = q^k Pi_f(0).
struct AnnihilatorComponent {
  std::int64_t grade = 0;
  Monomial prefix;
  std::vector<Scalar> theta_coeffs;  // w, constant term first
  std::vector<Scalar> quotient;      // w = (theta - c) * quotient + remainder
  Scalar remainder;
};

struct AnnihilatorResult {
  bool annihilates = false;
  Scalar theta_root;
  std::vector<AnnihilatorComponent> components;
};

AnnihilatorResult in_annihilator(const FieldConfig& cfg, const QPlaneElement& u,
                                 const FWeight& f, std::int64_t k);

bool iso_check(const FieldConfig& cfg, const FWeight& f, const FWeight& g);

/// Basis embedding t^i -> t^{offset + stride*i}.
struct BasisEmbedding {
  std::int64_t offset = 0;
  std::int64_t stride = 1;

  std::int64_t image(std::int64_t i) const { return offset + stride * i; }
  LaurentVector apply(const LaurentVector& p) const;
};

struct Summand {
  FWeight weight;
  BasisEmbedding embedding;
};

// V^{m,n}_f as the sum of V^{m/d,n/d}_{f_k}, f_k(i) = f(k + i d), d = gcd(m, n).
std::vector<Summand> decompose(const FieldConfig& cfg, const FWeight& f);

struct WeightReport {
  bool is_weight = false;
  // m == n: (i, f(i)) with H.t^i = f(i) t^i for |i| <= window.
  std::vector<std::pair<std::int64_t, Scalar>> eigenvalues;
  // m != n: H^l.t^0 for l = 0..window, each a nonzero multiple of t^{l(n-m)}.
  std::vector<LaurentVector> orbit;
};

WeightReport is_weight_qp(const FieldConfig& cfg, const FWeight& f, std::int64_t window = 20);

struct WhittakerReport {
  bool has_eigenvector = false;
  std::size_t vectors_checked = 0;
};

// x and y shift supports by +n and -m, so no nonzero vector is an
// eigenvector; checked on basis vectors and two-term vectors in the window.
WhittakerReport whittaker_eigenvector_probe(const FieldConfig& cfg, const FWeight& f,
                                            std::int64_t window);

}  // namespace qrep
