#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/laurent.hpp"
#include "qrep/ncalgebra.hpp"
#include "qrep/qplane_reps.hpp"

namespace qrep {

// --- V^{m,n}_f viewed as a representation of A_1(q) -------------------------

// X.t^i = t^{i+n}, Y.t^i = (q-1)^{-1} (f(i) t^{i-m-n} - t^{i-n}).
LaurentVector extend_action_qweyl(const FieldConfig& cfg, const QWeylElement& u,
                                  const LaurentVector& p, const FWeight& f);

// Action of the localization F_q[x^{+-1}, y] on V^{m,n}_f (x^{-1}.t^i = t^{i-n}).
LaurentVector act_localized(const FieldConfig& cfg, const LocalizedElement& u,
                            const LaurentVector& p, const FWeight& f);

struct GrowthReport {
  std::vector<LaurentVector> orbit;  // y^l.t^0, y = (q-1)XY + 1
  std::vector<std::vector<std::int64_t>> supports;
  std::size_t span_dimension = 0;
};

GrowthReport qweyl_not_weight_witness(const FieldConfig& cfg, const FWeight& f,
                                      std::int64_t depth);

// Requires coprime parameters on both sides.
bool iso_check_qweyl(const FieldConfig& cfg, const FWeight& f, const FWeight& g);

// --- The weight family W^n_g -------------------------------------------------

/// W^n_g: X.t^i = t^{i+n}, Y.t^i = g(i) t^{i-n}, with g(i+n) = q g(i) + 1.
/// Values of g may be zero.
struct GWeight {
  std::int64_t n = 1;
  std::vector<Scalar> base;

  // `W[n; g0,...,g{n-1}]`
  std::string to_string() const;

  friend bool operator==(const GWeight&, const GWeight&) = default;
};

GWeight make_gweight(std::int64_t n, std::vector<Scalar> base);

// Throws Error(InvalidWParams) unless X.t^i = t^{i+n}, Y.t^i = g(i) t^{i-m}
// satisfies YX - qXY - 1 = 0 on every t^i with |i| <= window.
void validate_w_params(const FieldConfig& cfg, std::int64_t m, std::int64_t n,
                       const std::function<Scalar(std::int64_t)>& g, std::int64_t window = 20);

// h(i) = (q-1) g(i) + 1, which satisfies h(i+n) = q h(i).
Scalar h_eval(const FieldConfig& cfg, const GWeight& g, std::int64_t i);
Scalar g_eval(const FieldConfig& cfg, const GWeight& g, std::int64_t i);

LaurentVector act_w(const FieldConfig& cfg, const QWeylElement& u, const LaurentVector& p,
                    const GWeight& g);

struct WSummand {
  GWeight weight;  // n = 1
  BasisEmbedding embedding;
};

std::vector<WSummand> decompose_w(const FieldConfig& cfg, const GWeight& g);

// n = 1 on both sides: true iff g(0) = g'(i) for some i.
bool w_iso_check(const FieldConfig& cfg, const GWeight& g, const GWeight& g2);

enum class ReducibilityWitness {
  None,
  PolynomialTail,  // t^{tail_start} F[t]
  ConstantG,       // (t - 1) F[t^{+-1}]
};

struct IrreducibilityReport {
  bool irreducible = true;
  ReducibilityWitness witness = ReducibilityWitness::None;
  std::int64_t tail_start = 0;
};

IrreducibilityReport w_is_irreducible(const FieldConfig& cfg, const GWeight& g);

enum class QPlaneEmbedding { Sigma, Tau };

/// W^n_g restricted to the quantum plane through sigma or tau.
class RestrictedAction {
 public:
  RestrictedAction(FieldConfig cfg, GWeight g, QPlaneEmbedding via)
      : cfg_(std::move(cfg)), g_(std::move(g)), via_(via) {}

  LaurentVector operator()(const QPlaneElement& u, const LaurentVector& p) const;

  QPlaneEmbedding via() const noexcept { return via_; }
  const GWeight& weight() const noexcept { return g_; }

 private:
  FieldConfig cfg_;
  GWeight g_;
  QPlaneEmbedding via_;
};

// x.t^i = t^{i+n}, y.t^i = h(i) t^i.
RestrictedAction restrict_sigma(const FieldConfig& cfg, const GWeight& g);
// x.t^i = h(i) t^i, y.t^i = g(i) t^{i-n}.
RestrictedAction restrict_tau(const FieldConfig& cfg, const GWeight& g);

/// Lines F t^i that are irreducible subrepresentations of the restriction.
struct SocleReport {
  std::vector<std::int64_t> lines;
  // Every basis line in the window was tested; only listed lines are invariant.
  bool window_verified = false;
};

SocleReport socle_sigma(const FieldConfig& cfg, const GWeight& g, std::int64_t window = 20);
SocleReport socle_tau(const FieldConfig& cfg, const GWeight& g, std::int64_t window = 20);

}  // namespace qrep
