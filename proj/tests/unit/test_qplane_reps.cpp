#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qrep/qplane_reps.hpp"

using namespace qrep;

namespace {

using LV = LaurentVector;
using QP = QPlaneElement;

const FieldConfig kQ2 = FieldConfig::rationals(2);
const FieldConfig kGeneric = FieldConfig::generic();

FWeight ones23() { return FWeight::make(2, 3, {1, 1, 1}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::SyntaxError;
}

bool nonzero_multiple_of_basis(const LV& v, std::int64_t i) {
  return v.size() == 1 && v.terms().begin()->first == i;
}

}  // namespace

TEST(FWeight, Validation) {
  EXPECT_EQ(code_of([] { (void)FWeight::make(0, 1, {1}); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of([] { (void)FWeight::make(1, 2, {1}); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of([] { (void)FWeight::make(1, 2, {1, 0}); }), ErrorCode::InvalidParam);
  EXPECT_EQ(ones23().to_string(), "V[2,3; 1, 1, 1]");
}

TEST(FEval, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    EXPECT_EQ(f_eval(cfg, ones23(), 4), cfg.q);
    const FWeight f = FWeight::make(3, 3, {5, cfg.q, -2});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(f_eval(cfg, f, i), f.base[i]);
    const Scalar lambda = Scalar::rational(3, 7);
    EXPECT_EQ(f_eval(cfg, FWeight::make(1, 1, {lambda}), -2), lambda * q_pow(cfg, -2));
  }
}

TEST(FEval, RecurrenceAndWalkOracle) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(41);
    for (int trial = 0; trial < 30; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5);
      for (std::int64_t i = -30; i <= 30; ++i) {
        EXPECT_EQ(f_eval(cfg, f, i + f.n), cfg.q * f_eval(cfg, f, i));
        EXPECT_EQ(f_eval(cfg, f, i), oracle::f_walk(cfg, f, i));
      }
    }
  }
}

TEST(MakeFFloor, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    const Scalar mu = Scalar::rational(-2, 3);
    const FWeight f = make_f_floor(1, 2, mu);
    EXPECT_EQ(f.base, (std::vector<Scalar>{mu, mu}));
    EXPECT_EQ(f_eval(cfg, f, 2), mu * cfg.q);
    EXPECT_EQ(f_eval(cfg, f, -1), mu * cfg.q.inverse());
  }
  EXPECT_EQ(code_of([] { (void)make_f_floor(1, 2, 0); }), ErrorCode::InvalidParam);
}

TEST(MakeFLambda, Examples) {
  const FWeight f = make_f_lambda(kQ2, 2, 3, 5);
  EXPECT_EQ(f.base, (std::vector<Scalar>{5, 2, 4}));
  EXPECT_EQ(f_eval(kQ2, f, -2), Scalar(1));
  EXPECT_EQ(f_eval(kQ2, f, -4), Scalar(1));
  EXPECT_EQ(pi_f(kQ2, f, 0), Scalar(5));
  const Scalar lambda = kGeneric.q + 3;
  const FWeight g = make_f_lambda(kGeneric, 1, 1, lambda);
  EXPECT_EQ(g.base, std::vector<Scalar>{lambda});
  for (int i = -5; i <= 5; ++i) EXPECT_EQ(f_eval(kGeneric, g, i), lambda * q_pow(kGeneric, i));
  EXPECT_EQ(code_of([] { (void)make_f_lambda(kQ2, 2, 4, 1); }), ErrorCode::NotCoprime);
}

TEST(MakeFLambda, HitsPrescribedInvariant) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(42);
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t m = gen.integer(1, 6), n = gen.integer(1, 6);
      if (gcd_int(m, n) != 1) continue;
      const Scalar lambda = gen.nonzero(cfg);
      const FWeight f = make_f_lambda(cfg, m, n, lambda);
      EXPECT_EQ(pi_f(cfg, f, 0), lambda);
      EXPECT_EQ(f_eval(cfg, f, 0), lambda);
      for (std::int64_t k = -(n - 1); k <= -1; ++k) EXPECT_TRUE(f_eval(cfg, f, k * m).is_one());
    }
  }
}

TEST(ActQp, Examples) {
  EXPECT_EQ(act_qp(kQ2, QP::y(), LV::basis(4), ones23()), LV::basis(2, 2));
  EXPECT_EQ(act_qp(kQ2, QP::x(), LV::basis(-1), ones23()), LV::basis(2));
}

TEST(ActQp, RelationAndRepresentationLaw) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(43);
    for (int trial = 0; trial < 100; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5);
      const LV p = gen.laurent(cfg, -10, 10, 4);
      auto letter = [&](char c, const LV& v) { return oracle::qp_letter(cfg, c, v, f); };
      EXPECT_TRUE((oracle::apply_word("yx", p, letter) - cfg.q * oracle::apply_word("xy", p, letter))
                      .is_zero());
      const auto u = gen.element<QPlaneTag>(cfg, 3, 3);
      const auto v = gen.element<QPlaneTag>(cfg, 3, 3);
      EXPECT_EQ(act_qp(cfg, qp_multiply(cfg, u, v), p, f), act_qp(cfg, u, act_qp(cfg, v, p, f), f));
      EXPECT_EQ(act_qp(cfg, u, p, f), oracle::qp_word(cfg, u, p, f));
    }
  }
}

TEST(PiF, Examples) {
  EXPECT_EQ(pi_f(kQ2, ones23(), 0), Scalar::rational(1, 8));
  EXPECT_EQ(pi_f(kQ2, ones23(), 3), Scalar(1));
  EXPECT_EQ(pi_f(kGeneric, ones23(), 0), q_pow(kGeneric, -3));
  EXPECT_EQ(code_of([] { (void)pi_f(kQ2, FWeight::make(2, 2, {1, 1}), 0); }),
            ErrorCode::NotCoprime);
}

TEST(PiF, ScalesByQPower) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(44);
    for (int trial = 0; trial < 30; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5, true);
      for (std::int64_t k = -10; k <= 10; ++k) {
        Scalar direct = 1;
        for (std::int64_t i = 0; i < f.n; ++i) direct *= oracle::f_walk(cfg, f, k - i * f.m);
        EXPECT_EQ(pi_f(cfg, f, k), direct);
        EXPECT_EQ(pi_f(cfg, f, k), q_pow(cfg, k) * pi_f(cfg, f, 0));
      }
    }
  }
}

TEST(IsIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible(ones23()));
  EXPECT_FALSE(is_irreducible(FWeight::make(2, 2, {1, 1})));
  EXPECT_TRUE(is_irreducible(FWeight::make(1, 1, {1})));
}

TEST(Cyclicity, Examples) {
  EXPECT_EQ(cyclicity_witness(ones23(), 0, 1), (std::vector<Monomial>{{1, 1}}));
  EXPECT_TRUE(cyclicity_witness(ones23(), 0, 0).empty());
  EXPECT_EQ(cyclicity_witness(ones23(), 0, -1), (std::vector<Monomial>{{1, 2}}));
  EXPECT_EQ(code_of([] { (void)cyclicity_witness(FWeight::make(2, 2, {1, 1}), 0, 1); }),
            ErrorCode::NotCoprime);
}

TEST(Cyclicity, WitnessReachesTarget) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(45);
    for (int trial = 0; trial < 6; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5, true);
      for (std::int64_t from = -10; from <= 10; ++from) {
        for (std::int64_t to = -10; to <= 10; ++to) {
          LV v = LV::basis(from);
          for (const auto& m : cyclicity_witness(f, from, to)) {
            EXPECT_GT(m.a, 0);
            EXPECT_GT(m.b, 0);
            v = act_qp(cfg, QP::monomial(m.a, m.b), v, f);
          }
          EXPECT_TRUE(nonzero_multiple_of_basis(v, to));
        }
      }
    }
  }
}

TEST(Annihilator, GeneratorExamples) {
  EXPECT_EQ(annihilator_generator(kQ2, ones23(), 0),
            QP::monomial(2, 3) - QP::constant(Scalar::rational(1, 8)));
  EXPECT_EQ(annihilator_generator(kQ2, ones23(), 1),
            QP::monomial(2, 3) - QP::constant(Scalar::rational(1, 4)));
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(46);
    for (int trial = 0; trial < 20; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5, true);
      for (std::int64_t k = -5; k <= 5; ++k) {
        EXPECT_TRUE(act_qp(cfg, annihilator_generator(cfg, f, k), LV::basis(k), f).is_zero());
      }
    }
  }
}

TEST(Annihilator, MembershipExamples) {
  for (const auto& cfg : oracle::both_fields()) {
    const FWeight f = ones23();
    const QP theta = annihilator_generator(cfg, f, 0);
    EXPECT_TRUE(in_annihilator(cfg, theta, f, 0).annihilates);
    EXPECT_TRUE(in_annihilator(cfg, qp_multiply(cfg, QP::x(), theta), f, 0).annihilates);
    EXPECT_FALSE(in_annihilator(cfg, QP::x(), f, 0).annihilates);
  }
}

TEST(Annihilator, CertificateMatchesAction) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(47);
    for (int trial = 0; trial < 60; ++trial) {
      const FWeight f = gen.fweight(cfg, 4, 4, true);
      const std::int64_t k = gen.integer(-5, 5);
      const QP gen_k = annihilator_generator(cfg, f, k);
      QP u = qp_multiply(cfg, gen.element<QPlaneTag>(cfg, 3, 3), gen_k);
      if (gen.coin()) u += gen.element<QPlaneTag>(cfg, 2, 3);
      const auto result = in_annihilator(cfg, u, f, k);
      EXPECT_EQ(result.annihilates, act_qp(cfg, u, LV::basis(k), f).is_zero());
      bool all_divisible = true;
      for (const auto& comp : result.components) {
        if (!comp.remainder.is_zero()) all_divisible = false;
        // (theta - c) * quotient + remainder rebuilds w.
        std::vector<Scalar> rebuilt(comp.theta_coeffs.size());
        for (std::size_t i = 0; i < comp.quotient.size(); ++i) {
          rebuilt[i + 1] += comp.quotient[i];
          rebuilt[i] -= result.theta_root * comp.quotient[i];
        }
        rebuilt[0] += comp.remainder;
        EXPECT_EQ(rebuilt, comp.theta_coeffs);
      }
      EXPECT_EQ(all_divisible, result.annihilates);
    }
  }
}

TEST(IsoCheck, Examples) {
  EXPECT_TRUE(iso_check(kQ2, make_f_lambda(kQ2, 2, 3, 5), make_f_lambda(kQ2, 2, 3, 20)));
  EXPECT_FALSE(iso_check(kQ2, make_f_lambda(kQ2, 2, 3, 5), make_f_lambda(kQ2, 2, 3, 6)));
  EXPECT_FALSE(iso_check(kQ2, ones23(), FWeight::make(3, 2, {1, 1})));
  EXPECT_TRUE(iso_check(kQ2, ones23(), ones23()));
  const Scalar q = kGeneric.q;
  EXPECT_TRUE(iso_check(kGeneric, make_f_lambda(kGeneric, 1, 2, q + 1),
                        make_f_lambda(kGeneric, 1, 2, (q + 1) * q_pow(kGeneric, -4))));
  EXPECT_FALSE(iso_check(kGeneric, make_f_lambda(kGeneric, 1, 2, q + 1),
                         make_f_lambda(kGeneric, 1, 2, 2 * (q + 1))));
}

TEST(IsoCheck, NonCoprimeMatchesSummands) {
  // Same summands in swapped order.
  const FWeight f = FWeight::make(2, 2, {1, 3});
  const FWeight g = FWeight::make(2, 2, {3, 1});
  EXPECT_TRUE(iso_check(kQ2, f, g));
  EXPECT_TRUE(iso_check(kQ2, f, FWeight::make(2, 2, {4, 3})));
  EXPECT_FALSE(iso_check(kQ2, f, FWeight::make(2, 2, {1, 5})));
}

TEST(IsoCheck, EquivalenceRelation) {
  for (const auto& cfg : oracle::both_fields()) {
    std::vector<FWeight> set;
    for (const Scalar& lambda : {Scalar(1), Scalar(2), Scalar(3), Scalar(6), cfg.q * 3, Scalar(4)}) {
      set.push_back(make_f_lambda(cfg, 1, 2, lambda));
    }
    set.push_back(FWeight::make(1, 2, {1, 2}));
    set.push_back(FWeight::make(2, 1, {1}));
    for (const auto& a : set) {
      EXPECT_TRUE(iso_check(cfg, a, a));
      for (const auto& b : set) {
        EXPECT_EQ(iso_check(cfg, a, b), iso_check(cfg, b, a));
        for (const auto& c : set) {
          if (iso_check(cfg, a, b) && iso_check(cfg, b, c)) EXPECT_TRUE(iso_check(cfg, a, c));
        }
      }
    }
  }
}

TEST(Decompose, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    const Scalar mu0 = 3, mu1 = cfg.q + 2;
    const auto parts = decompose(cfg, FWeight::make(2, 2, {mu0, mu1}));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].weight, FWeight::make(1, 1, {mu0}));
    EXPECT_EQ(parts[1].weight, FWeight::make(1, 1, {mu1}));
    EXPECT_EQ(parts[1].embedding.image(3), 7);

    const auto single = decompose(cfg, ones23());
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].weight, ones23());
    EXPECT_EQ(single[0].embedding.image(5), 5);

    const auto two = decompose(cfg, FWeight::make(2, 4, {1, 2, 3, 4}));
    ASSERT_EQ(two.size(), 2u);
    for (const auto& s : two) {
      EXPECT_EQ(s.weight.m, 1);
      EXPECT_EQ(s.weight.n, 2);
    }
  }
}

TEST(Decompose, IntertwinesAndCovers) {
  const FieldConfig& cfg = kQ2;
  oracle::Gen gen(48);
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      std::vector<Scalar> base;
      for (std::int64_t i = 0; i < n; ++i) base.push_back(gen.nonzero(cfg));
      const FWeight f = FWeight::make(m, n, base);
      std::set<std::int64_t> covered;
      for (const auto& s : decompose(cfg, f)) {
        for (std::int64_t i = -20; i <= 20; ++i) {
          const LV v = LV::basis(i);
          for (const auto& g : {QP::x(), QP::y()}) {
            EXPECT_EQ(s.embedding.apply(act_qp(cfg, g, v, s.weight)),
                      act_qp(cfg, g, s.embedding.apply(v), f));
          }
          covered.insert(s.embedding.image(i));
        }
      }
      for (std::int64_t j = -20; j <= 20; ++j) EXPECT_TRUE(covered.count(j)) << j;
    }
  }
}

TEST(Weight, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    const Scalar lambda = 7;
    const auto r = is_weight_qp(cfg, FWeight::make(1, 1, {lambda}), 5);
    EXPECT_TRUE(r.is_weight);
    for (const auto& [i, ev] : r.eigenvalues) EXPECT_EQ(ev, lambda * q_pow(cfg, i));

    const auto s = is_weight_qp(cfg, FWeight::make(1, 2, {1, 1}), 8);
    EXPECT_FALSE(s.is_weight);
    LaurentSpan span;
    for (std::size_t l = 0; l < s.orbit.size(); ++l) {
      EXPECT_TRUE(nonzero_multiple_of_basis(s.orbit[l], static_cast<std::int64_t>(l)));
      span.insert(s.orbit[l]);
      EXPECT_EQ(span.dimension(), l + 1);
    }
    EXPECT_TRUE(is_weight_qp(cfg, FWeight::make(3, 3, {1, 2, 3}), 3).is_weight);
  }
}

TEST(Weight, EigenvectorsWhenMEqualsN) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(49);
    for (std::int64_t n = 1; n <= 4; ++n) {
      std::vector<Scalar> base;
      for (std::int64_t i = 0; i < n; ++i) base.push_back(gen.nonzero(cfg));
      const FWeight f = FWeight::make(n, n, base);
      for (std::int64_t i = -20; i <= 20; ++i) {
        EXPECT_EQ(act_qp(cfg, QP::monomial(1, 1), LV::basis(i), f), LV::basis(i, f_eval(cfg, f, i)));
      }
    }
  }
}

TEST(Whittaker, NoEigenvectors) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(50);
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = whittaker_eigenvector_probe(cfg, gen.fweight(cfg, 4, 4), 10);
      EXPECT_FALSE(r.has_eigenvector);
      EXPECT_GT(r.vectors_checked, 21u);
    }
  }
  const FWeight f = ones23();
  EXPECT_EQ(act_qp(kQ2, QP::x(), LV::basis(0), f).support(), std::vector<std::int64_t>{3});
  const LV v = LV::basis(0) + LV::basis(3);
  EXPECT_EQ(act_qp(kQ2, QP::x(), v, f).support(), (std::vector<std::int64_t>{3, 6}));
}
