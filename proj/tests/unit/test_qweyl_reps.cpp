#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "oracles.hpp"
#include "qrep/qweyl_reps.hpp"

using namespace qrep;

namespace {

using LV = LaurentVector;
using QP = QPlaneElement;
using QW = QWeylElement;

const FieldConfig kQ2 = FieldConfig::rationals(2);
const FieldConfig kGeneric = FieldConfig::generic();

GWeight w1(const Scalar& g0) { return make_gweight(1, {g0}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::SyntaxError;
}

LV qw_letter(const FieldConfig& cfg, char c, const LV& v, const GWeight& g) {
  return act_w(cfg, c == 'X' ? QW::x() : QW::y(), v, g);
}

}  // namespace

TEST(GEval, Examples) {
  EXPECT_EQ(g_eval(kQ2, w1(0), 3), Scalar(7));
  for (const auto& cfg : oracle::both_fields()) {
    const GWeight g = make_gweight(3, {0, cfg.q, -4});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(g_eval(cfg, g, i), g.base[i]);
    const Scalar fixed = -(cfg.q - 1).inverse();
    for (int i = -6; i <= 6; ++i) EXPECT_EQ(g_eval(cfg, w1(fixed), i), fixed);
  }
}

TEST(GEval, RecurrenceAndShiftedValues) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(51);
    for (int trial = 0; trial < 20; ++trial) {
      const GWeight g = gen.gweight(cfg, 4);
      for (std::int64_t i = -30; i <= 30; ++i) {
        EXPECT_EQ(g_eval(cfg, g, i + g.n), cfg.q * g_eval(cfg, g, i) + 1);
        EXPECT_EQ(g_eval(cfg, g, i), oracle::g_walk(cfg, g, i));
        EXPECT_EQ(h_eval(cfg, g, i), (cfg.q - 1) * g_eval(cfg, g, i) + 1);
        EXPECT_EQ(h_eval(cfg, g, i + g.n), cfg.q * h_eval(cfg, g, i));
      }
    }
  }
}

TEST(ExtendAction, Examples) {
  const FWeight f = FWeight::make(1, 1, {1});
  EXPECT_EQ(extend_action_qweyl(kQ2, QW::y(), LV::basis(0), f), LV::basis(-2) - LV::basis(-1));
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(52);
    const FWeight g = gen.fweight(cfg, 4, 4);
    for (std::int64_t i = -5; i <= 5; ++i) {
      EXPECT_EQ(extend_action_qweyl(cfg, QW::x(), LV::basis(i), g), LV::basis(i + g.n));
    }
  }
}

TEST(ExtendAction, RelationAndComposition) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(53);
    for (int trial = 0; trial < 100; ++trial) {
      const FWeight f = gen.fweight(cfg, 5, 5);
      const LV p = gen.laurent(cfg, -20, 20, 3);
      auto letter = [&](char c, const LV& v) {
        return extend_action_qweyl(cfg, c == 'X' ? QW::x() : QW::y(), v, f);
      };
      EXPECT_TRUE((oracle::apply_word("YX", p, letter) - cfg.q * oracle::apply_word("XY", p, letter) -
                   p)
                      .is_zero());
      const auto u = gen.element<QWeylTag>(cfg, 2, 3);
      const auto v = gen.element<QWeylTag>(cfg, 2, 3);
      EXPECT_EQ(extend_action_qweyl(cfg, qw_multiply(cfg, u, v), p, f),
                extend_action_qweyl(cfg, u, extend_action_qweyl(cfg, v, p, f), f));
      EXPECT_EQ(extend_action_qweyl(cfg, u, p, f), act_localized(cfg, embed_qweyl(cfg, u), p, f));
    }
  }
}

TEST(ExtendAction, LocalizedActionRestrictsToQPlane) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(54);
    for (int trial = 0; trial < 30; ++trial) {
      const FWeight f = gen.fweight(cfg, 4, 4);
      const auto u = gen.element<QPlaneTag>(cfg, 3, 3);
      LocalizedElement lu;
      for (const auto& [m, c] : u.terms()) lu.add_term(m, c);
      const LV p = gen.laurent(cfg, -10, 10, 3);
      EXPECT_EQ(act_localized(cfg, lu, p, f), act_qp(cfg, u, p, f));
      EXPECT_EQ(act_localized(cfg, LocalizedElement::monomial(-1, 0), p, f),
                (BasisEmbedding{-f.n, 1}.apply(p)));
    }
  }
}

TEST(NotWeightWitness, Examples) {
  const auto r = qweyl_not_weight_witness(kQ2, FWeight::make(1, 1, {1}), 5);
  ASSERT_EQ(r.supports.size(), 6u);
  for (std::size_t l = 0; l < r.supports.size(); ++l) {
    EXPECT_EQ(r.supports[l], std::vector<std::int64_t>{-static_cast<std::int64_t>(l)});
  }
  EXPECT_EQ(r.span_dimension, 6u);
  const auto zero = qweyl_not_weight_witness(kQ2, FWeight::make(1, 1, {1}), 0);
  ASSERT_EQ(zero.orbit.size(), 1u);
  EXPECT_EQ(zero.orbit[0], LV::basis(0));
  EXPECT_EQ(qweyl_not_weight_witness(kGeneric, FWeight::make(2, 3, {1, 1, 1}), 4).span_dimension,
            5u);
}

TEST(IsoCheckQWeyl, Examples) {
  EXPECT_TRUE(iso_check_qweyl(kQ2, make_f_lambda(kQ2, 2, 3, 5), make_f_lambda(kQ2, 2, 3, 20)));
  EXPECT_FALSE(iso_check_qweyl(kQ2, make_f_lambda(kQ2, 1, 1, 3), make_f_lambda(kQ2, 1, 1, 5)));
  EXPECT_TRUE(iso_check_qweyl(kQ2, FWeight::make(1, 2, {1, 1}), FWeight::make(1, 2, {1, 1})));
  EXPECT_EQ(code_of([] {
              (void)iso_check_qweyl(kQ2, FWeight::make(2, 2, {1, 1}), FWeight::make(2, 2, {1, 1}));
            }),
            ErrorCode::NotCoprime);
}

TEST(ValidateWParams, Examples) {
  EXPECT_EQ(code_of([] { validate_w_params(kQ2, 2, 3, [](std::int64_t) { return Scalar(1); }); }),
            ErrorCode::InvalidWParams);
  EXPECT_NO_THROW(
      validate_w_params(kQ2, 1, 1, [](std::int64_t i) { return q_bracket(kQ2, i); }));
  const GWeight zeros = make_gweight(2, {0, 0});
  EXPECT_NO_THROW(
      validate_w_params(kQ2, 2, 2, [&](std::int64_t i) { return g_eval(kQ2, zeros, i); }));
  EXPECT_EQ(code_of([] { validate_w_params(kQ2, 1, 1, [](std::int64_t) { return Scalar(5); }); }),
            ErrorCode::InvalidWParams);
  EXPECT_EQ(code_of([] { validate_w_params(kQ2, 0, 0, [](std::int64_t) { return Scalar(); }); }),
            ErrorCode::InvalidParam);
}

TEST(ActW, Examples) {
  EXPECT_EQ(act_w(kQ2, QW::y(), LV::basis(3), w1(0)), LV::basis(2, 7));
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(55);
    for (int trial = 0; trial < 20; ++trial) {
      const GWeight g = gen.gweight(cfg, 4);
      for (std::int64_t i = -20; i <= 20; ++i) {
        const LV t = LV::basis(i);
        EXPECT_EQ(act_w(cfg, QW::monomial(1, 1), t, g), LV::basis(i, g_eval(cfg, g, i)));
        EXPECT_EQ(act_w(cfg, casimir(cfg), t, g), LV::basis(i, h_eval(cfg, g, i)));
        auto letter = [&](char c, const LV& v) { return qw_letter(cfg, c, v, g); };
        EXPECT_TRUE(
            (oracle::apply_word("YX", t, letter) - cfg.q * oracle::apply_word("XY", t, letter) - t)
                .is_zero());
      }
    }
  }
}

TEST(ActW, RepresentationLaw) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(56);
    for (int trial = 0; trial < 50; ++trial) {
      const GWeight g = gen.gweight(cfg, 3);
      const auto u = gen.element<QWeylTag>(cfg, 2, 3);
      const auto v = gen.element<QWeylTag>(cfg, 2, 3);
      const LV p = gen.laurent(cfg, -8, 8, 3);
      EXPECT_EQ(act_w(cfg, qw_multiply(cfg, u, v), p, g), act_w(cfg, u, act_w(cfg, v, p, g), g));
    }
  }
}

TEST(DecomposeW, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    const Scalar a = 4, b = cfg.q - 3;
    const GWeight g = make_gweight(2, {a, b});
    const auto parts = decompose_w(cfg, g);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].weight, w1(a));
    EXPECT_EQ(parts[1].weight, w1(b));
    EXPECT_EQ(decompose_w(cfg, w1(a)).size(), 1u);
    EXPECT_EQ(decompose_w(cfg, w1(a))[0].embedding.image(4), 4);
    for (const auto& s : parts) {
      for (std::int64_t i = -20; i <= 20; ++i) {
        for (const auto& gen : {QW::x(), QW::y()}) {
          const LV v = LV::basis(i);
          EXPECT_EQ(s.embedding.apply(act_w(cfg, gen, v, s.weight)),
                    act_w(cfg, gen, s.embedding.apply(v), g));
        }
      }
    }
  }
}

TEST(WIsoCheck, Examples) {
  EXPECT_TRUE(w_iso_check(kQ2, w1(1), w1(0)));
  EXPECT_TRUE(w_iso_check(kQ2, w1(Scalar::rational(2, 3)), w1(Scalar::rational(2, 3))));
  EXPECT_FALSE(w_iso_check(kQ2, w1(5), w1(0)));
  EXPECT_TRUE(w_iso_check(kQ2, w1(-1), w1(-1)));
  EXPECT_FALSE(w_iso_check(kQ2, w1(-1), w1(0)));
  EXPECT_EQ(code_of([] { (void)w_iso_check(kQ2, make_gweight(2, {0, 0}), w1(0)); }),
            ErrorCode::UnsupportedN);
}

TEST(WIsoCheck, AgreesWithOrbitSearch) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(57);
    std::vector<GWeight> set;
    for (int i = 0; i < 6; ++i) set.push_back(w1(gen.any(cfg)));
    set.push_back(w1(0));
    set.push_back(w1(q_bracket(cfg, 3)));
    set.push_back(w1(q_bracket(cfg, -2)));
    set.push_back(w1(-(cfg.q - 1).inverse()));
    for (const auto& a : set) {
      for (const auto& b : set) {
        bool found = false;
        for (std::int64_t i = -40; i <= 40 && !found; ++i) {
          found = oracle::g_walk(cfg, b, i) == a.base[0];
        }
        EXPECT_EQ(w_iso_check(cfg, a, b), found) << a.to_string() << " vs " << b.to_string();
      }
    }
  }
}

TEST(WIrreducible, Examples) {
  EXPECT_TRUE(w_is_irreducible(kQ2, w1(5)).irreducible);
  const auto tail = w_is_irreducible(kQ2, w1(3));
  EXPECT_FALSE(tail.irreducible);
  EXPECT_EQ(tail.witness, ReducibilityWitness::PolynomialTail);
  EXPECT_EQ(tail.tail_start, -2);
  const auto constant = w_is_irreducible(kQ2, w1(-1));
  EXPECT_FALSE(constant.irreducible);
  EXPECT_EQ(constant.witness, ReducibilityWitness::ConstantG);
  EXPECT_EQ(code_of([] { (void)w_is_irreducible(kQ2, make_gweight(2, {1, 1})); }),
            ErrorCode::UnsupportedN);
  EXPECT_FALSE(w_is_irreducible(kGeneric, w1(q_bracket(kGeneric, -3))).irreducible);
  EXPECT_TRUE(w_is_irreducible(kGeneric, w1(kGeneric.q * kGeneric.q)).irreducible);
}

TEST(WIrreducible, WitnessesAreInvariant) {
  for (int g0 : {-1, 0, 1, 3, 7}) {
    const GWeight g = w1(g0);
    const auto r = w_is_irreducible(kQ2, g);
    ASSERT_FALSE(r.irreducible);
    for (std::int64_t j = -12; j <= 12; ++j) {
      if (r.witness == ReducibilityWitness::PolynomialTail) {
        if (j < r.tail_start) continue;
        for (const auto& gen : {QW::x(), QW::y()}) {
          const LV w = act_w(kQ2, gen, LV::basis(j), g);
          EXPECT_TRUE(w.is_zero() || w.min_exponent() >= r.tail_start);
        }
      } else {
        // (t - 1) F[t^{+-1}] is the set of Laurent polynomials vanishing at 1.
        const LV v = LV::basis(j + 1) - LV::basis(j);
        for (const auto& gen : {QW::x(), QW::y()}) {
          Scalar at_one;
          const LV image = act_w(kQ2, gen, v, g);
          for (const auto& [i, c] : image.terms()) at_one += c;
          EXPECT_TRUE(at_one.is_zero());
        }
      }
    }
  }
}

TEST(WIrreducible, BruteForceAgreement) {
  for (int g0 : {-1, 0, 1, 2, 3, 5, 7}) {
    const GWeight g = w1(g0);
    EXPECT_EQ(oracle::brute_force_reducible(kQ2, g, 12), !w_is_irreducible(kQ2, g).irreducible)
        << "g(0) = " << g0;
  }
}

TEST(Restriction, Examples) {
  for (const auto& cfg : oracle::both_fields()) {
    const GWeight g = w1(cfg.q + 5);
    const auto s = restrict_sigma(cfg, g);
    const auto t = restrict_tau(cfg, g);
    for (std::int64_t i = -10; i <= 10; ++i) {
      const LV v = LV::basis(i);
      EXPECT_EQ(s(QP::y(), v), LV::basis(i, h_eval(cfg, g, i)));
      EXPECT_EQ(s(QP::x(), v), LV::basis(i + 1));
      EXPECT_EQ(t(QP::x(), v), LV::basis(i, h_eval(cfg, g, i)));
      EXPECT_EQ(t(QP::y(), v), LV::basis(i - 1, g_eval(cfg, g, i)));
    }
  }
}

TEST(Restriction, ConsistentWithEmbeddings) {
  for (const auto& cfg : oracle::both_fields()) {
    oracle::Gen gen(58);
    for (int trial = 0; trial < 50; ++trial) {
      const GWeight g = gen.gweight(cfg, 3);
      const auto u = gen.element<QPlaneTag>(cfg, 3, 3);
      const LV p = gen.laurent(cfg, -8, 8, 3);
      EXPECT_EQ(restrict_sigma(cfg, g)(u, p), act_w(cfg, sigma(cfg, u), p, g));
      EXPECT_EQ(restrict_tau(cfg, g)(u, p), act_w(cfg, tau_embed(cfg, u), p, g));
    }
  }
}

TEST(Socle, SigmaIsTrivial) {
  for (int g0 : {-1, 0, 3, 5}) {
    const auto r = socle_sigma(kQ2, w1(g0));
    EXPECT_TRUE(r.lines.empty());
    EXPECT_TRUE(r.window_verified);
  }
  const auto act = restrict_sigma(kQ2, w1(0));
  EXPECT_EQ(act(QP::x(), LV::basis(0)), LV::basis(1));
}

TEST(Socle, TauLines) {
  const std::vector<std::pair<int, std::int64_t>> expected{{0, 0}, {1, -1}, {3, -2}, {7, -3}};
  for (const auto& [g0, line] : expected) {
    const auto r = socle_tau(kQ2, w1(g0));
    EXPECT_EQ(r.lines, std::vector<std::int64_t>{line});
    EXPECT_TRUE(r.window_verified);
    const auto act = restrict_tau(kQ2, w1(g0));
    EXPECT_EQ(act(QP::x(), LV::basis(line)), LV::basis(line));
    EXPECT_TRUE(act(QP::y(), LV::basis(line)).is_zero());
  }
  for (int g0 : {2, 5}) {
    const auto r = socle_tau(kQ2, w1(g0));
    EXPECT_TRUE(r.lines.empty());
    EXPECT_TRUE(r.window_verified);
  }
  EXPECT_EQ(code_of([] { (void)socle_tau(kQ2, make_gweight(2, {0, 0})); }), ErrorCode::UnsupportedN);
  EXPECT_EQ(socle_tau(kGeneric, w1(q_bracket(kGeneric, 4))).lines, std::vector<std::int64_t>{-4});
}
