#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "evcalc/dempster.hpp"
#include "evcalc/evidence_scale.hpp"
#include "oracle.hpp"

using namespace evcalc;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("support_from_weight") {
  CHECK(support_from_weight(0.0) == 0.0);
  CHECK(support_from_weight(kLn2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(support_from_weight(-1.0), DomainError);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 10000; ++k) {
    const double w1 = oracle::uniform(rng, 0, 10), w2 = oracle::uniform(rng, 0, 10);
    const double lhs = support_from_weight(w1 + w2);
    const double rhs = 1 - (1 - support_from_weight(w1)) * (1 - support_from_weight(w2));
    REQUIRE(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("belief_from_weights") {
  CHECK(belief_from_weights(EvidenceWeightsd::finite(0, 0)) == BeliefIntervald::vacuous());

  const auto half = belief_from_weights(EvidenceWeightsd::finite(kLn2, 0));
  CHECK(half.bel() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.pl() == 1.0);
  CHECK(half.bel() == doctest::Approx(support_from_weight(kLn2)).epsilon(1e-15));

  const auto bayes = belief_from_weights(EvidenceWeightsd::infinite(0));
  CHECK(bayes.bel() == 0.5);
  CHECK(bayes.pl() == 0.5);

  // Frozen from a 30-digit evaluation of the closed form.
  const auto b11 = belief_from_weights(EvidenceWeightsd::finite(1, 1));
  CHECK(b11.bel() == doctest::Approx(0.387300163219717960).epsilon(1e-15));
  CHECK(b11.pl() == doctest::Approx(0.612699836780282039).epsilon(1e-15));
  const auto b21 = belief_from_weights(EvidenceWeightsd::finite(2, 1));
  CHECK(b21.bel() == doctest::Approx(0.701528388412600932).epsilon(1e-15));
  CHECK(b21.pl() == doctest::Approx(0.811329958088913090).epsilon(1e-15));
}

TEST_CASE("belief_from_weights agrees with the direct formula") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const double wp = oracle::uniform(rng, 0, 30), wm = oracle::uniform(rng, 0, 30);
    const auto [bel, pl] = oracle::naive_belief(wp, wm);
    const auto iv = belief_from_weights(EvidenceWeightsd::finite(wp, wm));
    REQUIRE(iv.bel() == doctest::Approx(double(bel)).epsilon(1e-13));
    REQUIRE(iv.pl() == doctest::Approx(double(pl)).epsilon(1e-13));
  }
}

TEST_CASE("huge weights do not overflow") {
  const auto iv = belief_from_weights(EvidenceWeightsd::finite(5000, 4998));
  CHECK(iv.bel() == doctest::Approx(1 / (1 + std::exp(-2.0))).epsilon(1e-15));
  const auto sat = belief_from_weights(EvidenceWeightsd::finite(1e6, 0));
  CHECK(sat.bel() == 1.0);
  CHECK(sat.pl() == 1.0);
}

TEST_CASE("weights_from_belief") {
  const auto vac = weights_from_belief(BeliefIntervald::vacuous());
  CHECK(vac.is_finite());
  CHECK(vac.w_plus() == 0.0);
  CHECK(vac.w_minus() == 0.0);

  const auto w = weights_from_belief(BeliefIntervald::make(0.5, 1));
  CHECK(w.w_plus() == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(w.w_minus() == 0.0);

  const auto inf = weights_from_belief(BeliefIntervald::make(0.5, 0.5));
  CHECK_FALSE(inf.is_finite());
  CHECK(inf.delta() == 0.0);
  CHECK_THROWS_AS(inf.w_plus(), InfiniteEvidenceError);

  const auto zero = weights_from_belief(BeliefIntervald::make(0, 0));
  CHECK(zero.delta() == std::numeric_limits<double>::infinity());
  const auto one = weights_from_belief(BeliefIntervald::make(1, 1));
  CHECK(one.delta() == -std::numeric_limits<double>::infinity());
  CHECK(belief_from_weights(zero).bel() == 0.0);
  CHECK(belief_from_weights(one).bel() == 1.0);
}

TEST_CASE("weights and beliefs are inverse maps") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10000; ++k) {
    // double carries the width to ~1e-16 / width relative; on [0,10]^2 that
    // is well under 1e-9.
    const double wp = oracle::uniform(rng, 0, 10), wm = oracle::uniform(rng, 0, 10);
    const auto back = weights_from_belief(belief_from_weights(EvidenceWeightsd::finite(wp, wm)));
    REQUIRE(std::hypot(back.w_plus() - wp, back.w_minus() - wm) <= 1e-9 * std::hypot(wp, wm));

    const auto r = oracle::random_mass(rng);
    const auto iv = BeliefIntervald::make(r.h, 1 - r.not_h);
    if (iv.is_bayesian()) continue;
    const auto again = belief_from_weights(weights_from_belief(iv));
    REQUIRE(std::abs(again.bel() - iv.bel()) <= 1e-9);
    REQUIRE(std::abs(again.pl() - iv.pl()) <= 1e-9);
  }
}

TEST_CASE("additive pooling is Dempster's rule") {
  CHECK(add_weights(EvidenceWeightsd::finite(0, 0), EvidenceWeightsd::finite(2.5, 3)) ==
        EvidenceWeightsd::finite(2.5, 3));
  CHECK((EvidenceWeightsd::finite(1, 2) + EvidenceWeightsd::finite(3, 4)) ==
        EvidenceWeightsd::finite(4, 6));
  CHECK_THROWS_AS(add_weights(EvidenceWeightsd::infinite(0), EvidenceWeightsd::finite(1, 1)),
                  InfiniteEvidenceError);

  std::mt19937_64 rng(17);
  for (int k = 0; k < 10000; ++k) {
    const auto w1 = EvidenceWeightsd::finite(oracle::uniform(rng, 0, 8), oracle::uniform(rng, 0, 8));
    const auto w2 = EvidenceWeightsd::finite(oracle::uniform(rng, 0, 8), oracle::uniform(rng, 0, 8));
    const auto pooled = belief_from_weights(add_weights(w1, w2));
    const auto folded = combine_interval(belief_from_weights(w1), belief_from_weights(w2));
    REQUIRE(std::abs(pooled.bel() - folded.bel()) <= 1e-9);
    REQUIRE(std::abs(pooled.pl() - folded.pl()) <= 1e-9);
  }
}

TEST_CASE("monotonicity in each weight") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 2000; ++k) {
    const double wp = oracle::uniform(rng, 0, 10), wm = oracle::uniform(rng, 0, 10);
    const double step = oracle::uniform(rng, 0.01, 1);
    const auto base = belief_from_weights(EvidenceWeightsd::finite(wp, wm));
    const auto more_pos = belief_from_weights(EvidenceWeightsd::finite(wp + step, wm));
    const auto more_neg = belief_from_weights(EvidenceWeightsd::finite(wp, wm + step));
    REQUIRE(more_pos.bel() > base.bel());
    REQUIRE(more_pos.pl() > base.pl());
    REQUIRE(more_neg.bel() < base.bel());
    REQUIRE(more_neg.pl() < base.pl());
  }
}

TEST_CASE("belief saturates when positive weight outgrows negative weight") {
  const double c = 0.7, d = 0.3;
  const double t = 31 / (c - d);
  const auto iv = belief_from_weights(EvidenceWeightsd::finite(c * t, d * t));
  CHECK(iv.bel() > 1 - 1e-9);
}

TEST_CASE("multiply_combine") {
  CHECK(multiply_combine(0.5, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(multiply_combine(0.6, 0.6) == doctest::Approx(0.692307692307692308).epsilon(1e-15));
  CHECK_THROWS_AS(multiply_combine(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(multiply_combine(0.5, 1.0), DomainError);

  std::mt19937_64 rng(29);
  for (int k = 0; k < 10000; ++k) {
    const double b1 = oracle::uniform(rng, 1e-6, 1 - 1e-6), b2 = oracle::uniform(rng, 1e-6, 1 - 1e-6);
    const auto dempster = combine_interval(BeliefIntervald::make(b1, b1), BeliefIntervald::make(b2, b2));
    REQUIRE(std::abs(multiply_combine(b1, b2) - dempster.bel()) <= 1e-12);
  }
}

TEST_CASE("positive_proportion") {
  CHECK_THROWS_AS(positive_proportion(BeliefIntervald::vacuous()), UndefinedError);
  CHECK_THROWS_AS(positive_proportion(BeliefIntervald::make(0.4, 0.4)), InfiniteEvidenceError);
  CHECK(positive_proportion(belief_from_weights(EvidenceWeightsd::finite(1, 1))) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(positive_proportion(belief_from_weights(EvidenceWeightsd::finite(2, 1))) ==
        doctest::Approx(2.0 / 3).epsilon(1e-14));

  std::mt19937_64 rng(31);
  for (int k = 0; k < 5000; ++k) {
    const double wp = oracle::uniform(rng, 0, 10), wm = oracle::uniform(rng, 0.01, 10);
    const auto iv = belief_from_weights(EvidenceWeightsd::finite(wp, wm));
    REQUIRE(positive_proportion(iv) == doctest::Approx(wp / (wp + wm)).epsilon(1e-9));
  }
}

TEST_CASE("classify_limit") {
  const auto unit = UnitWeightsd::unit();
  CHECK(classify_limit(0.7, unit) == 1.0);
  CHECK(classify_limit(0.5, unit) == 0.5);
  CHECK(classify_limit(0.6, UnitWeightsd::make(1, 2)) == 0.0);
  CHECK(classify_limit(0.0, unit) == 0.0);
  CHECK(classify_limit(1.0, unit) == 1.0);
  // tie at q = w0- / (w0+ + w0-) = 0.75
  CHECK(classify_limit(0.75, UnitWeightsd::make(1, 3)) == 0.5);
  CHECK_THROWS_AS(classify_limit(1.5, unit), DomainError);
  CHECK_THROWS_AS(UnitWeightsd::make(0, 1), ValidationError);
}

TEST_CASE("delta_limit") {
  CHECK(delta_limit(0.0) == 0.5);
  CHECK(delta_limit(std::log(3.0)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(delta_limit(2.0) == doctest::Approx(0.119202922022117556).epsilon(1e-15));
  CHECK(delta_limit(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(delta_limit(-std::numeric_limits<double>::infinity()) == 1.0);

  std::mt19937_64 rng(37);
  for (int k = 0; k < 10000; ++k) {
    // Exact for d >= 0; for d < 0 the right side is 1 - (1 - r), one
    // rounding away.
    const double d = oracle::uniform(rng, 0, 40);
    REQUIRE(delta_limit(-d) == 1 - delta_limit(d));
    REQUIRE(std::abs(delta_limit(d) - (1 - delta_limit(-d))) <= 0x1.0p-53);
  }
}
