#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slackclear/mechanism.hpp"
#include "slackclear/rng.hpp"
#include "test_util.hpp"

using namespace slackclear;
using testutil::random_entitlements;
using testutil::random_profile;

TEST_CASE("decompose splits overage and slack") {
  const Entitlements ent({10.0, 10.0, 10.0});
  const ClaimProfile profile({12.0, 15.0, 4.0}, 20.0);
  const OverageSlack os = decompose(profile, ent);

  CHECK(os.overage == std::vector<double>{2.0, 5.0, 0.0});
  CHECK(os.slack == std::vector<double>{0.0, 0.0, 6.0});
  CHECK(os.total_overage == 7.0);
  CHECK(os.total_slack == 6.0);
  CHECK(os.defectors == std::vector<std::size_t>{0, 1});
  CHECK(os.cooperators == std::vector<std::size_t>{2});
}

TEST_CASE("decompose of the honest profile is identically zero") {
  const Entitlements ent({3.0, 7.5});
  const ClaimProfile profile({3.0, 7.5}, 10.0);
  const OverageSlack os = decompose(profile, ent);
  CHECK(os.total_overage == 0.0);
  CHECK(os.total_slack == 0.0);
  CHECK(os.defectors.empty());
  CHECK(os.cooperators.size() == 2);
}

TEST_CASE("claim equal to entitlement counts as cooperation") {
  const Entitlements ent({10.0, 10.0});
  const ClaimProfile profile({10.0, 20.0}, 20.0);
  const OverageSlack os = decompose(profile, ent);
  CHECK(os.cooperators == std::vector<std::size_t>{0});
  CHECK(os.overage == std::vector<double>{0.0, 10.0});
}

TEST_CASE("decompose rejects bad input") {
  const Entitlements ent({10.0, 10.0});
  CHECK_THROWS_AS(decompose(ClaimProfile({1.0}, 5.0), ent),
                  std::invalid_argument);
  CHECK_THROWS_AS(ClaimProfile({-1.0, 2.0}, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(ClaimProfile({1.0, 6.0}, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(Entitlements({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Entitlements({}), std::invalid_argument);
  CHECK_THROWS_AS(AlphaRule(0.0), std::invalid_argument);
  CHECK_THROWS_AS(AlphaRule(-2.0), std::invalid_argument);
}

TEST_CASE("linear clearing prorates coverage under scarcity") {
  const Entitlements ent({10.0, 10.0, 10.0});
  const ClaimProfile profile({12.0, 15.0, 4.0}, 20.0);
  const ClearingOutcome out = clear_linear(profile, ent);

  CHECK(out.regime == Regime::Scarcity);
  CHECK(out.covered[0] == doctest::Approx(12.0 / 7.0).epsilon(1e-14));
  CHECK(out.covered[1] == doctest::Approx(30.0 / 7.0).epsilon(1e-14));
  CHECK(out.covered[2] == 0.0);
  CHECK(out.payoffs[0] == doctest::Approx(10.0 + 12.0 / 7.0).epsilon(1e-14));
  CHECK(out.payoffs[1] == doctest::Approx(10.0 + 30.0 / 7.0).epsilon(1e-14));
  CHECK(out.payoffs[2] == 4.0);

  const double total =
      out.payoffs[0] + out.payoffs[1] + out.payoffs[2];
  CHECK(total == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(std::abs(out.budget_residual) < 1e-12);
}

TEST_CASE("all-defect and honest profiles both pay entitlements") {
  const Entitlements ent({4.0, 9.0, 2.5});

  const ClearingOutcome all_defect =
      clear_linear(ClaimProfile({20.0, 20.0, 20.0}, 20.0), ent);
  CHECK(all_defect.payoffs == ent.values);
  CHECK(all_defect.covered == std::vector<double>{0.0, 0.0, 0.0});

  const ClearingOutcome honest =
      clear_linear(ClaimProfile(ent.values, 20.0), ent);
  CHECK(honest.payoffs == ent.values);
  CHECK(honest.regime == Regime::Boundary);
}

TEST_CASE("boundary profile clears with full coverage for any alpha") {
  // v = (1, 2, 0) against slack 3: X == I exactly.
  const Entitlements ent({10.0, 10.0, 10.0});
  const ClaimProfile profile({11.0, 12.0, 7.0}, 20.0);

  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const ClearingOutcome out = clear_alpha(profile, ent, AlphaRule(alpha));
    CHECK(out.regime == Regime::Boundary);
    CHECK(out.covered == std::vector<double>{1.0, 2.0, 0.0});
  }
}

TEST_CASE("power clearing weights coverage by the alpha power") {
  // Same overages v = (1, 2) but slack 2.999: barely scarce.
  const Entitlements ent({10.0, 10.0, 10.0});
  const ClaimProfile profile({11.0, 12.0, 7.001}, 20.0);
  const ClearingOutcome out = clear_alpha(profile, ent, AlphaRule(2.0));

  CHECK(out.regime == Regime::Scarcity);
  CHECK(out.covered[0] == doctest::Approx(2.999 / 5.0).epsilon(1e-12));
  CHECK(out.covered[1] == doctest::Approx(2.999 * 4.0 / 5.0).epsilon(1e-12));
  CHECK(std::abs(out.budget_residual) < 1e-12);
}

TEST_CASE("alpha=1 clearing matches the linear rule componentwise") {
  Rng rng(20260809);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.integer(8);
    const Entitlements ent = random_entitlements(rng, n);
    const double bound = 2.0 * ent.max_level() + 1.0;
    const ClaimProfile profile = random_profile(rng, n, bound);

    const ClearingOutcome linear = clear_linear(profile, ent);
    const ClearingOutcome powered = clear_alpha(profile, ent, AlphaRule(1.0));
    CHECK(linear.regime == powered.regime);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(linear.covered[j] - powered.covered[j]) <= 1e-12);
      CHECK(std::abs(linear.payoffs[j] - powered.payoffs[j]) <= 1e-12);
    }
  }
}

TEST_CASE("cooperators keep their claim exactly, for every alpha") {
  Rng rng(7);
  const std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  int cooperators_seen = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.integer(8);
    const Entitlements ent = random_entitlements(rng, n);
    const double bound = 2.0 * ent.max_level() + 1.0;
    const ClaimProfile profile = random_profile(rng, n, bound);
    const double alpha = alphas[trial % alphas.size()];

    const ClearingOutcome out = clear_alpha(profile, ent, AlphaRule(alpha));
    for (std::size_t j = 0; j < n; ++j) {
      if (profile.claims[j] <= ent.values[j]) {
        ++cooperators_seen;
        // Bitwise: the rule pays the claim through, untouched.
        CHECK(out.payoffs[j] == profile.claims[j]);
      }
    }
  }
  CHECK(cooperators_seen > 10000);
}

TEST_CASE("budget identity holds for random profiles and alphas") {
  Rng rng(99);
  const std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 1 + rng.integer(8);
    const Entitlements ent = random_entitlements(rng, n);
    const double bound = 2.0 * ent.max_level() + 1.0;
    const ClaimProfile profile = random_profile(rng, n, bound);
    const OverageSlack os = decompose(profile, ent);

    for (double alpha : alphas) {
      const ClearingOutcome out = clear_alpha(profile, ent, AlphaRule(alpha));
      const double residual = budget_identity_residual(out, ent, os);
      CHECK(std::abs(residual) <= 1e-9 * ent.total());
      if (os.total_overage >= os.total_slack) {
        double total = 0.0;
        for (double payoff : out.payoffs) total += payoff;
        CHECK(total == doctest::Approx(ent.total()).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("budget identity worked slack-side case") {
  const Entitlements ent({10.0, 10.0});
  const ClaimProfile profile({5.0, 10.0}, 20.0);
  const ClearingOutcome out = clear_linear(profile, ent);
  const OverageSlack os = decompose(profile, ent);

  CHECK(os.total_overage == 0.0);
  CHECK(os.total_slack == 5.0);
  CHECK(out.payoffs[0] + out.payoffs[1] == 15.0);
  CHECK(budget_identity_residual(out, ent, os) == 0.0);
}

TEST_CASE("coverage is feasible and exhausts min(X, I)") {
  Rng rng(123);
  const std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + rng.integer(7);
    const Entitlements ent = random_entitlements(rng, n);
    const double bound = 2.0 * ent.max_level() + 1.0;
    const ClaimProfile profile = random_profile(rng, n, bound);
    const OverageSlack os = decompose(profile, ent);
    const double alpha = alphas[trial % alphas.size()];
    const ClearingOutcome out = clear_alpha(profile, ent, AlphaRule(alpha));

    double covered_sum = 0.0;
    for (std::size_t j : os.defectors) covered_sum += out.covered[j];
    const double expected = std::min(os.total_overage, os.total_slack);
    CHECK(std::abs(covered_sum - expected) <= 1e-9 * (1.0 + expected));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(out.covered[j] >= 0.0);
      CHECK(out.covered[j] <= os.overage[j] * (1.0 + 1e-12));
      // Complementary slackness is exact by construction.
      CHECK(os.overage[j] * os.slack[j] == 0.0);
    }
  }
}

TEST_CASE("regime tagging uses the boundary tolerance") {
  CHECK(classify_regime(7.0, 6.0) == Regime::Scarcity);
  CHECK(classify_regime(6.0, 7.0) == Regime::Slack);
  CHECK(classify_regime(5.0, 5.0) == Regime::Boundary);
  CHECK(classify_regime(5.0 + 5e-13, 5.0) == Regime::Boundary);
  CHECK(classify_regime(5.0 + 5e-13, 5.0, 1e-14) == Regime::Scarcity);
  CHECK(to_string(Regime::Boundary) == "boundary");
}

TEST_CASE("scarcity factor formula and clamping") {
  CHECK(scarcity_factor(0.0, 5.0) == 0.0);
  CHECK(scarcity_factor(10.0, 5.0) == 0.5);
  CHECK(scarcity_factor(5.0, 10.0) == 0.0);
  CHECK(scarcity_factor(0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(scarcity_factor(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scarcity_factor(1.0, -2.0), std::invalid_argument);

  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = rng.uniform(0.0, 50.0);
    const double i = rng.uniform(0.0, 50.0);
    const double lambda = scarcity_factor(x, i);
    CHECK(lambda >= 0.0);
    CHECK(lambda <= 1.0);
  }
}
