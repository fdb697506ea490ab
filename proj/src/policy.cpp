#include "slackclear/policy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace slackclear {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

CollarConfig::CollarConfig(double lo, double hi, std::vector<double> schedule,
                           std::vector<double> price_caps,
                           double scarcity_floor, double forward_price)
    : kappa_lo(lo),
      kappa_hi(hi),
      kappa_schedule(std::move(schedule)),
      p_bar(std::move(price_caps)),
      lambda_floor(scarcity_floor),
      p_forward(forward_price) {
  require(std::isfinite(kappa_lo) && std::isfinite(kappa_hi) &&
              0.0 <= kappa_lo && kappa_lo <= kappa_hi,
          "collar: need 0 <= kappa_lo <= kappa_hi");
  require(!kappa_schedule.empty(), "collar: empty penalty schedule");
  for (double kappa : kappa_schedule) {
    require(kappa_lo <= kappa && kappa <= kappa_hi,
            "collar: scheduled penalty outside the collar");
  }
  require(p_bar.size() == kappa_schedule.size(),
          "collar: price-cap schedule length differs from penalty schedule");
  for (double cap : p_bar) {
    require(std::isfinite(cap) && cap >= 0.0,
            "collar: price caps must be finite and >= 0");
  }
  require(std::isfinite(lambda_floor) && lambda_floor > 0.0 &&
              lambda_floor <= 1.0,
          "collar: lambda floor must lie in (0, 1]");
  require(std::isfinite(p_forward) && p_forward >= 0.0,
          "collar: forward price must be finite and >= 0");
}

PeriodRecord settle_period(const ClaimProfile& claims, const Entitlements& ent,
                           const CollarConfig& collar, std::size_t period,
                           double boundary_tol) {
  require(period < collar.periods(), "settle: period outside the schedule");
  const double kappa = collar.kappa_schedule[period];

  const OverageSlack os = decompose(claims, ent);
  const ClearingOutcome out = clear_linear(claims, ent, boundary_tol);

  PeriodRecord record;
  record.period = period;
  record.total_overage = os.total_overage;
  record.total_slack = os.total_slack;
  record.lambda = scarcity_factor(os.total_overage, os.total_slack);
  record.regime = out.regime;
  record.kappa = kappa;
  record.payoffs = out.payoffs;
  record.budget_residual = out.budget_residual;

  const std::size_t n = claims.size();
  record.residuals.assign(n, 0.0);
  record.penalties.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    record.residuals[j] = std::max(os.overage[j] - out.covered[j], 0.0);
    record.penalties[j] = kappa * record.residuals[j];
    record.total_penalty += record.penalties[j];
    // In scarcity the uncovered share of each overage is the scarcity factor.
    assert(out.regime != Regime::Scarcity ||
           std::abs(record.residuals[j] - record.lambda * os.overage[j]) <=
               1e-9 * (1.0 + os.overage[j]));
  }
  return record;
}

MarginalPenalty marginal_penalty(double own_overage, double others_overage,
                                 double total_slack, double kappa) {
  require(own_overage >= 0.0 && others_overage >= 0.0 && total_slack >= 0.0,
          "marginal penalty: aggregates must be nonnegative");
  require(std::isfinite(kappa) && kappa >= 0.0,
          "marginal penalty: kappa must be finite and >= 0");
  const double total = own_overage + others_overage;
  if (total <= total_slack) {
    return {0.0, false};  // fully covered; residual locally zero
  }
  const double value =
      kappa * (1.0 - total_slack * (total - own_overage) / (total * total));
  return {value, true};
}

double marginal_penalty_fd(double own_overage, double others_overage,
                           double total_slack, double kappa, double step) {
  require(step > 0.0, "marginal penalty fd: step must be positive");

  // Residual through an actual settlement of a synthetic three-player period:
  // the probe defector, one defector holding the rest of the overage, and one
  // cooperator holding the slack.
  const auto penalty_at = [&](double v) {
    const Entitlements ent({1.0, 1.0, total_slack + 1.0});
    const double bound = v + others_overage + total_slack + 2.0;
    const ClaimProfile claims({1.0 + v, 1.0 + others_overage, 1.0}, bound);
    const CollarConfig collar(kappa, kappa, {kappa}, {0.0}, 1.0, 0.0);
    return settle_period(claims, ent, collar, 0).penalties[0];
  };

  // Central difference, unless stepping left would cross the clearing kink
  // X == I or make the overage negative; then one-sided to the right.
  const double left = own_overage - step;
  const bool central_ok =
      left > 0.0 && left + others_overage > total_slack;
  if (central_ok) {
    return (penalty_at(own_overage + step) - penalty_at(left)) / (2.0 * step);
  }
  return (penalty_at(own_overage + step) - penalty_at(own_overage)) / step;
}

std::string to_string(ArbitrageDecision decision) {
  switch (decision) {
    case ArbitrageDecision::ForwardStrictlyCheaper:
      return "forward_strictly_cheaper";
    case ArbitrageDecision::ForwardWeaklyCheaper:
      return "forward_weakly_cheaper";
    case ArbitrageDecision::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::vector<ArbitrageRecord> arbitrage_check(const CollarConfig& collar) {
  std::vector<ArbitrageRecord> records;
  records.reserve(collar.periods());
  for (std::size_t t = 0; t < collar.periods(); ++t) {
    ArbitrageRecord record;
    record.period = t;
    record.kappa = collar.kappa_schedule[t];
    record.p_bar = collar.p_bar[t];
    record.penalty_floor = record.kappa * collar.lambda_floor;
    record.price_cap_floor = record.p_bar * collar.lambda_floor;
    if (record.kappa < record.p_bar) {
      record.decision = ArbitrageDecision::Inconclusive;
    } else if (record.price_cap_floor > collar.p_forward) {
      record.decision = ArbitrageDecision::ForwardStrictlyCheaper;
    } else if (record.price_cap_floor == collar.p_forward) {
      record.decision = ArbitrageDecision::ForwardWeaklyCheaper;
    } else {
      record.decision = ArbitrageDecision::Inconclusive;
    }
    records.push_back(record);
  }
  return records;
}

WaitingCostEstimate expected_waiting_cost(const ScenarioSampler& sampler,
                                          std::size_t samples,
                                          std::uint64_t seed) {
  require(samples >= 1, "waiting cost: need at least one sample");
  require(static_cast<bool>(sampler), "waiting cost: sampler not set");

  WaitingCostEstimate estimate;
  estimate.samples = samples;

  Rng rng(seed);
  double sum = 0.0;
  double sq_sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const ScarcityScenario scenario = sampler(rng);
    const double lambda =
        scarcity_factor(scenario.total_overage, scenario.total_slack);
    const double cost = scenario.kappa * lambda;
    sum += cost;
    sq_sum += cost * cost;

    if (scenario.total_overage > scenario.total_slack) {
      // Spot-check the marginal-penalty floor at a random overage split.
      ++estimate.bound_checks;
      const double own = rng.uniform() * scenario.total_overage;
      const MarginalPenalty analytic = marginal_penalty(
          own, scenario.total_overage - own, scenario.total_slack,
          scenario.kappa);
      if (analytic.value < cost - 1e-9) ++estimate.bound_violations;
    }
  }

  const double count = static_cast<double>(samples);
  estimate.mean = sum / count;
  if (samples > 1) {
    const double variance =
        std::max(sq_sum - count * estimate.mean * estimate.mean, 0.0) /
        (count - 1.0);
    estimate.std_error = std::sqrt(variance / count);
  }
  return estimate;
}

std::string to_string(AlertKind kind) {
  switch (kind) {
    case AlertKind::ScarcityFactorBreach:
      return "scarcity_factor_breach";
    case AlertKind::ConsecutiveScarcity:
      return "consecutive_scarcity";
  }
  return "unknown";
}

std::vector<GovernanceAlert> governance_monitor(
    const std::vector<PeriodRecord>& history,
    const GovernanceTolerances& tol) {
  require(!history.empty(), "governance: empty history");
  require(tol.max_lambda >= 0.0 && tol.max_lambda <= 1.0,
          "governance: max_lambda must lie in [0, 1]");
  require(tol.max_consecutive_scarcity >= 1,
          "governance: scarcity run threshold must be >= 1");

  const std::size_t window =
      tol.review_window == 0 ? history.size()
                             : std::min(tol.review_window, history.size());
  const std::size_t begin = history.size() - window;

  std::vector<GovernanceAlert> alerts;
  std::size_t run_length = 0;
  std::size_t run_start = 0;
  for (std::size_t i = begin; i < history.size(); ++i) {
    const PeriodRecord& record = history[i];
    if (record.lambda > tol.max_lambda) {
      alerts.push_back({AlertKind::ScarcityFactorBreach, record.period,
                        record.lambda, tol.max_lambda, 0, 0});
    }
    if (record.regime == Regime::Scarcity) {
      if (run_length == 0) run_start = record.period;
      ++run_length;
      if (run_length == tol.max_consecutive_scarcity) {
        alerts.push_back({AlertKind::ConsecutiveScarcity, record.period,
                          static_cast<double>(run_length),
                          static_cast<double>(tol.max_consecutive_scarcity),
                          run_start, run_length});
      }
    } else {
      run_length = 0;
    }
  }
  return alerts;
}

}  // namespace slackclear
