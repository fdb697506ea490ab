#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slackclear/mechanism.hpp"
#include "slackclear/rng.hpp"

namespace slackclear {

// Regulated penalty band with per-period realizations. Prices are currency
// per resource unit.
struct CollarConfig {
  double kappa_lo = 0.0;               // lower collar bound
  double kappa_hi = 0.0;               // upper collar bound
  std::vector<double> kappa_schedule;  // realized penalty rate per period
  std::vector<double> p_bar;           // spot-price upper bound per period
  double lambda_floor = 1.0;           // published scarcity floor, in (0, 1]
  double p_forward = 0.0;              // forward price at decision time

  CollarConfig(double lo, double hi, std::vector<double> schedule,
               std::vector<double> price_caps, double scarcity_floor,
               double forward_price);

  std::size_t periods() const { return kappa_schedule.size(); }
};

// One settled policy period: clearing aggregates, residual overages and the
// penalties they attract at the period's rate.
struct PeriodRecord {
  std::size_t period = 0;
  double total_overage = 0.0;  // X_t
  double total_slack = 0.0;    // I_t
  double lambda = 0.0;         // scarcity factor
  Regime regime = Regime::Boundary;
  double kappa = 0.0;
  std::vector<double> payoffs;
  std::vector<double> residuals;  // (v_i - covered_i)_+
  std::vector<double> penalties;  // kappa * residual
  double total_penalty = 0.0;
  double budget_residual = 0.0;
};

// Clears one period with the linear rule and prices the uncovered residual
// overage at the period's penalty rate. In scarcity the residuals equal
// lambda * v_i.
PeriodRecord settle_period(const ClaimProfile& claims, const Entitlements& ent,
                           const CollarConfig& collar, std::size_t period,
                           double boundary_tol = kBoundaryTol);

struct MarginalPenalty {
  double value = 0.0;
  bool scarcity = false;  // false: slack region, zero marginal penalty
};

// Right marginal penalty of one extra unit of own overage, holding the
// others' overage and the total slack fixed:
//   kappa * (1 - I * (X - v_j) / X^2)   when X > I,
//   0                                   otherwise.
// In scarcity the value is at least kappa * lambda.
MarginalPenalty marginal_penalty(double own_overage, double others_overage,
                                 double total_slack, double kappa);

// Finite-difference check of the marginal penalty through an actual
// settlement (central step, falling back to the right difference next to the
// X == I kink or v_j == 0).
double marginal_penalty_fd(double own_overage, double others_overage,
                           double total_slack, double kappa, double step);

enum class ArbitrageDecision {
  ForwardStrictlyCheaper,
  ForwardWeaklyCheaper,
  Inconclusive,
};

std::string to_string(ArbitrageDecision decision);

struct ArbitrageRecord {
  std::size_t period = 0;
  double kappa = 0.0;
  double p_bar = 0.0;
  double penalty_floor = 0.0;    // kappa * lambda_floor
  double price_cap_floor = 0.0;  // p_bar * lambda_floor
  ArbitrageDecision decision = ArbitrageDecision::Inconclusive;
};

// Per period: when the penalty rate covers the price cap, a waiting emitter
// expects at least p_bar * lambda_floor per unit, so the forward at p_forward
// is weakly (strictly) cheaper when p_bar * lambda_floor >= (>) p_forward.
// Periods with kappa below the price cap are inconclusive.
std::vector<ArbitrageRecord> arbitrage_check(const CollarConfig& collar);

struct ScarcityScenario {
  double total_overage = 0.0;
  double total_slack = 0.0;
  double kappa = 0.0;
};

using ScenarioSampler = std::function<ScarcityScenario(Rng&)>;

struct WaitingCostEstimate {
  double mean = 0.0;       // Monte Carlo estimate of E[kappa * lambda]
  double std_error = 0.0;
  std::size_t samples = 0;
  std::size_t bound_checks = 0;      // scarcity draws tested
  std::size_t bound_violations = 0;  // marginal penalty below kappa * lambda
};

// Estimates the expected per-unit cost of waiting for clearing. Each scarcity
// draw also spot-checks that the analytic marginal penalty at a random
// overage split stays above kappa * lambda.
WaitingCostEstimate expected_waiting_cost(const ScenarioSampler& sampler,
                                          std::size_t samples,
                                          std::uint64_t seed);

struct GovernanceTolerances {
  double max_lambda = 1.0;                  // alert above this (strict)
  std::size_t max_consecutive_scarcity = 1;  // alert at runs this long
  std::size_t review_window = 0;             // trailing periods scanned; 0 = all
};

enum class AlertKind { ScarcityFactorBreach, ConsecutiveScarcity };

std::string to_string(AlertKind kind);

struct GovernanceAlert {
  AlertKind kind;
  std::size_t period;      // period that triggered the alert
  double value;            // lambda, or the run length
  double threshold;
  std::size_t run_start;   // ConsecutiveScarcity only
  std::size_t run_length;  // ConsecutiveScarcity only
};

// Scans the trailing review window of the settlement history. Breaches are
// strict: lambda equal to the threshold does not alert. A scarcity run alerts
// once, at the period where it reaches the configured length.
std::vector<GovernanceAlert> governance_monitor(
    const std::vector<PeriodRecord>& history,
    const GovernanceTolerances& tol);

}  // namespace slackclear
