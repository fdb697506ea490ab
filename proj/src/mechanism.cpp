#include "slackclear/mechanism.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace slackclear {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// v^alpha evaluated as exp(alpha * ln v); only called for v > 0. Zero
// overages never enter the scarcity denominator.
double overage_power(double v, double alpha) {
  return std::exp(alpha * std::log(v));
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Slack:
      return "slack";
    case Regime::Boundary:
      return "boundary";
    case Regime::Scarcity:
      return "scarcity";
  }
  return "unknown";
}

Entitlements::Entitlements(std::vector<double> levels)
    : values(std::move(levels)) {
  require(!values.empty(), "entitlements: need at least one player");
  for (double level : values) {
    require(std::isfinite(level) && level > 0.0,
            "entitlements: every entitlement must be finite and > 0");
  }
}

double Entitlements::total() const {
  double sum = 0.0;
  for (double level : values) sum += level;
  return sum;
}

double Entitlements::max_level() const {
  double best = values.front();
  for (double level : values) best = std::max(best, level);
  return best;
}

ClaimProfile::ClaimProfile(std::vector<double> claim_values,
                           double action_bound)
    : claims(std::move(claim_values)), bound(action_bound) {
  require(!claims.empty(), "claims: need at least one player");
  require(std::isfinite(bound) && bound >= 0.0,
          "claims: action bound must be finite and >= 0");
  for (double claim : claims) {
    require(std::isfinite(claim) && claim >= 0.0,
            "claims: every claim must be finite and >= 0");
    require(claim <= bound, "claims: claim exceeds the action bound");
  }
}

AlphaRule::AlphaRule(double exponent) : alpha(exponent) {
  require(std::isfinite(alpha) && alpha > 0.0,
          "alpha rule: exponent must be finite and > 0");
}

OverageSlack decompose(const ClaimProfile& profile, const Entitlements& ent) {
  require(profile.size() == ent.size(),
          "decompose: profile and entitlements differ in length");
  const std::size_t n = profile.size();

  OverageSlack os;
  os.overage.assign(n, 0.0);
  os.slack.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double claim = profile.claims[j];
    const double level = ent.values[j];
    if (claim > level) {
      os.overage[j] = claim - level;
      os.defectors.push_back(j);
    } else {
      os.slack[j] = level - claim;  // zero at the tie C_j == L_j
      os.cooperators.push_back(j);
    }
    os.total_overage += os.overage[j];
    os.total_slack += os.slack[j];
  }
  return os;
}

Regime classify_regime(double total_overage, double total_slack,
                       double boundary_tol) {
  const double gap = total_overage - total_slack;
  if (std::abs(gap) <= boundary_tol) return Regime::Boundary;
  return gap < 0.0 ? Regime::Slack : Regime::Scarcity;
}

namespace {

ClearingOutcome settle(const ClaimProfile& profile, const Entitlements& ent,
                       const OverageSlack& os, std::vector<double> covered,
                       Regime regime, double alpha) {
  ClearingOutcome outcome;
  outcome.covered = std::move(covered);
  outcome.payoffs.assign(profile.size(), 0.0);
  outcome.regime = regime;
  outcome.alpha = alpha;
  for (std::size_t j : os.cooperators) {
    outcome.payoffs[j] = profile.claims[j];
  }
  for (std::size_t j : os.defectors) {
    outcome.payoffs[j] = ent.values[j] + outcome.covered[j];
  }
  outcome.budget_residual = budget_identity_residual(outcome, ent, os);
  return outcome;
}

}  // namespace

ClearingOutcome clear_linear(const ClaimProfile& profile,
                             const Entitlements& ent, double boundary_tol) {
  const OverageSlack os = decompose(profile, ent);
  const Regime regime =
      classify_regime(os.total_overage, os.total_slack, boundary_tol);

  std::vector<double> covered(profile.size(), 0.0);
  if (regime == Regime::Scarcity) {
    assert(os.total_overage > 0.0 && !os.defectors.empty());
    const double ratio = os.total_slack / os.total_overage;
    for (std::size_t j : os.defectors) covered[j] = ratio * os.overage[j];
  } else {
    for (std::size_t j : os.defectors) covered[j] = os.overage[j];
  }
  return settle(profile, ent, os, std::move(covered), regime, 1.0);
}

ClearingOutcome clear_alpha(const ClaimProfile& profile,
                            const Entitlements& ent, const AlphaRule& rule,
                            double boundary_tol) {
  const OverageSlack os = decompose(profile, ent);
  const Regime regime =
      classify_regime(os.total_overage, os.total_slack, boundary_tol);

  std::vector<double> covered(profile.size(), 0.0);
  if (regime == Regime::Scarcity) {
    // X > 0 forces a strictly positive overage somewhere; a defector with
    // zero overage cannot exist because v_j > 0 iff C_j > L_j.
    assert(!os.defectors.empty());
    double denom = 0.0;
    for (std::size_t j : os.defectors) {
      assert(os.overage[j] > 0.0);
      denom += overage_power(os.overage[j], rule.alpha);
    }
    assert(denom > 0.0);
    for (std::size_t j : os.defectors) {
      covered[j] =
          os.total_slack * overage_power(os.overage[j], rule.alpha) / denom;
    }
  } else {
    for (std::size_t j : os.defectors) covered[j] = os.overage[j];
  }
  return settle(profile, ent, os, std::move(covered), regime, rule.alpha);
}

double budget_identity_residual(const ClearingOutcome& outcome,
                                const Entitlements& ent,
                                const OverageSlack& os) {
  double total_payoff = 0.0;
  for (double payoff : outcome.payoffs) total_payoff += payoff;
  const double unused = std::max(os.total_slack - os.total_overage, 0.0);
  return total_payoff - (ent.total() - unused);
}

double scarcity_factor(double total_overage, double total_slack) {
  require(total_overage >= 0.0 && total_slack >= 0.0,
          "scarcity factor: aggregates must be nonnegative");
  if (total_overage == 0.0) return 0.0;
  return std::max(0.0, (total_overage - total_slack) / total_overage);
}

}  // namespace slackclear
