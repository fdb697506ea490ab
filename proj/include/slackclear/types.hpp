#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace slackclear {

// Absolute tolerance on X - I used to tag the boundary regime. A profile with
// |X - I| <= boundary_tol is classified Boundary and cleared with full
// coverage (the slack-side branch).
inline constexpr double kBoundaryTol = 1e-12;

// Default tolerance for aggregate identities and monotonicity comparisons.
inline constexpr double kNumericTol = 1e-9;

enum class Regime { Slack, Boundary, Scarcity };

std::string to_string(Regime regime);

// Per-player entitlements L_j. Every entry must be strictly positive.
struct Entitlements {
  std::vector<double> values;

  explicit Entitlements(std::vector<double> levels);

  std::size_t size() const { return values.size(); }
  double total() const;
  double max_level() const;
};

// A claim vector C with its common action bound M, 0 <= C_j <= M.
struct ClaimProfile {
  std::vector<double> claims;
  double bound;

  ClaimProfile(std::vector<double> claim_values, double action_bound);

  std::size_t size() const { return claims.size(); }
};

// Overage/slack split of a profile. overage and slack come from the
// positive-part definitions (one side is assigned literal zero), so
// overage[j] * slack[j] == 0 holds exactly, not just within rounding.
struct OverageSlack {
  std::vector<double> overage;           // (C_j - L_j)_+
  std::vector<double> slack;             // (L_j - C_j)_+
  double total_overage = 0.0;            // X
  double total_slack = 0.0;              // I
  std::vector<std::size_t> cooperators;  // players with C_j <= L_j
  std::vector<std::size_t> defectors;    // players with C_j >  L_j
};

// Exponent of the overage-power clearing family. alpha > 0; alpha == 1 is the
// linear rule.
struct AlphaRule {
  double alpha;

  explicit AlphaRule(double exponent);
};

struct ClearingOutcome {
  std::vector<double> covered;  // covered overage per player
  std::vector<double> payoffs;  // settlement payoff per player
  Regime regime;
  double alpha;
  double budget_residual;  // sum(payoffs) - (sum(L) - max(I - X, 0))
};

}  // namespace slackclear
