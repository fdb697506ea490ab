#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slackclear/mechanism.hpp"

namespace slackclear {

// Payoff of `player` when it claims `claim` against the other entries of
// `others` (the player's own entry in `others` is ignored). Evaluated through
// the full clearing rule.
double payoff_of(std::size_t player, double claim, const ClaimProfile& others,
                 const Entitlements& ent, const AlphaRule& rule,
                 double boundary_tol = kBoundaryTol);

// The same payoff from the one-player reduced form: with y = (claim - L_j)_+
// held against the opponents' fixed aggregates, the slack branch pays
// L_j + y and the scarcity branch pays L_j + I * y^a / (S + y^a) where S sums
// the alpha powers of the opponents' positive overages. Agrees with
// payoff_of within rounding; kept as an independent route for testing.
double payoff_branch_formula(std::size_t player, double claim,
                             const ClaimProfile& others,
                             const Entitlements& ent, const AlphaRule& rule,
                             double boundary_tol = kBoundaryTol);

// Uniform grid over [0, bound] with `must_include` points spliced in
// (values outside [0, bound] are dropped). Sorted, deduplicated.
std::vector<double> claim_grid(double bound, std::size_t grid_size,
                               const std::vector<double>& must_include);

struct BestResponseReport {
  std::size_t player = 0;
  std::vector<double> grid;
  std::vector<double> payoff_curve;
  double argmax_claim = 0.0;   // ties broken toward the largest claim
  double argmax_payoff = 0.0;
  bool monotone = true;        // payoff_curve nondecreasing within tolerance
  double max_drop = 0.0;       // largest adjacent decrease observed
  struct Violation {
    double claim_from;
    double claim_to;
    double drop;
  };
  std::optional<Violation> first_violation;
};

// Scans the player's payoff along a claim grid that always contains 0, L_j,
// the slack/scarcity switch point and the bound M.
// Requires M > max_j L_j.
BestResponseReport best_response(std::size_t player,
                                 const ClaimProfile& others,
                                 const Entitlements& ent,
                                 const AlphaRule& rule, std::size_t grid_size,
                                 double mono_tol = kNumericTol,
                                 double boundary_tol = kBoundaryTol);

struct DominanceSummary {
  double alpha = 1.0;
  std::size_t trials = 0;
  std::size_t players = 0;
  std::size_t grid_size = 0;
  std::size_t reports = 0;          // trials * players
  std::size_t violations = 0;       // reports with a monotone violation
  double worst_drop = 0.0;
  std::size_t argmax_at_bound = 0;  // reports where M attains the max
};

// Random-opponent sweep of best_response over every player. At alpha == 1 the
// payoff is nondecreasing in the own claim, so `violations` must be zero;
// other exponents are measured and reported only.
DominanceSummary dominance_sweep(const Entitlements& ent, double bound,
                                 const AlphaRule& rule, std::size_t trials,
                                 std::size_t grid_size, std::uint64_t seed,
                                 double mono_tol = kNumericTol,
                                 double boundary_tol = kBoundaryTol);

struct NashCheckResult {
  bool is_nash = true;
  struct Witness {
    std::size_t player;
    double claim;
    double payoff;
    double baseline;
  };
  std::optional<Witness> witness;
};

// Checks that no unilateral grid deviation from the honest profile C = L
// gains: deviations above L_j pay exactly L_j, deviations below pay the
// (smaller) claim. Requires bound > max_j L_j.
NashCheckResult cooperative_nash_check(const Entitlements& ent, double bound,
                                       std::size_t grid_size,
                                       double boundary_tol = kBoundaryTol);

// Aggregate payoff of a coalition under linear clearing.
double coalition_payoff(const ClaimProfile& profile, const Entitlements& ent,
                        const std::vector<std::size_t>& coalition,
                        double boundary_tol = kBoundaryTol);

// The same aggregate via the slack-accounting identity
//   sum_K L_i - I_K + sum_{K defectors} covered_i,
// where I_K is the coalition's own slack. Holds for any profile.
double coalition_payoff_closed_form(const ClaimProfile& profile,
                                    const Entitlements& ent,
                                    const std::vector<std::size_t>& coalition,
                                    double boundary_tol = kBoundaryTol);

struct CoalitionReport {
  std::vector<std::size_t> coalition;
  double baseline_sum = 0.0;        // sum of coalition entitlements
  double best_deviation_sum = 0.0;  // best aggregate payoff found
  std::vector<double> best_claims;  // deviation attaining it
  bool bound_satisfied = true;      // best <= baseline + tolerance
  double closed_form_check = 0.0;   // max |direct - identity| over the search
  std::size_t evaluations = 0;
};

// Exhaustive grid search over the coalition's claims with the complement
// pinned at the bound M. Each member's grid contains 0, L_i and M. Refuses
// configurations with more than eval_cap grid evaluations
// (|K| * grid_size^|K|).
CoalitionReport coalition_proofness_search(
    const Entitlements& ent, double bound,
    const std::vector<std::size_t>& coalition, std::size_t grid_size,
    std::size_t eval_cap = 10'000'000, double tol = kNumericTol,
    double boundary_tol = kBoundaryTol);

}  // namespace slackclear
