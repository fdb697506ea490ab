#pragma once

#include <cstdint>
#include <vector>

#include "slackclear/mechanism.hpp"

namespace slackclear {

// One-sided limits of the covered-overage vector at the balanced instance
// X == I == sum(v). The slack side covers v in full; the scarcity side
// allocates X in proportion to v^alpha. Both sides allocate exactly sum(v);
// the jump is their difference.
struct BoundaryJump {
  std::vector<double> overage;
  double alpha = 1.0;
  std::vector<double> slack_limit;     // == overage
  std::vector<double> scarcity_limit;  // X * v^alpha / sum(v^alpha)
  std::vector<double> jump;            // slack_limit - scarcity_limit
  double sup_norm = 0.0;
};

// Requires every component strictly positive and alpha > 0. sup_norm is zero
// exactly when alpha == 1 or all components are equal.
BoundaryJump boundary_jump(const std::vector<double>& overage, double alpha);

struct ContinuityRow {
  double alpha = 1.0;
  std::size_t samples = 0;
  double max_sup_norm = 0.0;
  double mean_sup_norm = 0.0;
};

// Per alpha, the largest boundary jump over random positive overage vectors
// (components in [0.1, 1), spread apart so at least two differ). The same
// vectors are used for every alpha.
std::vector<ContinuityRow> continuity_scan(const std::vector<double>& alphas,
                                           std::size_t v_samples,
                                           std::size_t players,
                                           std::uint64_t seed);

struct NoiseBiasResult {
  double alpha = 1.0;
  double epsilon = 0.0;
  std::size_t samples = 0;
  std::vector<double> bias;       // mean covered minus the boundary coverage
  std::vector<double> std_error;  // per-component standard error of the mean
  double bias_norm = 0.0;         // max |bias_j|
};

// Perturbs every claim with independent uniform noise on [-epsilon, epsilon]
// (clamped to [0, M]), reclears, and reports the mean covered overage against
// the deterministic boundary allocation. The base profile must sit at X == I
// within boundary_tol.
NoiseBiasResult noise_bias(const Entitlements& ent, const ClaimProfile& base,
                           double alpha, double epsilon, std::size_t samples,
                           std::uint64_t seed,
                           double boundary_tol = kBoundaryTol);

}  // namespace slackclear
