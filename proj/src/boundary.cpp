#include "slackclear/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slackclear/rng.hpp"

namespace slackclear {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

BoundaryJump boundary_jump(const std::vector<double>& overage, double alpha) {
  require(!overage.empty(), "boundary jump: need at least one overage");
  const AlphaRule rule(alpha);
  for (double v : overage) {
    require(std::isfinite(v) && v > 0.0,
            "boundary jump: overages must be strictly positive");
  }

  BoundaryJump result;
  result.overage = overage;
  result.alpha = alpha;
  result.slack_limit = overage;

  double total = 0.0;
  double power_total = 0.0;
  for (double v : overage) {
    total += v;
    power_total += std::exp(alpha * std::log(v));
  }
  result.scarcity_limit.reserve(overage.size());
  result.jump.reserve(overage.size());
  for (double v : overage) {
    const double scarcity = total * std::exp(alpha * std::log(v)) / power_total;
    result.scarcity_limit.push_back(scarcity);
    const double gap = v - scarcity;
    result.jump.push_back(gap);
    result.sup_norm = std::max(result.sup_norm, std::abs(gap));
  }
  return result;
}

std::vector<ContinuityRow> continuity_scan(const std::vector<double>& alphas,
                                           std::size_t v_samples,
                                           std::size_t players,
                                           std::uint64_t seed) {
  require(players >= 1, "continuity scan: need at least one player");
  require(v_samples >= 1, "continuity scan: need at least one sample");

  std::vector<ContinuityRow> table;
  table.reserve(alphas.size());
  for (double alpha : alphas) {
    ContinuityRow row;
    row.alpha = alpha;
    row.samples = v_samples;

    Rng rng(seed);  // same vectors for every alpha
    double sum = 0.0;
    std::vector<double> v(players);
    for (std::size_t s = 0; s < v_samples; ++s) {
      for (auto& x : v) x = rng.uniform(0.1, 1.0);
      if (players >= 2) {
        // Keep at least two components apart so positive jumps are not
        // swamped by near-equal draws.
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        if (*hi - *lo < 0.01) *hi += 0.5;
      }
      const double sup = boundary_jump(v, alpha).sup_norm;
      row.max_sup_norm = std::max(row.max_sup_norm, sup);
      sum += sup;
    }
    row.mean_sup_norm = sum / static_cast<double>(v_samples);
    table.push_back(row);
  }
  return table;
}

NoiseBiasResult noise_bias(const Entitlements& ent, const ClaimProfile& base,
                           double alpha, double epsilon, std::size_t samples,
                           std::uint64_t seed, double boundary_tol) {
  require(samples >= 1, "noise bias: need at least one sample");
  require(std::isfinite(epsilon) && epsilon > 0.0,
          "noise bias: epsilon must be positive");
  const AlphaRule rule(alpha);
  const OverageSlack os = decompose(base, ent);
  require(std::abs(os.total_overage - os.total_slack) <= boundary_tol,
          "noise bias: base profile must sit on the X == I boundary");

  const std::size_t n = base.size();
  // Accumulate deviations from the boundary allocation (== the overage
  // vector) so the variance sums do not cancel.
  std::vector<double> dev_sum(n, 0.0);
  std::vector<double> dev_sq_sum(n, 0.0);

  Rng rng(seed);
  std::vector<double> noisy(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const double shifted = base.claims[j] + rng.uniform(-epsilon, epsilon);
      noisy[j] = std::clamp(shifted, 0.0, base.bound);
    }
    const ClearingOutcome out = clear_alpha(ClaimProfile(noisy, base.bound),
                                            ent, rule, boundary_tol);
    for (std::size_t j = 0; j < n; ++j) {
      const double dev = out.covered[j] - os.overage[j];
      dev_sum[j] += dev;
      dev_sq_sum[j] += dev * dev;
    }
  }

  NoiseBiasResult result;
  result.alpha = alpha;
  result.epsilon = epsilon;
  result.samples = samples;
  result.bias.resize(n);
  result.std_error.assign(n, 0.0);
  const double count = static_cast<double>(samples);
  for (std::size_t j = 0; j < n; ++j) {
    const double mean = dev_sum[j] / count;
    result.bias[j] = mean;
    result.bias_norm = std::max(result.bias_norm, std::abs(mean));
    if (samples > 1) {
      const double variance =
          std::max(dev_sq_sum[j] - count * mean * mean, 0.0) / (count - 1.0);
      result.std_error[j] = std::sqrt(variance / count);
    }
  }
  return result;
}

}  // namespace slackclear
