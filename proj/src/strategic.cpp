#include "slackclear/strategic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "slackclear/rng.hpp"

namespace slackclear {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_player(std::size_t player, std::size_t n) {
  require(player < n, "player index out of range");
}

void check_dominance_bound(const Entitlements& ent, double bound) {
  require(bound > ent.max_level(),
          "dominance analysis requires the action bound to exceed every "
          "entitlement");
}

void check_coalition(const std::vector<std::size_t>& coalition,
                     std::size_t n) {
  require(!coalition.empty(), "coalition must be nonempty");
  std::vector<bool> seen(n, false);
  for (std::size_t i : coalition) {
    require(i < n, "coalition index out of range");
    require(!seen[i], "coalition indices must be distinct");
    seen[i] = true;
  }
}

}  // namespace

double payoff_of(std::size_t player, double claim, const ClaimProfile& others,
                 const Entitlements& ent, const AlphaRule& rule,
                 double boundary_tol) {
  check_player(player, others.size());
  std::vector<double> claims = others.claims;
  claims[player] = claim;
  const ClaimProfile profile(std::move(claims), others.bound);
  return clear_alpha(profile, ent, rule, boundary_tol).payoffs[player];
}

double payoff_branch_formula(std::size_t player, double claim,
                             const ClaimProfile& others,
                             const Entitlements& ent, const AlphaRule& rule,
                             double boundary_tol) {
  check_player(player, others.size());
  require(others.size() == ent.size(),
          "profile and entitlements differ in length");
  const double level = ent.values[player];
  if (claim <= level) return claim;

  // Opponent aggregates: overage total, slack total, alpha-power total.
  double opp_overage = 0.0;
  double opp_slack = 0.0;
  double opp_power = 0.0;
  for (std::size_t m = 0; m < others.size(); ++m) {
    if (m == player) continue;
    const double c = others.claims[m];
    const double l = ent.values[m];
    if (c > l) {
      const double v = c - l;
      opp_overage += v;
      opp_power += std::exp(rule.alpha * std::log(v));
    } else {
      opp_slack += l - c;
    }
  }

  const double y = claim - level;
  if (opp_overage + y <= opp_slack + boundary_tol) {
    return level + y;
  }
  const double own_power = std::exp(rule.alpha * std::log(y));
  return level + opp_slack * own_power / (opp_power + own_power);
}

std::vector<double> claim_grid(double bound, std::size_t grid_size,
                               const std::vector<double>& must_include) {
  require(grid_size >= 2, "grid needs at least two points");
  require(std::isfinite(bound) && bound > 0.0, "grid bound must be positive");
  std::vector<double> grid;
  grid.reserve(grid_size + must_include.size());
  for (std::size_t i = 0; i < grid_size; ++i) {
    grid.push_back(bound * static_cast<double>(i) /
                   static_cast<double>(grid_size - 1));
  }
  for (double point : must_include) {
    if (point >= 0.0 && point <= bound) grid.push_back(point);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

BestResponseReport best_response(std::size_t player,
                                 const ClaimProfile& others,
                                 const Entitlements& ent,
                                 const AlphaRule& rule, std::size_t grid_size,
                                 double mono_tol, double boundary_tol) {
  check_player(player, others.size());
  check_dominance_bound(ent, others.bound);

  // Opponent aggregates determine the slack/scarcity switch point.
  double opp_overage = 0.0;
  double opp_slack = 0.0;
  for (std::size_t m = 0; m < others.size(); ++m) {
    if (m == player) continue;
    const double c = others.claims[m];
    const double l = ent.values[m];
    if (c > l) {
      opp_overage += c - l;
    } else {
      opp_slack += l - c;
    }
  }
  const double level = ent.values[player];
  const double kink = level + std::max(opp_slack - opp_overage, 0.0);

  BestResponseReport report;
  report.player = player;
  report.grid = claim_grid(others.bound, grid_size,
                           {0.0, level, kink, others.bound});
  report.payoff_curve.reserve(report.grid.size());
  for (double claim : report.grid) {
    report.payoff_curve.push_back(
        payoff_of(player, claim, others, ent, rule, boundary_tol));
  }

  std::size_t best_index = 0;
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    if (report.payoff_curve[i] >= report.payoff_curve[best_index]) {
      best_index = i;  // >= prefers the larger claim on ties
    }
    if (i > 0) {
      const double drop = report.payoff_curve[i - 1] - report.payoff_curve[i];
      if (drop > mono_tol) {
        report.monotone = false;
        if (!report.first_violation) {
          report.first_violation = BestResponseReport::Violation{
              report.grid[i - 1], report.grid[i], drop};
        }
      }
      report.max_drop = std::max(report.max_drop, drop);
    }
  }
  report.argmax_claim = report.grid[best_index];
  report.argmax_payoff = report.payoff_curve[best_index];
  return report;
}

DominanceSummary dominance_sweep(const Entitlements& ent, double bound,
                                 const AlphaRule& rule, std::size_t trials,
                                 std::size_t grid_size, std::uint64_t seed,
                                 double mono_tol, double boundary_tol) {
  check_dominance_bound(ent, bound);
  const std::size_t n = ent.size();

  DominanceSummary summary;
  summary.alpha = rule.alpha;
  summary.trials = trials;
  summary.players = n;
  summary.grid_size = grid_size;

  Rng rng(seed);
  std::vector<double> claims(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (auto& c : claims) c = rng.uniform(0.0, bound);
    const ClaimProfile opponents(claims, bound);
    for (std::size_t player = 0; player < n; ++player) {
      const BestResponseReport report = best_response(
          player, opponents, ent, rule, grid_size, mono_tol, boundary_tol);
      ++summary.reports;
      if (!report.monotone) ++summary.violations;
      summary.worst_drop = std::max(summary.worst_drop, report.max_drop);
      if (report.payoff_curve.back() >= report.argmax_payoff - mono_tol) {
        ++summary.argmax_at_bound;
      }
    }
  }
  return summary;
}

NashCheckResult cooperative_nash_check(const Entitlements& ent, double bound,
                                       std::size_t grid_size,
                                       double boundary_tol) {
  check_dominance_bound(ent, bound);
  const ClaimProfile honest(ent.values, bound);
  const AlphaRule linear(1.0);

  NashCheckResult result;
  for (std::size_t player = 0; player < ent.size(); ++player) {
    const double level = ent.values[player];
    const std::vector<double> grid =
        claim_grid(bound, grid_size, {0.0, level, bound});
    for (double claim : grid) {
      const double payoff =
          payoff_of(player, claim, honest, ent, linear, boundary_tol);
      // Above the entitlement the opponents leave zero slack, so the payoff
      // is the entitlement exactly; below it the cooperator gets the claim.
      const bool gains = claim >= level ? payoff != level : payoff > level;
      if (gains) {
        result.is_nash = false;
        result.witness =
            NashCheckResult::Witness{player, claim, payoff, level};
        return result;
      }
    }
  }
  return result;
}

double coalition_payoff(const ClaimProfile& profile, const Entitlements& ent,
                        const std::vector<std::size_t>& coalition,
                        double boundary_tol) {
  check_coalition(coalition, profile.size());
  const ClearingOutcome out = clear_linear(profile, ent, boundary_tol);
  double sum = 0.0;
  for (std::size_t i : coalition) sum += out.payoffs[i];
  return sum;
}

double coalition_payoff_closed_form(const ClaimProfile& profile,
                                    const Entitlements& ent,
                                    const std::vector<std::size_t>& coalition,
                                    double boundary_tol) {
  check_coalition(coalition, profile.size());
  const OverageSlack os = decompose(profile, ent);
  const ClearingOutcome out = clear_linear(profile, ent, boundary_tol);
  double baseline = 0.0;
  double coalition_slack = 0.0;
  double coalition_covered = 0.0;
  for (std::size_t i : coalition) {
    baseline += ent.values[i];
    coalition_slack += os.slack[i];
    coalition_covered += out.covered[i];
  }
  return baseline - coalition_slack + coalition_covered;
}

namespace {

// One deviation point evaluated with reused buffers. `direct` sums the
// players' settlement payoffs the way clear_linear computes them (agreement
// with the public route is covered by tests); `closed_form` takes the
// slack-accounting route  sum_K L - I_K + sum_{K defectors} covered.
struct CoalitionEvaluator {
  const Entitlements& ent;
  const std::vector<std::size_t>& coalition;
  double baseline_sum;
  double boundary_tol;
  std::vector<double> claims;

  double direct = 0.0;
  double closed_form = 0.0;

  void evaluate() {
    const std::size_t n = ent.size();
    double total_overage = 0.0;
    double total_slack = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double gap = claims[j] - ent.values[j];
      if (gap > 0.0) {
        total_overage += gap;
      } else {
        total_slack -= gap;
      }
    }
    const bool scarce = total_overage - total_slack > boundary_tol;
    const double ratio = scarce ? total_slack / total_overage : 1.0;

    direct = 0.0;
    double coalition_slack = 0.0;
    double coalition_covered = 0.0;
    for (std::size_t i : coalition) {
      const double claim = claims[i];
      const double level = ent.values[i];
      if (claim > level) {
        const double covered = ratio * (claim - level);
        direct += level + covered;
        coalition_covered += covered;
      } else {
        direct += claim;
        coalition_slack += level - claim;
      }
    }
    closed_form = baseline_sum - coalition_slack + coalition_covered;
  }
};

}  // namespace

CoalitionReport coalition_proofness_search(
    const Entitlements& ent, double bound,
    const std::vector<std::size_t>& coalition, std::size_t grid_size,
    std::size_t eval_cap, double tol, double boundary_tol) {
  check_dominance_bound(ent, bound);
  check_coalition(coalition, ent.size());

  std::vector<std::vector<double>> grids;
  grids.reserve(coalition.size());
  double points = 1.0;
  for (std::size_t i : coalition) {
    grids.push_back(claim_grid(bound, grid_size, {0.0, ent.values[i], bound}));
    points *= static_cast<double>(grids.back().size());
  }
  if (points * static_cast<double>(coalition.size()) >
      static_cast<double>(eval_cap)) {
    throw std::invalid_argument(
        "coalition search: grid exceeds the evaluation cap");
  }

  CoalitionReport report;
  report.coalition = coalition;
  for (std::size_t i : coalition) report.baseline_sum += ent.values[i];

  CoalitionEvaluator eval{ent, coalition, report.baseline_sum, boundary_tol,
                          std::vector<double>(ent.size(), bound)};
  report.best_deviation_sum = -1.0;  // payoffs are nonnegative

  std::vector<std::size_t> index(coalition.size(), 0);
  bool done = false;
  while (!done) {
    for (std::size_t k = 0; k < coalition.size(); ++k) {
      eval.claims[coalition[k]] = grids[k][index[k]];
    }
    eval.evaluate();
    ++report.evaluations;
    report.closed_form_check = std::max(
        report.closed_form_check, std::abs(eval.direct - eval.closed_form));
    if (eval.direct >= report.best_deviation_sum) {
      report.best_deviation_sum = eval.direct;
      report.best_claims.clear();
      for (std::size_t k = 0; k < coalition.size(); ++k) {
        report.best_claims.push_back(grids[k][index[k]]);
      }
    }

    // Mixed-radix increment, last member fastest.
    std::size_t k = coalition.size();
    while (k > 0) {
      --k;
      if (++index[k] < grids[k].size()) break;
      index[k] = 0;
      if (k == 0) done = true;
    }
  }

  report.bound_satisfied = report.best_deviation_sum <= report.baseline_sum + tol;
  return report;
}

}  // namespace slackclear
