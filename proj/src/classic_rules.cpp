#include "slackclear/classic_rules.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slackclear/mechanism.hpp"

namespace slackclear {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

std::string to_string(RationingRule rule) {
  switch (rule) {
    case RationingRule::ProportionalOnClaims:
      return "proportional_on_claims";
    case RationingRule::ConstrainedEqualAwards:
      return "constrained_equal_awards";
    case RationingRule::SlackClearing:
      return "slack_clearing";
  }
  return "unknown";
}

ClaimsProblem::ClaimsProblem(std::vector<double> claim_values,
                             std::vector<double> entitlement_values,
                             double estate_amount)
    : claims(std::move(claim_values)),
      entitlements(std::move(entitlement_values)),
      estate(estate_amount) {
  require(!claims.empty(), "claims problem: need at least one claimant");
  require(claims.size() == entitlements.size(),
          "claims problem: claims and entitlements differ in length");
  require(std::isfinite(estate) && estate >= 0.0,
          "claims problem: estate must be finite and >= 0");
  for (double c : claims) {
    require(std::isfinite(c) && c >= 0.0,
            "claims problem: claims must be finite and >= 0");
  }
  for (double l : entitlements) {
    require(std::isfinite(l) && l > 0.0,
            "claims problem: entitlements must be finite and > 0");
  }
}

double ClaimsProblem::total_claims() const {
  return std::accumulate(claims.begin(), claims.end(), 0.0);
}

AwardVector proportional_on_claims(const ClaimsProblem& problem) {
  AwardVector result;
  result.rule = RationingRule::ProportionalOnClaims;
  const double total = problem.total_claims();
  if (total == 0.0) {
    result.awards.assign(problem.size(), 0.0);
    result.unused_estate = problem.estate;
    return result;
  }
  const double fraction = std::min(1.0, problem.estate / total);
  result.awards.reserve(problem.size());
  for (double c : problem.claims) result.awards.push_back(fraction * c);
  if (problem.estate > total) result.unused_estate = problem.estate - total;
  return result;
}

AwardVector cea(const ClaimsProblem& problem) {
  AwardVector result;
  result.rule = RationingRule::ConstrainedEqualAwards;
  const double total = problem.total_claims();
  if (problem.estate >= total) {
    result.awards = problem.claims;
    result.unused_estate = problem.estate - total;
    return result;
  }

  // Water-filling: sort claims ascending, fill equal levels, solve the last
  // level linearly once the remaining claimants can absorb the remainder.
  std::vector<double> sorted = problem.claims;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  double level = 0.0;
  double awarded_below = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double remaining = static_cast<double>(n - k);
    if (awarded_below + sorted[k] * remaining >= problem.estate) {
      level = (problem.estate - awarded_below) / remaining;
      break;
    }
    awarded_below += sorted[k];
  }

  result.awards.reserve(n);
  for (double c : problem.claims) result.awards.push_back(std::min(c, level));
  return result;
}

std::vector<NlsViolation> nls_audit(RationingRule rule,
                                    const ClaimsProblem& problem, double tol) {
  std::vector<double> awards;
  if (rule == RationingRule::SlackClearing) {
    const Entitlements ent(problem.entitlements);
    const double bound =
        std::max(*std::max_element(problem.claims.begin(),
                                   problem.claims.end()),
                 1.0);
    const ClaimProfile profile(problem.claims, bound);
    awards = clear_linear(profile, ent).payoffs;
  } else if (rule == RationingRule::ProportionalOnClaims) {
    awards = proportional_on_claims(problem).awards;
  } else {
    awards = cea(problem).awards;
  }

  std::vector<NlsViolation> violations;
  for (std::size_t j = 0; j < problem.size(); ++j) {
    if (problem.claims[j] <= problem.entitlements[j] &&
        std::abs(awards[j] - problem.claims[j]) > tol) {
      violations.push_back({j, problem.claims[j], awards[j]});
    }
  }
  return violations;
}

}  // namespace slackclear
