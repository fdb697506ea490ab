#pragma once

#include <string>
#include <vector>

#include "slackclear/types.hpp"

namespace slackclear {

enum class RationingRule {
  ProportionalOnClaims,
  ConstrainedEqualAwards,
  SlackClearing,
};

std::string to_string(RationingRule rule);

// A rationing problem: claims against an available estate, with entitlements
// kept alongside so awards can be audited for cooperator shortfalls.
struct ClaimsProblem {
  std::vector<double> claims;
  std::vector<double> entitlements;
  double estate = 0.0;

  ClaimsProblem(std::vector<double> claim_values,
                std::vector<double> entitlement_values, double estate_amount);

  std::size_t size() const { return claims.size(); }
  double total_claims() const;
};

struct AwardVector {
  std::vector<double> awards;
  RationingRule rule;
  double unused_estate = 0.0;  // estate left unallocated (flagged when > 0)

  bool flagged() const { return unused_estate > 0.0; }
};

// Every claim scaled by min(1, estate / total claims). With zero total claims
// and a positive estate the awards are all zero and the estate is flagged
// unused.
AwardVector proportional_on_claims(const ClaimsProblem& problem);

// Constrained equal awards: a_j = min(C_j, level) with the level chosen to
// exhaust the estate. The level is solved exactly by sorted water-filling,
// not by bisection.
AwardVector cea(const ClaimsProblem& problem);

struct NlsViolation {
  std::size_t player;
  double claim;
  double award;
};

// Players with C_j <= L_j whose award differs from their claim. Empty for the
// slack-clearing rule on every input; the classic rules produce violations on
// stressed problems. For SlackClearing the estate field is ignored (its
// surplus is the profile's own slack).
std::vector<NlsViolation> nls_audit(RationingRule rule,
                                    const ClaimsProblem& problem,
                                    double tol = 1e-12);

}  // namespace slackclear
