#pragma once

#include "slackclear/types.hpp"

namespace slackclear {

// Splits a profile into overages and slacks and classifies every player as
// cooperator (C_j <= L_j) or defector (C_j > L_j).
// Throws std::invalid_argument when the profile and entitlements disagree in
// length.
OverageSlack decompose(const ClaimProfile& profile, const Entitlements& ent);

Regime classify_regime(double total_overage, double total_slack,
                       double boundary_tol = kBoundaryTol);

// Linear clearing: defectors are covered in full when X <= I and pro rata at
// I/X otherwise. Cooperators are paid their claim exactly; defectors receive
// entitlement plus covered overage.
ClearingOutcome clear_linear(const ClaimProfile& profile,
                             const Entitlements& ent,
                             double boundary_tol = kBoundaryTol);

// Overage-power clearing: in scarcity the surplus I is split across strictly
// positive overages in proportion to v_j^alpha. The boundary X == I clears on
// the slack-side branch (full coverage). Coincides with clear_linear at
// alpha == 1.
ClearingOutcome clear_alpha(const ClaimProfile& profile,
                            const Entitlements& ent, const AlphaRule& rule,
                            double boundary_tol = kBoundaryTol);

// sum(payoffs) - (sum(L) - max(I - X, 0)); zero up to rounding for every
// profile and every alpha.
double budget_identity_residual(const ClearingOutcome& outcome,
                                const Entitlements& ent,
                                const OverageSlack& os);

// Uncovered fraction of total overage: 0 when X == 0, max(0, (X - I)/X)
// otherwise. Always in [0, 1]. Throws on negative input.
double scarcity_factor(double total_overage, double total_slack);

}  // namespace slackclear
