#include "slackclear/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "slackclear/mechanism.hpp"
#include "slackclear/rng.hpp"

namespace slackclear {

ProfileFamily profile_family_from_string(const std::string& name) {
  if (name == "uniform") return ProfileFamily::UniformClaims;
  if (name == "mixture") return ProfileFamily::CooperateDefectMixture;
  if (name == "boundary") return ProfileFamily::BoundaryTargeted;
  throw std::invalid_argument("unknown profile family: " + name);
}

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::UniformClaims:
      return "uniform";
    case ProfileFamily::CooperateDefectMixture:
      return "mixture";
    case ProfileFamily::BoundaryTargeted:
      return "boundary";
  }
  return "unknown";
}

namespace {

// Sets claims[k] so the profile lands on X == I, if some player admits a
// feasible closure. The gap left by the other players is
// g = X_{-k} - I_{-k}; the closing claim is L_k - g regardless of sign.
bool close_boundary_gap(std::vector<double>& claims, const Entitlements& ent,
                        double bound) {
  const std::size_t n = claims.size();
  for (std::size_t back = 0; back < n; ++back) {
    const std::size_t k = n - 1 - back;
    double gap = 0.0;  // X_{-k} - I_{-k}; each term is overage minus slack
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) gap += claims[j] - ent.values[j];
    }
    const double closing = ent.values[k] - gap;
    if (closing >= 0.0 && closing <= bound) {
      claims[k] = closing;
      return true;
    }
  }
  return false;
}

}  // namespace

GeneratedProfiles generate_scenarios(const GeneratorSpec& spec,
                                     const Entitlements& ent, double bound,
                                     std::uint64_t seed, double boundary_tol) {
  if (spec.family == ProfileFamily::CooperateDefectMixture &&
      (spec.defect_probability < 0.0 || spec.defect_probability > 1.0)) {
    throw std::invalid_argument(
        "generator: defection probability must lie in [0, 1]");
  }
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw std::invalid_argument("generator: bound must be finite and > 0");
  }

  GeneratedProfiles out;
  out.profiles.reserve(spec.trials);

  Rng rng(seed);
  const std::size_t n = ent.size();
  std::vector<double> claims(n);
  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    switch (spec.family) {
      case ProfileFamily::UniformClaims:
        for (auto& c : claims) c = rng.uniform(0.0, bound);
        break;
      case ProfileFamily::CooperateDefectMixture:
        for (std::size_t j = 0; j < n; ++j) {
          claims[j] = rng.bernoulli(spec.defect_probability)
                          ? bound
                          : rng.uniform(0.0, std::min(ent.values[j], bound));
        }
        break;
      case ProfileFamily::BoundaryTargeted: {
        for (auto& c : claims) c = rng.uniform(0.0, bound);
        if (!close_boundary_gap(claims, ent, bound)) {
          ++out.skipped;
          continue;
        }
        const OverageSlack os = decompose(ClaimProfile(claims, bound), ent);
        if (std::abs(os.total_overage - os.total_slack) > boundary_tol) {
          ++out.skipped;
          continue;
        }
        break;
      }
    }
    out.profiles.emplace_back(claims, bound);
  }
  return out;
}

}  // namespace slackclear
