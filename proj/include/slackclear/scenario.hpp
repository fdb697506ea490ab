#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slackclear/types.hpp"

namespace slackclear {

enum class ProfileFamily {
  UniformClaims,        // every claim uniform on [0, M)
  CooperateDefectMixture,  // claim M with the defection probability, else
                           // uniform below the own entitlement
  BoundaryTargeted,     // random profile with one claim solved so X == I
};

ProfileFamily profile_family_from_string(const std::string& name);
std::string to_string(ProfileFamily family);

struct GeneratorSpec {
  ProfileFamily family = ProfileFamily::UniformClaims;
  std::size_t trials = 0;
  double defect_probability = 0.5;  // mixture family only
};

struct GeneratedProfiles {
  std::vector<ClaimProfile> profiles;
  std::size_t skipped = 0;  // boundary closures that were infeasible
};

// Deterministic in the seed. The boundary-targeted family closes the overage/
// slack gap through one claim (trying players from the last down) and
// re-verifies |X - I| <= boundary_tol on every emitted profile; draws that
// cannot be closed within [0, M] are skipped and counted.
GeneratedProfiles generate_scenarios(const GeneratorSpec& spec,
                                     const Entitlements& ent, double bound,
                                     std::uint64_t seed,
                                     double boundary_tol = kBoundaryTol);

}  // namespace slackclear
