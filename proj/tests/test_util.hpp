#pragma once

#include <cstdint>
#include <vector>

#include "slackclear/rng.hpp"
#include "slackclear/types.hpp"

namespace slackclear::testutil {

inline Entitlements random_entitlements(Rng& rng, std::size_t n,
                                        double lo = 0.5, double hi = 20.0) {
  std::vector<double> levels(n);
  for (auto& level : levels) level = rng.uniform(lo, hi);
  return Entitlements(std::move(levels));
}

inline ClaimProfile random_profile(Rng& rng, std::size_t n, double bound) {
  std::vector<double> claims(n);
  for (auto& claim : claims) claim = rng.uniform(0.0, bound);
  return ClaimProfile(std::move(claims), bound);
}

}  // namespace slackclear::testutil
