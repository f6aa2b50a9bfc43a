#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sek3::tools {

struct IdentityResult {
  std::string name;
  /// Largest residual seen over the trials (relative where noted in the name).
  double max_residual = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  bool pass = false;
};

/// Runs every identity check at the given K. Each identity draws from its own
/// generator seeded by (seed, identity index), so results do not depend on
/// evaluation order; identities run concurrently and come back in a fixed
/// order.
[[nodiscard]] std::vector<IdentityResult> run_identity_suite(int k, int trials,
                                                             std::uint64_t seed);

}  // namespace sek3::tools
