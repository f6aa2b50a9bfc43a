#pragma once

#include "sek3/calculus.hpp"
#include "sek3/oracle/random_instances.hpp"

#include <vector>

namespace sek3::oracle {

struct RegistrationProblem {
  GroupElement truth;
  std::vector<PointBlock> blocks;
  std::vector<Observation> observations;
};

/// `num_blocks` random point blocks (coordinates in [-5, 5]), one observation
/// per (block, slot) generated from a random ground truth, plus isotropic
/// Gaussian noise of standard deviation `noise` on every target.
[[nodiscard]] RegistrationProblem make_registration_problem(Rng& rng, int k, int num_blocks,
                                                            double noise);

}  // namespace sek3::oracle
