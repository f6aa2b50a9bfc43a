#pragma once

#include "sek3/group.hpp"

#include <random>

namespace sek3::oracle {

using Rng = std::mt19937_64;

/// Uniform direction with norm uniform in [min_norm, max_norm].
[[nodiscard]] Vec3 random_vec3(Rng& rng, double min_norm, double max_norm);

/// Random xi: ||phi|| uniform in [0, phi_max], each t_k with norm in [0, t_max].
[[nodiscard]] TangentVector random_tangent(Rng& rng, int k, double phi_max, double t_max = 3.0);

/// exp of a random tangent with ||phi|| < pi - 0.1.
[[nodiscard]] GroupElement random_element(Rng& rng, int k, double t_max = 3.0);

}  // namespace sek3::oracle
