#include "sek3/oracle/random_instances.hpp"

#include <numbers>

namespace sek3::oracle {

Vec3 random_vec3(Rng& rng, double min_norm, double max_norm) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(min_norm, max_norm);
  Vec3 dir;
  do {
    dir = Vec3(normal(rng), normal(rng), normal(rng));
  } while (dir.norm() < 1e-8);
  return radius(rng) * dir.normalized();
}

TangentVector random_tangent(Rng& rng, int k, double phi_max, double t_max) {
  TangentVector xi(k);
  xi.phi() = random_vec3(rng, 0.0, phi_max);
  for (int j = 0; j < k; ++j) xi.t(j) = random_vec3(rng, 0.0, t_max);
  return xi;
}

GroupElement random_element(Rng& rng, int k, double t_max) {
  return exp(random_tangent(rng, k, std::numbers::pi - 0.1, t_max));
}

}  // namespace sek3::oracle
