#include "sek3/oracle/synthetic.hpp"

namespace sek3::oracle {

RegistrationProblem make_registration_problem(Rng& rng, int k, int num_blocks, double noise) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RegistrationProblem prob;
  prob.truth = random_element(rng, k);
  for (int n = 0; n < num_blocks; ++n) {
    Mat3X pts(3, k);
    for (Eigen::Index i = 0; i < pts.size(); ++i) pts.data()[i] = coord(rng);
    prob.blocks.emplace_back(pts);
    for (int m = 0; m < k; ++m) {
      Vec3 y = transform_point(prob.truth, prob.blocks.back(), m);
      if (noise > 0) y += noise * Vec3(gauss(rng), gauss(rng), gauss(rng));
      prob.observations.push_back({n, m, y, 1.0});
    }
  }
  return prob;
}

}  // namespace sek3::oracle
