#include "sek3/tools/identity_suite.hpp"

#include "sek3/batch.hpp"
#include "sek3/jacobians.hpp"
#include "sek3/kinematics.hpp"
#include "sek3/metrics.hpp"
#include "sek3/random.hpp"
#include "sek3/so3.hpp"

#include "sek3/oracle/numeric_oracle.hpp"
#include "sek3/oracle/random_instances.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace sek3::tools {

namespace {

using oracle::Rng;

double max_abs(const MatX& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct Identity {
  const char* name;
  double tolerance;
  // Residual of one trial.
  std::function<double(Rng&, int k)> trial;
};

constexpr double kPi = std::numbers::pi;

std::vector<Identity> identities() {
  return {
      {"so3 conjugation J_l(R phi) = R J_l(phi) R^T", 1e-10,
       [](Rng& rng, int) {
         const Vec3 phi = oracle::random_vec3(rng, 1e-6, kPi);
         const Mat3 r = so3::exp(phi);
         return max_abs(so3::jl(r * phi) - r * so3::jl(phi) * r.transpose());
       }},
      {"so3 J_l(phi) phi^ = R - I", 1e-10,
       [](Rng& rng, int) {
         const Vec3 phi = oracle::random_vec3(rng, 1e-6, kPi);
         return max_abs(so3::jl(phi) * so3::hat3(phi) - (so3::exp(phi) - Mat3::Identity()));
       }},
      {"hat quartic S^4 + theta^2 S^2 = 0 (scaled)", 1e-10,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 6.0);
         const MatX s = hat(xi);
         const MatX s2 = s * s;
         const double th = xi.theta();
         return max_abs(s2 * s2 + th * th * s2) / std::max(1.0, std::pow(th, 4));
       }},
      {"ad antisymmetry ad(a) b = -ad(b) a", 1e-13,
       [](Rng& rng, int k) {
         const TangentVector a = oracle::random_tangent(rng, k, 3.0);
         const TangentVector b = oracle::random_tangent(rng, k, 3.0);
         return max_abs(small_adjoint(a) * b.coords() + small_adjoint(b) * a.coords());
       }},
      {"ad closure [ad(a), ad(b)] = ad(ad(a) b)", 1e-12,
       [](Rng& rng, int k) {
         const TangentVector a = oracle::random_tangent(rng, k, 3.0);
         const TangentVector b = oracle::random_tangent(rng, k, 3.0);
         const MatX la = small_adjoint(a);
         const MatX lb = small_adjoint(b);
         return max_abs(la * lb - lb * la - small_adjoint(TangentVector(VecX(la * b.coords()))));
       }},
      {"key block (J_l t)^ R = double series", 1e-10,
       [](Rng& rng, int) {
         const Vec3 phi = oracle::random_vec3(rng, 0.0, 3.0);
         const Vec3 t = oracle::random_vec3(rng, 0.0, 3.0);
         return max_abs(so3::hat3(so3::jl(phi) * t) * so3::exp(phi) -
                        oracle::adjoint_block_double_series(phi, t, 30));
       }},
      {"commutative diagram exp_adjoint(xi) = Ad(exp(xi))", 1e-11,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(exp_adjoint(xi) - adjoint(exp(xi)));
       }},
      {"exp_adjoint closed form = series exp(ad)", 1e-11,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(exp_adjoint(xi) - oracle::expm_series(small_adjoint(xi)));
       }},
      {"ad quintic ad^5 + 2 theta^2 ad^3 + theta^4 ad = 0 (scaled)", 1e-9,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 6.0);
         const MatX l = small_adjoint(xi);
         const MatX l2 = l * l;
         const MatX l3 = l2 * l;
         const double th = xi.theta();
         return max_abs(l3 * l2 + 2 * th * th * l3 + std::pow(th, 4) * l) /
                std::max(1.0, std::pow(th, 5));
       }},
      {"group action homomorphism", 1e-12,
       [](Rng& rng, int k) {
         const GroupElement g = oracle::random_element(rng, k);
         const GroupElement h = oracle::random_element(rng, k);
         const Vec3 b = oracle::random_vec3(rng, 0.0, 3.0);
         std::uniform_real_distribution<double> u(-2.0, 2.0);
         std::vector<double> gamma(static_cast<std::size_t>(k));
         for (double& x : gamma) x = u(rng);
         return max_abs(act(g, act(h, b, gamma), gamma) - act(compose(g, h), b, gamma));
       }},
      {"J_l = Ad J_r", 1e-10,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(jacobian(xi, Side::Left) - exp_adjoint(xi) * jacobian(xi, Side::Right));
       }},
      {"J_l(-xi) = J_r(xi)", 0.0,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(jacobian(-xi, Side::Left) - jacobian(xi, Side::Right));
       }},
      {"Q relation Q_l = R Q_r + (J_l t)^ R J_r", 1e-10,
       [](Rng& rng, int) {
         const Vec3 phi = oracle::random_vec3(rng, 0.0, 3.0);
         const Vec3 t = oracle::random_vec3(rng, 0.0, 3.0);
         const Mat3 r = so3::exp(phi);
         return max_abs(q_block_left(phi, t) - r * q_block_left(-phi, -t) -
                        so3::hat3(so3::jl(phi) * t) * r * so3::jr(phi));
       }},
      {"Ad = I + ad J_l", 1e-10,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         const MatX eye = MatX::Identity(xi.dim(), xi.dim());
         return max_abs(exp_adjoint(xi) - eye - small_adjoint(xi) * jacobian(xi, Side::Left));
       }},
      {"quartic polynomial J_l = block assembly", 1e-10,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(jacobian_left_polynomial(xi) - jacobian(xi, Side::Left));
       }},
      {"J J^-1 = I (both sides)", 1e-9,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 2 * kPi - 0.1);
         const MatX eye = MatX::Identity(xi.dim(), xi.dim());
         return std::max(max_abs(jacobian(xi, Side::Left) * jacobian_inverse(xi, Side::Left) - eye),
                         max_abs(jacobian(xi, Side::Right) * jacobian_inverse(xi, Side::Right) -
                                 eye));
       }},
      {"J_l = integral of Ad^alpha (10^4-point trapezoid)", 1e-7,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
         return max_abs(jacobian(xi, Side::Left) -
                        oracle::integral_jacobian(xi, Side::Left, 10000));
       }},
      {"so3 J_l = integral of R^alpha (10^4-point trapezoid)", 1e-7,
       [](Rng& rng, int) {
         const Vec3 phi = oracle::random_vec3(rng, 0.0, 3.0);
         return max_abs(so3::jl(phi) - oracle::integral_of_exp(so3::hat3(phi), 10000));
       }},
      {"det J = dense determinant (relative)", 1e-8,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 2 * kPi - 0.1);
         const double dense = std::abs(jacobian(xi, Side::Left).determinant());
         return std::abs(jacobian_determinant(xi) - dense) / dense;
       }},
      {"det J = det(J_so3)^(K+1) (relative)", 1e-8,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 2 * kPi - 0.1);
         const double det = jacobian_determinant(xi);
         return std::abs(det - std::pow(so3::jl(xi.phi()).determinant(), k + 1)) / det;
       }},
      {"J J^T positive definite (failure fraction)", 0.0,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 2 * kPi - 0.1);
         double failures = 0.0;
         for (Side side : {Side::Left, Side::Right}) {
           const MatX j = jacobian(xi, side);
           if (Eigen::LLT<MatX>(j * j.transpose()).info() != Eigen::Success) failures += 0.5;
         }
         return failures;
       }},
      {"trace inner products reproduce xi1^T xi2 (relative)", 1e-12,
       [](Rng& rng, int k) {
         const TangentVector a = oracle::random_tangent(rng, k, 3.0);
         const TangentVector b = oracle::random_tangent(rng, k, 3.0);
         const WeightSpec w = WeightSpec::defaults(k);
         const double ip = inner_product(a, b);
         const double scale = std::max(1.0, std::abs(ip));
         return std::max(std::abs(trace_inner_product_hat(a, b, w) - ip),
                         std::abs(trace_inner_product_adjoint(a, b, w) - ip)) /
                scale;
       }},
      {"volume element half-angle form (relative)", 1e-10,
       [](Rng& rng, int k) {
         const TangentVector xi = oracle::random_tangent(rng, k, 6.0);
         const double v = volume_element(xi);
         return std::abs(v - volume_element_half_angle(xi)) / v;
       }},
      {"velocity conversion components", 1e-13,
       [](Rng& rng, int k) {
         const GroupElement g = oracle::random_element(rng, k);
         const GeneralizedVelocity vr(Side::Right, oracle::random_tangent(rng, k, 2.0, 2.0));
         const GeneralizedVelocity vl = convert_velocity(vr, g);
         const Mat3& r = g.rotation();
         double res = max_abs(vl.omega - r * vr.omega);
         for (int j = 0; j < k; ++j) {
           res = std::max(res, max_abs(vl.nu.col(j) - so3::hat3(g.translation(j)) * r * vr.omega -
                                       r * vr.nu.col(j)));
         }
         return res;
       }},
      {"Jacobian identity dJ/dt - ad(w) J = dw/dxi", 1e-4,
       [](Rng& rng, int k) {
         const TangentVector a = oracle::random_tangent(rng, k, 1.0, 0.5);
         const TangentVector b = oracle::random_tangent(rng, k, 1.0, 0.5);
         return verify_jacobian_identity([&](double t) { return a + t * b; }, 0.5);
       }},
      {"noise transport T exp(eps) = exp(Ad eps) T", 1e-12,
       [](Rng& rng, int k) {
         const GroupElement t = oracle::random_element(rng, k);
         const TangentVector eps = oracle::random_tangent(rng, k, 0.5, 0.5);
         const TangentVector moved(VecX(adjoint(t) * eps.coords()));
         return max_abs(compose(t, exp(eps)).embedding() - compose(exp(moved), t).embedding());
       }},
  };
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(int k, int trials, std::uint64_t seed) {
  const std::vector<Identity> ids = identities();
  std::vector<IdentityResult> results(ids.size());
  detail::for_each_index(static_cast<std::int64_t>(ids.size()), Execution::Parallel,
                         [&](std::int64_t i) {
                           const Identity& id = ids[i];
                           Rng rng(mix64(seed) ^ mix64(static_cast<std::uint64_t>(i) + 1));
                           double worst = 0.0;
                           for (int t = 0; t < trials; ++t) {
                             const double r = id.trial(rng, k);
                             // NaN must fail, so compare with a negated <=.
                             if (!(r <= worst)) worst = std::isnan(r) ? r : std::max(worst, r);
                           }
                           results[i] = {id.name, worst, id.tolerance, trials, worst <= id.tolerance};
                         });
  return results;
}

}  // namespace sek3::tools
