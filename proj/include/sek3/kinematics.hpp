#pragma once

#include "sek3/jacobians.hpp"

#include <functional>

namespace sek3 {

/// Stacked angular and K translational velocities. Left means world frame
/// (dT/dt = hat(v) T), Right means body frame (dT/dt = T hat(v)).
struct GeneralizedVelocity {
  Side frame = Side::Left;
  Vec3 omega = Vec3::Zero();
  Mat3X nu;

  GeneralizedVelocity() = default;
  GeneralizedVelocity(Side f, const Vec3& w, const Mat3X& n) : frame(f), omega(w), nu(n) {}
  GeneralizedVelocity(Side f, const TangentVector& coords);

  [[nodiscard]] int k() const noexcept { return static_cast<int>(nu.cols()); }
  [[nodiscard]] TangentVector coords() const { return TangentVector(omega, nu); }
};

/// Right to left multiplies by Ad_g, left to right by Ad_g^-1; the frame tag flips.
[[nodiscard]] GeneralizedVelocity convert_velocity(const GeneralizedVelocity& v,
                                                   const GroupElement& g);

/// Exact step for a velocity held constant over dt.
[[nodiscard]] GroupElement propagate(const GroupElement& g0, const GeneralizedVelocity& v,
                                     double dt);

/// d xi/dt = J^-1(xi) v with J on the side matching v.frame.
[[nodiscard]] TangentVector xi_dot(const TangentVector& xi, const GeneralizedVelocity& v);

/// State transition exp(dt ad(v)) of d(dxi)/dt = ad(v) dxi for a constant left
/// velocity. Throws FrameMismatch for a right velocity.
[[nodiscard]] AdjointMatrix perturbation_transition(const GeneralizedVelocity& v_left, double dt);

/// Forced response of the same system over one step with a constant input
/// d_omega: int_0^dt exp((dt - s) ad(v)) ds d_omega = dt J_l(dt v) d_omega.
[[nodiscard]] TangentVector perturbation_forced_response(const GeneralizedVelocity& v_left,
                                                         double dt,
                                                         const TangentVector& d_omega);

/// One step of the full perturbation system: Phi dxi0 + forced response.
[[nodiscard]] TangentVector propagate_perturbation(const GeneralizedVelocity& v_left, double dt,
                                                   const TangentVector& dxi0,
                                                   const TangentVector& d_omega);

/// Frobenius norm of dJ_l/dt - ad(w) J_l - d w/d xi along a path, where
/// w = J_l(xi) xi_dot and the partial derivative holds xi_dot fixed.
/// Every derivative is a central difference with step h.
[[nodiscard]] double verify_jacobian_identity(const std::function<TangentVector(double)>& xi_path,
                                              double t, double h = 1e-5);

}  // namespace sek3
