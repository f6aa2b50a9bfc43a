#include "sek3/kinematics.hpp"

namespace sek3 {

GeneralizedVelocity::GeneralizedVelocity(Side f, const TangentVector& c)
    : frame(f), omega(c.phi()), nu(3, c.k()) {
  for (int j = 0; j < c.k(); ++j) nu.col(j) = c.t(j);
}

GeneralizedVelocity convert_velocity(const GeneralizedVelocity& v, const GroupElement& g) {
  require_same_k(v.k(), g.k(), "convert_velocity");
  const MatX a = v.frame == Side::Right ? adjoint(g) : adjoint_inverse(g);
  return {opposite(v.frame), TangentVector(VecX(a * v.coords().coords()))};
}

GroupElement propagate(const GroupElement& g0, const GeneralizedVelocity& v, double dt) {
  require_same_k(v.k(), g0.k(), "propagate");
  const GroupElement step = exp(dt * v.coords());
  return v.frame == Side::Left ? compose(step, g0) : compose(g0, step);
}

TangentVector xi_dot(const TangentVector& xi, const GeneralizedVelocity& v) {
  require_same_k(v.k(), xi.k(), "xi_dot");
  return TangentVector(VecX(jacobian_inverse(xi, v.frame) * v.coords().coords()));
}

AdjointMatrix perturbation_transition(const GeneralizedVelocity& v_left, double dt) {
  if (v_left.frame != Side::Left) {
    throw Error(ErrorKind::FrameMismatch, "perturbation_transition: velocity must be left");
  }
  return exp_adjoint(dt * v_left.coords());
}

TangentVector perturbation_forced_response(const GeneralizedVelocity& v_left, double dt,
                                           const TangentVector& d_omega) {
  if (v_left.frame != Side::Left) {
    throw Error(ErrorKind::FrameMismatch, "perturbation_forced_response: velocity must be left");
  }
  require_same_k(v_left.k(), d_omega.k(), "perturbation_forced_response");
  return TangentVector(
      VecX(dt * (jacobian(dt * v_left.coords(), Side::Left) * d_omega.coords())));
}

TangentVector propagate_perturbation(const GeneralizedVelocity& v_left, double dt,
                                     const TangentVector& dxi0, const TangentVector& d_omega) {
  require_same_k(v_left.k(), dxi0.k(), "propagate_perturbation");
  return TangentVector(VecX(perturbation_transition(v_left, dt) * dxi0.coords())) +
         perturbation_forced_response(v_left, dt, d_omega);
}

double verify_jacobian_identity(const std::function<TangentVector(double)>& xi_path, double t,
                                double h) {
  const TangentVector xi = xi_path(t);
  const TangentVector xi_p = xi_path(t + h);
  const TangentVector xi_m = xi_path(t - h);
  const VecX xi_rate = (xi_p.coords() - xi_m.coords()) / (2.0 * h);

  const MatX j = jacobian(xi, Side::Left);
  const MatX j_rate = (jacobian(xi_p, Side::Left) - jacobian(xi_m, Side::Left)) / (2.0 * h);
  const VecX w = j * xi_rate;

  const int n = xi.dim();
  MatX dw = MatX(n, n);
  for (int i = 0; i < n; ++i) {
    TangentVector plus = xi;
    TangentVector minus = xi;
    plus.coords()[i] += h;
    minus.coords()[i] -= h;
    dw.col(i) =
        (jacobian(plus, Side::Left) * xi_rate - jacobian(minus, Side::Left) * xi_rate) / (2.0 * h);
  }
  return (j_rate - small_adjoint(TangentVector(w)) * j - dw).norm();
}

}  // namespace sek3
