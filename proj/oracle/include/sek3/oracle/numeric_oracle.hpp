#pragma once

// Brute-force references used by the property tests, the acceptance suite and
// `sek3 verify`. Nothing in the core library links against this.

#include "sek3/group.hpp"

#include <functional>
#include <vector>

namespace sek3::oracle {

/// exp(M) by scaling and squaring (||M/2^s||_1 <= 0.5) and a 30-term Taylor sum.
[[nodiscard]] MatX expm_series(const MatX& m);

/// log(M) by inverse scaling and squaring: Denman-Beavers square roots until
/// ||X - I||_1 <= 0.25, then the Mercator series. Throws LogBranch if a square
/// root fails to converge (eigenvalues on or near the negative real axis).
[[nodiscard]] MatX logm_inverse_scaling(const MatX& m);

/// Trapezoid rule for int_0^1 exp(alpha M) d alpha on `points` nodes. The
/// integrand at successive nodes is generated by repeated multiplication with
/// expm_series(M / (points - 1)).
[[nodiscard]] MatX integral_of_exp(const MatX& m, int points);

/// int_0^1 exp(+-alpha ad(xi)) d alpha: the left (+) or right (-) group Jacobian.
[[nodiscard]] MatX integral_jacobian(const TangentVector& xi, Side side, int points);

/// Truncated sum_{n<terms} ad(xi)^n / (n+1)!  (left) or of (-ad(xi))^n (right).
[[nodiscard]] MatX jacobian_series(const TangentVector& xi, Side side, int terms);

/// Truncated sum_{n<terms} B_n / n! (+-ad(xi))^n, with B_1 = -1/2.
[[nodiscard]] MatX bernoulli_jacobian_inverse(const TangentVector& xi, Side side, int terms);

/// Bernoulli numbers B_0..B_{n-1} (B_1 = -1/2).
[[nodiscard]] std::vector<double> bernoulli_numbers(int n);

/// sum_{n+m <= max_order} (phi^)^n (t^) (phi^)^m / (n+m+1)!
[[nodiscard]] Mat3 adjoint_block_double_series(const Vec3& phi, const Vec3& t, int max_order);

/// Classic fourth-order Runge-Kutta for dX/dt = A(t) X.
[[nodiscard]] MatX rk4_matrix_ode(const std::function<MatX(double)>& a, const MatX& x0, double t0,
                                  double t1, int steps);

/// Classic fourth-order Runge-Kutta for dx/dt = f(t, x).
[[nodiscard]] VecX rk4_vector_ode(const std::function<VecX(double, const VecX&)>& f,
                                  const VecX& x0, double t0, double t1, int steps);

/// Central-difference Jacobian of f at x, one column per coordinate of x.
[[nodiscard]] MatX central_diff(const std::function<VecX(const VecX&)>& f, const VecX& x,
                                double eps);

/// Composite Simpson rule for int_{||phi|| < pi} g(||phi||) d phi
/// = int_0^pi 4 pi theta^2 g(theta) d theta on `intervals` (even) panels.
[[nodiscard]] double radial_quadrature(const std::function<double(double)>& g, int intervals);

}  // namespace sek3::oracle
