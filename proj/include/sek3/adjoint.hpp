#pragma once

#include "sek3/group.hpp"

namespace sek3 {

/// 3(K+1) x 3(K+1) matrices of the adjoint group Ad(SE_K(3)), of its
/// algebra, and of the group Jacobians all share this representation.
using AdjointMatrix = MatX;

/// Ad_T: R on the block diagonal, (p_k)^ R in the first block column.
[[nodiscard]] AdjointMatrix adjoint(const GroupElement& g);

/// (Ad_T)^-1 = Ad_{T^-1}: R^T on the diagonal, -R^T (p_k)^ in the first column.
[[nodiscard]] AdjointMatrix adjoint_inverse(const GroupElement& g);

/// The algebra adjoint ad(xi): phi^ on the block diagonal, (t_k)^ in the
/// first block column. small_adjoint(a) * b == bracket(a, b).
[[nodiscard]] AdjointMatrix small_adjoint(const TangentVector& xi);

/// Exponential of small_adjoint(xi) in closed form, a quartic polynomial in
/// ad(xi) whose four coefficients come from the quintic identity
/// ad^5 + 2 theta^2 ad^3 + theta^4 ad = 0. Equals adjoint(exp(xi)).
[[nodiscard]] AdjointMatrix exp_adjoint(const TangentVector& xi);

/// Structured logarithm: reads R from the diagonal, p_k from the first block
/// column, then maps through the group log. Throws MalformedAdjoint if the
/// block layout or the rotation is off by more than 1e-9.
[[nodiscard]] TangentVector log_adjoint(const AdjointMatrix& a);

/// Recovers the group element behind a structurally valid Ad_T.
[[nodiscard]] GroupElement element_from_adjoint(const AdjointMatrix& a);

/// Coefficients of I, ad, ad^2, ad^3, ad^4 in exp_adjoint (the first is 1).
struct AdjointExpCoefficients {
  double a1, a2, a3, a4;
};
[[nodiscard]] AdjointExpCoefficients adjoint_exp_coefficients(double theta);

}  // namespace sek3
