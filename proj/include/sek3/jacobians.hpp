#pragma once

#include "sek3/adjoint.hpp"

namespace sek3 {

/// Off-diagonal block Q_k of the left group Jacobian coupling rotation and
/// the k-th translation. q_block_left(-phi, -t) is the right-Jacobian block.
[[nodiscard]] Mat3 q_block_left(const Vec3& phi, const Vec3& tk);

/// Left or right Jacobian of SE_K(3), assembled block-wise:
/// J(phi) on the diagonal, Q_k in the first block column.
[[nodiscard]] AdjointMatrix jacobian(const TangentVector& xi, Side side);

/// The same left Jacobian written as a quartic polynomial in ad(xi),
///   I + b1 ad + b2 ad^2 + b3 ad^3 + b4 ad^4.
/// Slower than the block assembly for every K; kept as an independent route.
[[nodiscard]] AdjointMatrix jacobian_left_polynomial(const TangentVector& xi);

/// Block inverse: J^-1 on the diagonal, -J^-1 Q_k J^-1 in the first column.
/// Throws SingularJacobian within 1e-6 of theta = 2 pi.
[[nodiscard]] AdjointMatrix jacobian_inverse(const TangentVector& xi, Side side);

/// |det J| = (2 (1 - cos theta) / theta^2)^(K+1), identical for both sides.
[[nodiscard]] double jacobian_determinant(const TangentVector& xi);

}  // namespace sek3
