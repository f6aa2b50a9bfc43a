#pragma once

#include "sek3/common.hpp"

namespace sek3::so3 {

/// Skew-symmetric matrix with hat3(v) * w == v.cross(w).
[[nodiscard]] Mat3 hat3(const Vec3& v);

/// Inverse of hat3. Throws NotSkew when ||M + M^T||_F > 1e-9.
[[nodiscard]] Vec3 vee3(const Mat3& m);

/// Rodrigues formula.
[[nodiscard]] Mat3 exp(const Vec3& phi);

/// Principal rotation vector, theta in [0, pi]. At theta == pi the axis sign
/// is whichever the dominant diagonal entry of (R + I) yields.
[[nodiscard]] Vec3 log(const Mat3& r);

// SO(3) Jacobians. jr(phi) == jl(-phi).
[[nodiscard]] Mat3 jl(const Vec3& phi);
[[nodiscard]] Mat3 jr(const Vec3& phi);

// Inverses are singular at theta = 2 pi; both throw SingularJacobian within
// 1e-6 of it (and beyond).
[[nodiscard]] Mat3 jl_inv(const Vec3& phi);
[[nodiscard]] Mat3 jr_inv(const Vec3& phi);

/// ||R^T R - I||_F
[[nodiscard]] double orthogonality_defect(const Mat3& r);

/// Projects onto SO(3) (nearest rotation via SVD) only when the defect
/// exceeds 1e-9; otherwise returns r bit-for-bit.
[[nodiscard]] Mat3 renormalize(const Mat3& r);

inline constexpr double kOrthogonalityTol = 1e-9;
inline constexpr double kSingularMargin = 1e-6;

}  // namespace sek3::so3
