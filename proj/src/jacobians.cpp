#include "sek3/jacobians.hpp"

#include "sek3/so3.hpp"

#include <cmath>
#include <numbers>

namespace sek3 {

Mat3 q_block_left(const Vec3& phi, const Vec3& tk) {
  const TrigSeries s = trig_series(phi.norm());
  const Mat3 p = so3::hat3(phi);
  const Mat3 t = so3::hat3(tk);
  const Mat3 pt = p * t;
  const Mat3 tp = t * p;
  const Mat3 ptp = pt * p;
  // (theta - sin)/theta^3, (theta^2 + 2 cos - 2)/(2 theta^4), (2 theta - 3 sin + theta cos)/(2 theta^5)
  const double c_a = s.c3;
  const double c_b = s.c4;
  const double c_c = 0.5 * (s.c4 - 3.0 * s.c5);
  return 0.5 * t + c_a * (pt + tp + ptp) + c_b * (p * pt + tp * p - 3.0 * ptp) +
         c_c * (ptp * p + p * ptp);
}

AdjointMatrix jacobian(const TangentVector& xi, Side side) {
  const int k = xi.k();
  const double sign = side == Side::Left ? 1.0 : -1.0;
  const Vec3 phi = sign * xi.phi();
  const Mat3 j = so3::jl(phi);
  AdjointMatrix out = AdjointMatrix::Zero(xi.dim(), xi.dim());
  for (int i = 0; i <= k; ++i) out.block<3, 3>(3 * i, 3 * i) = j;
  for (int i = 0; i < k; ++i) {
    out.block<3, 3>(3 + 3 * i, 0) = q_block_left(phi, sign * Vec3(xi.t(i)));
  }
  return out;
}

AdjointMatrix jacobian_left_polynomial(const TangentVector& xi) {
  const TrigSeries s = trig_series(xi.theta());
  // (4 - th sin - 4 cos)/(2 th^2), (4 th - 5 sin + th cos)/(2 th^3),
  // (2 - th sin - 2 cos)/(2 th^4), (2 th - 3 sin + th cos)/(2 th^5)
  const double b1 = 0.5 * (4.0 * s.c2 - s.c1);
  const double b2 = 0.5 * (5.0 * s.c3 - s.c2);
  const double b3 = 0.5 * (s.c3 - 2.0 * s.c4);
  const double b4 = 0.5 * (s.c4 - 3.0 * s.c5);
  const AdjointMatrix ad = small_adjoint(xi);
  const AdjointMatrix ad2 = ad * ad;
  return AdjointMatrix::Identity(xi.dim(), xi.dim()) + b1 * ad + b2 * ad2 + b3 * (ad2 * ad) +
         b4 * (ad2 * ad2);
}

AdjointMatrix jacobian_inverse(const TangentVector& xi, Side side) {
  if (xi.theta() > 2.0 * std::numbers::pi - so3::kSingularMargin) {
    throw Error(ErrorKind::SingularJacobian, "group Jacobian inverse: theta too close to 2 pi");
  }
  const int k = xi.k();
  const double sign = side == Side::Left ? 1.0 : -1.0;
  const Vec3 phi = sign * xi.phi();
  const Mat3 j_inv = so3::jl_inv(phi);
  AdjointMatrix out = AdjointMatrix::Zero(xi.dim(), xi.dim());
  for (int i = 0; i <= k; ++i) out.block<3, 3>(3 * i, 3 * i) = j_inv;
  for (int i = 0; i < k; ++i) {
    out.block<3, 3>(3 + 3 * i, 0) = -j_inv * q_block_left(phi, sign * Vec3(xi.t(i))) * j_inv;
  }
  return out;
}

double jacobian_determinant(const TangentVector& xi) {
  return std::pow(2.0 * trig_series(xi.theta()).c2, xi.k() + 1);
}

}  // namespace sek3
