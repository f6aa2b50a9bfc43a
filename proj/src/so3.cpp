#include "sek3/so3.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace sek3::so3 {

Mat3 hat3(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<    0.0, -v.z(),  v.y(),
        v.z(),    0.0, -v.x(),
       -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

Vec3 vee3(const Mat3& m) {
  if ((m + m.transpose()).norm() > 1e-9) {
    throw Error(ErrorKind::NotSkew, "vee3: input is not skew-symmetric");
  }
  return {m(2, 1), m(0, 2), m(1, 0)};
}

Mat3 exp(const Vec3& phi) {
  const TrigSeries s = trig_series(phi.norm());
  const Mat3 w = hat3(phi);
  return Mat3::Identity() + s.c1 * w + s.c2 * w * w;
}

Vec3 log(const Mat3& r) {
  // 2 sin(theta) * axis
  const Vec3 skew{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  const double sin_theta = 0.5 * skew.norm();
  const double cos_theta = 0.5 * (r.trace() - 1.0);
  const double theta = std::atan2(sin_theta, cos_theta);

  if (theta > std::numbers::pi - 1e-6) {
    // Skew part vanishes near pi; read the axis from the symmetric part,
    // (R + R^T)/2 - cos(theta) I = (1 - cos(theta)) u u^T.
    const Mat3 uu =
        (0.5 * (r + r.transpose()) - cos_theta * Mat3::Identity()) / (1.0 - cos_theta);
    Eigen::Index i = 0;
    uu.diagonal().maxCoeff(&i);
    Vec3 axis = uu.col(i) / std::sqrt(uu(i, i));
    if (axis.dot(skew) < 0.0) axis = -axis;
    return theta * axis.normalized();
  }
  // theta / (2 sin(theta)) * skew, with sin(theta)/theta = c1 > 0 on [0, pi).
  return skew / (2.0 * trig_series(theta).c1);
}

Mat3 jl(const Vec3& phi) {
  const TrigSeries s = trig_series(phi.norm());
  const Mat3 w = hat3(phi);
  return Mat3::Identity() + s.c2 * w + s.c3 * w * w;
}

Mat3 jr(const Vec3& phi) { return jl(-phi); }

namespace {

// (1 - (theta/2) cot(theta/2)) / theta^2, the phi^2 coefficient of J^-1.
double inverse_quadratic_coefficient(double theta) {
  if (theta < 0.1) {
    // Bernoulli series: sum (-1)^(n+1) B_2n theta^(2n-2) / (2n)!
    const double t2 = theta * theta;
    return 1.0 / 12.0 +
           t2 * (1.0 / 720.0 + t2 * (1.0 / 30240.0 + t2 * (1.0 / 1209600.0 + t2 / 47900160.0)));
  }
  const double half = 0.5 * theta;
  return (1.0 - half * std::cos(half) / std::sin(half)) / (theta * theta);
}

void check_invertible(const Vec3& phi) {
  if (phi.norm() > 2.0 * std::numbers::pi - kSingularMargin) {
    throw Error(ErrorKind::SingularJacobian, "SO(3) Jacobian inverse: theta too close to 2 pi");
  }
}

}  // namespace

Mat3 jl_inv(const Vec3& phi) {
  check_invertible(phi);
  const Mat3 w = hat3(phi);
  return Mat3::Identity() - 0.5 * w + inverse_quadratic_coefficient(phi.norm()) * w * w;
}

Mat3 jr_inv(const Vec3& phi) { return jl_inv(-phi); }

double orthogonality_defect(const Mat3& r) {
  return (r.transpose() * r - Mat3::Identity()).norm();
}

Mat3 renormalize(const Mat3& r) {
  if (orthogonality_defect(r) <= kOrthogonalityTol) return r;
  Eigen::JacobiSVD<Mat3> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  d(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  return svd.matrixU() * d * svd.matrixV().transpose();
}

}  // namespace sek3::so3
