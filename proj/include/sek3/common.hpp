#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace sek3 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using Mat3X = Eigen::Matrix<double, 3, Eigen::Dynamic>;

/// Which side of a group element a perturbation, Jacobian or noise term acts on.
enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

enum class ErrorKind {
  NotSkew,
  SingularJacobian,
  DimensionMismatch,
  MalformedAlgebra,
  MalformedAdjoint,
  UnsupportedOrder,
  InvalidBox,
  RankDeficient,
  NonDecreasingCost,
  FrameMismatch,
  NotPSD,
  NotConcentrated,
  LogBranch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws DimensionMismatch unless a == b.
void require_same_k(int a, int b, const char* where);

/// Trigonometric remainder functions
///
///   c_n(theta) = sum_{j>=0} (-1)^j theta^(2j) / (2j+n)!
///
/// so c0 = cos, c1 = sin/theta, c2 = (1-cos)/theta^2, c3 = (theta-sin)/theta^3,
/// c4 = (cos-1+theta^2/2)/theta^4, c5 = (sin-theta+theta^3/6)/theta^5.
/// Every closed-form coefficient in the library is a short combination of these
/// with no remaining cancellation, so small angles need no special casing at
/// the call site.
struct TrigSeries {
  double c0, c1, c2, c3, c4, c5;
};

TrigSeries trig_series(double theta);

}  // namespace sek3
