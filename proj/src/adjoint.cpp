#include "sek3/adjoint.hpp"

#include "sek3/so3.hpp"

#include <algorithm>
#include <cmath>

namespace sek3 {

namespace {

int k_from_dim(Eigen::Index n) {
  if (n < 3 || n % 3 != 0) {
    throw Error(ErrorKind::MalformedAdjoint, "adjoint dimension must be a positive multiple of 3");
  }
  return static_cast<int>(n / 3) - 1;
}

}  // namespace

AdjointMatrix adjoint(const GroupElement& g) {
  const int k = g.k();
  const Mat3& r = g.rotation();
  AdjointMatrix a = AdjointMatrix::Zero(3 * (k + 1), 3 * (k + 1));
  for (int i = 0; i <= k; ++i) a.block<3, 3>(3 * i, 3 * i) = r;
  for (int j = 0; j < k; ++j) a.block<3, 3>(3 + 3 * j, 0) = so3::hat3(g.translation(j)) * r;
  return a;
}

AdjointMatrix adjoint_inverse(const GroupElement& g) {
  const int k = g.k();
  const Mat3 rt = g.rotation().transpose();
  AdjointMatrix a = AdjointMatrix::Zero(3 * (k + 1), 3 * (k + 1));
  for (int i = 0; i <= k; ++i) a.block<3, 3>(3 * i, 3 * i) = rt;
  for (int j = 0; j < k; ++j) a.block<3, 3>(3 + 3 * j, 0) = -rt * so3::hat3(g.translation(j));
  return a;
}

AdjointMatrix small_adjoint(const TangentVector& xi) {
  const int k = xi.k();
  const Mat3 w = so3::hat3(xi.phi());
  AdjointMatrix a = AdjointMatrix::Zero(xi.dim(), xi.dim());
  for (int i = 0; i <= k; ++i) a.block<3, 3>(3 * i, 3 * i) = w;
  for (int j = 0; j < k; ++j) a.block<3, 3>(3 + 3 * j, 0) = so3::hat3(xi.t(j));
  return a;
}

AdjointExpCoefficients adjoint_exp_coefficients(double theta) {
  const TrigSeries s = trig_series(theta);
  // (3 sin - th cos)/(2 th), (4 - th sin - 4 cos)/(2 th^2),
  // (sin - th cos)/(2 th^3), (2 - th sin - 2 cos)/(2 th^4)
  return {0.5 * (3.0 * s.c1 - s.c0), 0.5 * (4.0 * s.c2 - s.c1), 0.5 * (s.c2 - s.c3),
          0.5 * (s.c3 - 2.0 * s.c4)};
}

AdjointMatrix exp_adjoint(const TangentVector& xi) {
  const AdjointExpCoefficients c = adjoint_exp_coefficients(xi.theta());
  const AdjointMatrix ad = small_adjoint(xi);
  const AdjointMatrix ad2 = ad * ad;
  const AdjointMatrix ad3 = ad2 * ad;
  const AdjointMatrix ad4 = ad2 * ad2;
  return AdjointMatrix::Identity(xi.dim(), xi.dim()) + c.a1 * ad + c.a2 * ad2 + c.a3 * ad3 +
         c.a4 * ad4;
}

GroupElement element_from_adjoint(const AdjointMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::MalformedAdjoint, "adjoint must be square");
  const int k = k_from_dim(a.rows());
  constexpr double tol = 1e-9;

  const Mat3 r = a.topLeftCorner<3, 3>();
  if (so3::orthogonality_defect(r) > tol || std::abs(r.determinant() - 1.0) > tol) {
    throw Error(ErrorKind::MalformedAdjoint, "diagonal block is not a rotation");
  }
  Mat3X p(3, k);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const Mat3 block = a.block<3, 3>(3 * i, 3 * j);
      if (i == j) {
        if ((block - r).norm() > tol) {
          throw Error(ErrorKind::MalformedAdjoint, "diagonal blocks differ");
        }
      } else if (j != 0 || i == 0) {
        if (block.norm() > tol) {
          throw Error(ErrorKind::MalformedAdjoint, "nonzero block outside the first column");
        }
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    const Mat3 skew = a.block<3, 3>(3 + 3 * j, 0) * r.transpose();
    if ((skew + skew.transpose()).norm() > tol * std::max(1.0, skew.norm())) {
      throw Error(ErrorKind::MalformedAdjoint, "first-column block is not (p)^ R");
    }
    p.col(j) = Vec3{skew(2, 1) - skew(1, 2), skew(0, 2) - skew(2, 0), skew(1, 0) - skew(0, 1)} / 2.0;
  }
  return {r, p};
}

TangentVector log_adjoint(const AdjointMatrix& a) { return log(element_from_adjoint(a)); }

}  // namespace sek3
