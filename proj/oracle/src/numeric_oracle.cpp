#include "sek3/oracle/numeric_oracle.hpp"

#include "sek3/adjoint.hpp"
#include "sek3/so3.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sek3::oracle {

namespace {

double norm1(const MatX& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Denman-Beavers iteration for the principal square root.
MatX sqrtm(const MatX& x) {
  const Eigen::Index n = x.rows();
  MatX y = x;
  MatX z = MatX::Identity(n, n);
  double step = 0.0;
  for (int it = 0; it < 100; ++it) {
    Eigen::FullPivLU<MatX> lu_y(y);
    Eigen::FullPivLU<MatX> lu_z(z);
    if (!lu_y.isInvertible() || !lu_z.isInvertible()) break;
    const MatX y_next = 0.5 * (y + lu_z.inverse());
    const MatX z_next = 0.5 * (z + lu_y.inverse());
    step = norm1(y_next - y);
    y = y_next;
    z = z_next;
    if (step <= 1e-14 * std::max(1.0, norm1(y))) return y;
  }
  // Rounding can stall the last digit; accept a converged plateau.
  if (step <= 1e-10 * std::max(1.0, norm1(y))) return y;
  throw Error(ErrorKind::LogBranch, "logm: square root iteration did not converge");
}

}  // namespace

MatX expm_series(const MatX& m) {
  const Eigen::Index n = m.rows();
  const double nrm = norm1(m);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const MatX a = m / std::ldexp(1.0, squarings);

  MatX term = MatX::Identity(n, n);
  MatX sum = term;
  for (int i = 1; i <= 30; ++i) {
    term = term * a / static_cast<double>(i);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

MatX logm_inverse_scaling(const MatX& m) {
  const Eigen::Index n = m.rows();
  const MatX eye = MatX::Identity(n, n);
  if (!Eigen::FullPivLU<MatX>(m).isInvertible()) {
    throw Error(ErrorKind::LogBranch, "logm: singular matrix");
  }
  MatX x = m;
  int roots = 0;
  while (norm1(x - eye) > 0.25) {
    if (++roots > 60) throw Error(ErrorKind::LogBranch, "logm: too many square roots");
    x = sqrtm(x);
  }
  const MatX e = x - eye;
  MatX power = e;
  MatX sum = e;
  for (int i = 2; i <= 40; ++i) {
    power = power * e;
    sum += ((i % 2 == 0) ? -1.0 : 1.0) / static_cast<double>(i) * power;
  }
  return std::ldexp(1.0, roots) * sum;
}

MatX integral_of_exp(const MatX& m, int points) {
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "integral_of_exp: need >= 2 points");
  const Eigen::Index n = m.rows();
  const double h = 1.0 / static_cast<double>(points - 1);
  const MatX step = expm_series(h * m);
  MatX node = MatX::Identity(n, n);
  MatX sum = 0.5 * node;
  for (int i = 1; i < points; ++i) {
    node = node * step;
    sum += (i == points - 1 ? 0.5 : 1.0) * node;
  }
  return h * sum;
}

MatX integral_jacobian(const TangentVector& xi, Side side, int points) {
  const MatX ad = small_adjoint(xi);
  return integral_of_exp(side == Side::Left ? ad : MatX(-ad), points);
}

MatX jacobian_series(const TangentVector& xi, Side side, int terms) {
  const MatX ad = side == Side::Left ? small_adjoint(xi) : MatX(-small_adjoint(xi));
  MatX power = MatX::Identity(xi.dim(), xi.dim());
  MatX sum = MatX::Zero(xi.dim(), xi.dim());
  double fact = 1.0;  // (n+1)!
  for (int n = 0; n < terms; ++n) {
    fact *= static_cast<double>(n + 1);
    sum += power / fact;
    power = power * ad;
  }
  return sum;
}

std::vector<double> bernoulli_numbers(int n) {
  std::vector<double> b(static_cast<std::size_t>(std::max(n, 1)), 0.0);
  b[0] = 1.0;
  for (int m = 1; m < n; ++m) {
    // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    double acc = 0.0;
    double binom = 1.0;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * static_cast<double>(m + 1 - j) / static_cast<double>(j + 1);
    }
    b[m] = -acc / static_cast<double>(m + 1);
  }
  return b;
}

MatX bernoulli_jacobian_inverse(const TangentVector& xi, Side side, int terms) {
  const std::vector<double> b = bernoulli_numbers(terms);
  const MatX ad = side == Side::Left ? small_adjoint(xi) : MatX(-small_adjoint(xi));
  MatX power = MatX::Identity(xi.dim(), xi.dim());
  MatX sum = MatX::Zero(xi.dim(), xi.dim());
  double fact = 1.0;  // n!
  for (int n = 0; n < terms; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    sum += b[n] / fact * power;
    power = power * ad;
  }
  return sum;
}

Mat3 adjoint_block_double_series(const Vec3& phi, const Vec3& t, int max_order) {
  const Mat3 p = so3::hat3(phi);
  const Mat3 th = so3::hat3(t);
  std::vector<Mat3> powers(static_cast<std::size_t>(max_order + 1));
  powers[0] = Mat3::Identity();
  for (int i = 1; i <= max_order; ++i) powers[i] = powers[i - 1] * p;
  Mat3 sum = Mat3::Zero();
  for (int total = 0; total <= max_order; ++total) {
    double fact = 1.0;
    for (int i = 2; i <= total + 1; ++i) fact *= static_cast<double>(i);
    for (int n = 0; n <= total; ++n) sum += powers[n] * th * powers[total - n] / fact;
  }
  return sum;
}

MatX rk4_matrix_ode(const std::function<MatX(double)>& a, const MatX& x0, double t0, double t1,
                    int steps) {
  const double h = (t1 - t0) / static_cast<double>(steps);
  MatX x = x0;
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    const MatX k1 = a(t) * x;
    const MatX k2 = a(t + 0.5 * h) * (x + 0.5 * h * k1);
    const MatX k3 = a(t + 0.5 * h) * (x + 0.5 * h * k2);
    const MatX k4 = a(t + h) * (x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

VecX rk4_vector_ode(const std::function<VecX(double, const VecX&)>& f, const VecX& x0, double t0,
                    double t1, int steps) {
  const double h = (t1 - t0) / static_cast<double>(steps);
  VecX x = x0;
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    const VecX k1 = f(t, x);
    const VecX k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
    const VecX k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
    const VecX k4 = f(t + h, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

MatX central_diff(const std::function<VecX(const VecX&)>& f, const VecX& x, double eps) {
  MatX jac;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    VecX xp = x;
    VecX xm = x;
    xp[i] += eps;
    xm[i] -= eps;
    const VecX col = (f(xp) - f(xm)) / (2.0 * eps);
    if (i == 0) jac.resize(col.size(), x.size());
    jac.col(i) = col;
  }
  return jac;
}

double radial_quadrature(const std::function<double(double)>& g, int intervals) {
  if (intervals < 2 || intervals % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "radial_quadrature: intervals must be even and >= 2");
  }
  const double h = std::numbers::pi / intervals;
  double sum = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double th = h * i;
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * 4.0 * std::numbers::pi * th * th * g(th);
  }
  return sum * h / 3.0;
}

}  // namespace sek3::oracle
