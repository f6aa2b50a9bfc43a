#include "sek3/uncertainty.hpp"

#include "sek3/random.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

namespace sek3 {

SamplingFactor sampling_factor(const MatX& cov) {
  if (cov.rows() != cov.cols() || cov.rows() % 3 != 0 || cov.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "covariance must be 3(K+1) square");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorKind::NotPSD, "covariance is not symmetric");
  }
  const MatX sym = 0.5 * (cov + cov.transpose());
  Eigen::LLT<MatX> llt(sym);
  if (llt.info() == Eigen::Success) return {llt.matrixL(), false};

  Eigen::SelfAdjointEigenSolver<MatX> eig(sym);
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw Error(ErrorKind::NotPSD, "covariance has a negative eigenvalue");
  }
  const VecX root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return {eig.eigenvectors() * root.asDiagonal(), true};
}

std::vector<GroupElement> sample(const ConcentratedGaussian& d, std::uint64_t seed,
                                 std::int64_t n, Execution exec) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "sample: n must be >= 0");
  const int dim = 3 * (d.mean.k() + 1);
  if (d.cov.rows() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "sample: covariance size does not match mean");
  }
  const MatX l = sampling_factor(d.cov).l;
  std::vector<GroupElement> out(static_cast<std::size_t>(n));
  detail::for_each_index(n, exec, [&](std::int64_t i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    std::normal_distribution<double> normal(0.0, 1.0);
    VecX z(dim);
    for (int j = 0; j < dim; ++j) z[j] = normal(rng);
    const GroupElement e = exp(TangentVector(VecX(l * z)));
    out[i] = d.side == Side::Left ? compose(d.mean, e) : compose(e, d.mean);
  });
  return out;
}

ConcentratedGaussian recover(std::span<const GroupElement> samples, Side side) {
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "recover: no samples");
  const int k = samples.front().k();
  for (const GroupElement& g : samples) require_same_k(g.k(), k, "recover");
  const int dim = 3 * (k + 1);
  const double n = static_cast<double>(samples.size());

  GroupElement m = samples.front();
  std::vector<VecX> logs(samples.size());
  VecX mean_log(dim);
  const auto update_logs = [&] {
    const GroupElement m_inv = inverse(m);
    mean_log.setZero();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      logs[i] = log(compose(m_inv, samples[i])).coords();
      if (logs[i].head<3>().norm() >= 0.5 * std::numbers::pi) {
        throw Error(ErrorKind::NotConcentrated,
                    "recover: sample at rotation angle >= pi/2 from the running mean");
      }
      mean_log += logs[i];
    }
    mean_log /= n;
  };
  update_logs();
  for (int iter = 0; iter < 100 && mean_log.norm() >= 1e-10; ++iter) {
    m = compose(m, exp(TangentVector(mean_log)));
    update_logs();
  }

  MatX cov = MatX::Zero(dim, dim);
  for (const VecX& l : logs) cov.noalias() += l * l.transpose();
  cov /= n;
  ConcentratedGaussian left{m, cov, Side::Left};
  return side == Side::Left ? left : convert_side(left);
}

ConcentratedGaussian convert_side(const ConcentratedGaussian& d) {
  const MatX a = d.side == Side::Left ? adjoint(d.mean) : adjoint_inverse(d.mean);
  MatX cov = a * d.cov * a.transpose();
  cov = 0.5 * (cov + cov.transpose());
  return {d.mean, cov, opposite(d.side)};
}

}  // namespace sek3
