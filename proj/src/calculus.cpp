#include "sek3/calculus.hpp"

#include "sek3/so3.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace sek3 {

MatX PointBlock::homogeneous() const {
  const int k = this->k();
  MatX out = MatX::Zero(k + 3, k);
  out.topRows(3) = points_;
  out.bottomRows(k) = MatX::Identity(k, k);
  return out;
}

PointBlock PointBlock::from_homogeneous(const MatX& block) {
  const Eigen::Index k = block.cols();
  if (block.rows() != k + 3 || block.bottomRows(k) != MatX::Identity(k, k)) {
    throw Error(ErrorKind::MalformedAlgebra, "PointBlock: bottom block must be exactly I_K");
  }
  return PointBlock(Mat3X(block.topRows(3)));
}

Vec3 transform_point(const GroupElement& g, const PointBlock& block, int m) {
  return g.rotation() * block.point(m) + g.translation(m);
}

MatX d_adjoint_action_left_perturbation(const GroupElement& g, const VecX& x) {
  return -small_adjoint(TangentVector(VecX(adjoint(g) * x)));
}

MatX d_adjoint_action_algebra(const TangentVector& xi, const VecX& x) {
  return -small_adjoint(TangentVector(VecX(exp_adjoint(xi) * x))) * jacobian(xi, Side::Left);
}

std::vector<MatX> d_point_action_left_perturbation(const GroupElement& g,
                                                   const PointBlock& block) {
  require_same_k(g.k(), block.k(), "d_point_action_left_perturbation");
  const int k = g.k();
  std::vector<MatX> out;
  out.reserve(k);
  for (int m = 0; m < k; ++m) {
    MatX e = MatX::Zero(3, 3 * (k + 1));
    e.leftCols<3>() = -so3::hat3(transform_point(g, block, m));
    e.block<3, 3>(0, 3 + 3 * m) = Mat3::Identity();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<MatX> d_point_action_algebra(const TangentVector& xi, const PointBlock& block) {
  require_same_k(xi.k(), block.k(), "d_point_action_algebra");
  std::vector<MatX> out = d_point_action_left_perturbation(exp(xi), block);
  const MatX jl = jacobian(xi, Side::Left);
  for (MatX& e : out) e = e * jl;
  return out;
}

MatX stack_point_jacobians(const std::vector<MatX>& per_point) {
  if (per_point.empty()) return MatX(0, 0);
  MatX out(3 * static_cast<Eigen::Index>(per_point.size()), per_point.front().cols());
  for (std::size_t m = 0; m < per_point.size(); ++m) out.middleRows(3 * m, 3) = per_point[m];
  return out;
}

namespace {

void validate(const std::vector<Observation>& obs, const std::vector<PointBlock>& blocks, int k) {
  if (obs.empty()) throw Error(ErrorKind::InvalidArgument, "gauss_newton_fit: no observations");
  for (const PointBlock& b : blocks) require_same_k(b.k(), k, "gauss_newton_fit point block");
  for (const Observation& o : obs) {
    if (o.block < 0 || o.block >= static_cast<int>(blocks.size()) || o.slot < 0 || o.slot >= k) {
      throw Error(ErrorKind::DimensionMismatch,
                  "gauss_newton_fit: observation refers to block " + std::to_string(o.block) +
                      " slot " + std::to_string(o.slot));
    }
    if (!(o.weight >= 0.0) || !std::isfinite(o.weight) || !o.target.allFinite()) {
      throw Error(ErrorKind::InvalidArgument, "gauss_newton_fit: weights must be finite and >= 0");
    }
  }
}

}  // namespace

double registration_cost(const GroupElement& g, const std::vector<PointBlock>& blocks,
                         const std::vector<Observation>& obs) {
  double cost = 0.0;
  for (const Observation& o : obs) {
    const Vec3 r = transform_point(g, blocks[o.block], o.slot) - o.target;
    cost += 0.5 * o.weight * r.squaredNorm();
  }
  return cost;
}

FitResult gauss_newton_fit(const std::vector<Observation>& obs,
                           const std::vector<PointBlock>& blocks, const GroupElement& init,
                           const FitOptions& options) {
  const int k = init.k();
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "gauss_newton_fit: needs K >= 1");
  validate(obs, blocks, k);
  const int n = 3 * (k + 1);

  FitResult res{init, registration_cost(init, blocks, obs), 0, false};
  const double initial_cost = res.cost;

  for (int iter = 0; iter < options.max_iters; ++iter) {
    MatX h = MatX::Zero(n, n);
    VecX b = VecX::Zero(n);
    for (const Observation& o : obs) {
      const Vec3 p = transform_point(res.estimate, blocks[o.block], o.slot);
      // Left-perturbation Jacobian of point `slot`, without materializing all K.
      MatX e = MatX::Zero(3, n);
      e.leftCols<3>() = -so3::hat3(p);
      e.block<3, 3>(0, 3 + 3 * o.slot) = Mat3::Identity();
      h.noalias() += o.weight * e.transpose() * e;
      b.noalias() -= o.weight * e.transpose() * (p - o.target);
    }

    const Eigen::SelfAdjointEigenSolver<MatX> eig(h, Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    if (!(lmax > 0.0) || !(lmin > 0.0) || lmax / lmin > kMaxNormalCondition) {
      throw Error(ErrorKind::RankDeficient,
                  "gauss_newton_fit: normal matrix condition number " +
                      (lmin > 0.0 ? std::to_string(lmax / lmin) : std::string("inf")) +
                      " exceeds 1e12; the observations do not determine every block");
    }

    const VecX delta = h.ldlt().solve(b);
    if (delta.norm() < options.tol) {
      res.converged = true;
      return res;
    }

    double step = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, step *= 0.5) {
      const GroupElement candidate = compose(exp(TangentVector(VecX(step * delta))), res.estimate);
      const double cost = registration_cost(candidate, blocks, obs);
      if (cost <= res.cost) {
        res.estimate = candidate;
        res.cost = cost;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // At the rounding floor the predicted decrease is below what double
      // precision can resolve in the cost; that is convergence, not failure.
      const double predicted = 0.5 * delta.dot(b);
      if (predicted <= 1e-14 * initial_cost + 1e-300) {
        res.converged = true;
        return res;
      }
      throw Error(ErrorKind::NonDecreasingCost,
                  "gauss_newton_fit: cost did not decrease after 20 step halvings");
    }
    ++res.iterations;
  }
  return res;
}

}  // namespace sek3
