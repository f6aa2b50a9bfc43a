#pragma once

#include "sek3/jacobians.hpp"

#include <vector>

namespace sek3 {

/// K points packed as the (K+3) x K homogeneous block [p_1 .. p_K; I_K].
/// Point m is moved by the group as R p_m + t_m, i.e. it travels with
/// translation slot m.
class PointBlock {
 public:
  PointBlock() = default;
  explicit PointBlock(Mat3X points) : points_(std::move(points)) {}

  [[nodiscard]] int k() const noexcept { return static_cast<int>(points_.cols()); }
  [[nodiscard]] const Mat3X& points() const noexcept { return points_; }
  [[nodiscard]] auto point(int m) const { return points_.col(m); }

  /// Dense (K+3) x K block.
  [[nodiscard]] MatX homogeneous() const;
  /// Throws MalformedAlgebra if the bottom K x K block is not exactly I_K.
  [[nodiscard]] static PointBlock from_homogeneous(const MatX& block);

 private:
  Mat3X points_;
};

/// R p_m + t_m.
[[nodiscard]] Vec3 transform_point(const GroupElement& g, const PointBlock& block, int m);

/// d(Ad_{exp(delta) g} x)/d delta at delta = 0:  -ad(Ad_g x).
[[nodiscard]] MatX d_adjoint_action_left_perturbation(const GroupElement& g, const VecX& x);

/// d(exp_adjoint(xi) x)/d xi:  -ad(exp_adjoint(xi) x) J_l(xi).
[[nodiscard]] MatX d_adjoint_action_algebra(const TangentVector& xi, const VecX& x);

/// Per-point 3 x 3(K+1) Jacobians of (exp(delta) g) applied to point m at
/// delta = 0: [-(R p_m + t_m)^ | 0 .. I3 (slot m) .. 0].
[[nodiscard]] std::vector<MatX> d_point_action_left_perturbation(const GroupElement& g,
                                                                 const PointBlock& block);

/// Per-point Jacobians of exp(xi) applied to point m w.r.t. xi: the left
/// perturbation Jacobians at exp(xi) chained with J_l(xi).
[[nodiscard]] std::vector<MatX> d_point_action_algebra(const TangentVector& xi,
                                                       const PointBlock& block);

/// Row-stacks per-point Jacobians into one 3K x 3(K+1) matrix.
[[nodiscard]] MatX stack_point_jacobians(const std::vector<MatX>& per_point);

/// One weighted point correspondence: point `slot` of point block `block`,
/// moved by the unknown element, should land on `target`.
struct Observation {
  int block = 0;
  int slot = 0;
  Vec3 target = Vec3::Zero();
  double weight = 1.0;
};

struct FitOptions {
  int max_iters = 50;
  /// Stop once the Gauss-Newton step norm falls below this.
  double tol = 1e-10;
};

struct FitResult {
  GroupElement estimate;
  double cost = 0.0;
  /// Accepted updates.
  int iterations = 0;
  bool converged = false;
};

/// 1/2 sum w ||R p + t_slot - y||^2.
[[nodiscard]] double registration_cost(const GroupElement& g, const std::vector<PointBlock>& blocks,
                                       const std::vector<Observation>& obs);

/// Gauss-Newton with left-perturbation updates g <- exp(delta) g and plain
/// step halving. Throws RankDeficient if the normal matrix has condition
/// number above 1e12, NonDecreasingCost if 20 halvings fail to reduce the
/// cost while a non-negligible decrease was still predicted, and
/// InvalidArgument / DimensionMismatch on malformed observations.
[[nodiscard]] FitResult gauss_newton_fit(const std::vector<Observation>& obs,
                                         const std::vector<PointBlock>& blocks,
                                         const GroupElement& init, const FitOptions& options = {});

inline constexpr double kMaxNormalCondition = 1e12;
inline constexpr int kMaxHalvings = 20;

}  // namespace sek3
