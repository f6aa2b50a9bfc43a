#pragma once

#include "sek3/batch.hpp"
#include "sek3/jacobians.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace sek3 {

/// ||log(g1^-1 g2)|| (Left, left-invariant) or ||log(g2 g1^-1)|| (Right, right-invariant).
[[nodiscard]] double distance(const GroupElement& g1, const GroupElement& g2, Side side);

/// Euclidean inner product of tangent coordinates.
[[nodiscard]] double inner_product(const TangentVector& a, const TangentVector& b);

/// Diagonal weights for the trace inner products. c and d weight the hat
/// form, a and b weight the small-adjoint form.
struct WeightSpec {
  double c = 0.5;
  VecX d;
  double a = 0.5;
  VecX b;

  /// c = 1/2, d_k = 1, a = 1/2, b_k = 0: both trace forms reduce to a^T b.
  [[nodiscard]] static WeightSpec defaults(int k);
};

/// tr(hat(a) W hat(b)^T) with W = diag(c, c, c, d_1..d_K).
[[nodiscard]] double trace_inner_product_hat(const TangentVector& a, const TangentVector& b,
                                             const WeightSpec& w);

/// tr(ad(a) W ad(b)^T) with W = blockdiag(a I3, b_1 I3, .., b_K I3).
[[nodiscard]] double trace_inner_product_adjoint(const TangentVector& a, const TangentVector& b,
                                                 const WeightSpec& w);

/// |det J(xi)|, the density of the Haar measure in exponential coordinates.
[[nodiscard]] double volume_element(const TangentVector& xi);

/// The same density written as (sin(theta/2) / (theta/2))^(2(K+1)).
[[nodiscard]] double volume_element_half_angle(const TangentVector& xi);

/// Axis-aligned sampling box for one translation slot.
struct TranslationBox {
  Vec3 lo;
  Vec3 hi;
};

/// Monte-Carlo estimate of the integral of f(exp(xi)) |det J(xi)| over
/// {||phi|| < pi} x box_1 x .. x box_K. Sample i is a pure function of
/// (seed, i) and the per-sample terms are summed in index order, so Serial
/// and Parallel return the same bits. f must be safe to call concurrently.
/// Throws InvalidBox unless boxes.size() == k and every lo < hi (finite);
/// InvalidArgument if samples < 1.
[[nodiscard]] double integrate_mc(const std::function<double(const GroupElement&)>& f, int k,
                                  std::span<const TranslationBox> boxes, std::int64_t samples,
                                  std::uint64_t seed, Execution exec = Execution::Parallel);

/// Tangent point drawn for sample `index` by integrate_mc.
[[nodiscard]] TangentVector integrate_mc_point(int k, std::span<const TranslationBox> boxes,
                                               std::uint64_t seed, std::uint64_t index);

/// Exact group curve exp(alpha log(g2 g1^-1)) g1.
[[nodiscard]] GroupElement interpolate(const GroupElement& g1, const GroupElement& g2,
                                       double alpha);

/// First-order coordinates of the same curve, alpha J_l(xi1)^-1 xi21 + xi1
/// with xi1 = log(g1), xi21 = log(g2 g1^-1). For validation only.
[[nodiscard]] TangentVector interpolate_coordinates_approx(const GroupElement& g1,
                                                           const GroupElement& g2, double alpha);

}  // namespace sek3
