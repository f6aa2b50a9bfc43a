#include "sek3/metrics.hpp"

#include "sek3/random.hpp"
#include "sek3/so3.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace sek3 {

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

void validate_boxes(int k, std::span<const TranslationBox> boxes) {
  if (k < 0 || static_cast<int>(boxes.size()) != k) {
    throw Error(ErrorKind::InvalidBox, "integrate_mc: need one box per translation slot, got " +
                                           std::to_string(boxes.size()) + " for K=" +
                                           std::to_string(k));
  }
  for (const TranslationBox& box : boxes) {
    if (!box.lo.allFinite() || !box.hi.allFinite() || (box.hi - box.lo).minCoeff() <= 0.0) {
      throw Error(ErrorKind::InvalidBox, "integrate_mc: box must be finite with lo < hi");
    }
  }
}

}  // namespace

double distance(const GroupElement& g1, const GroupElement& g2, Side side) {
  require_same_k(g1.k(), g2.k(), "distance");
  // g g^-1 carries rounding in the translations; identical inputs are exactly 0 apart.
  if (g1.rotation() == g2.rotation() && g1.translations() == g2.translations()) return 0.0;
  const GroupElement q = side == Side::Left ? compose(inverse(g1), g2) : compose(g2, inverse(g1));
  return log(q).coords().norm();
}

double inner_product(const TangentVector& a, const TangentVector& b) {
  require_same_k(a.k(), b.k(), "inner_product");
  return a.coords().dot(b.coords());
}

WeightSpec WeightSpec::defaults(int k) {
  WeightSpec w;
  w.d = VecX::Ones(k);
  w.b = VecX::Zero(k);
  return w;
}

double trace_inner_product_hat(const TangentVector& a, const TangentVector& b,
                               const WeightSpec& w) {
  require_same_k(a.k(), b.k(), "trace_inner_product_hat");
  const int k = a.k();
  if (w.d.size() != k) throw Error(ErrorKind::DimensionMismatch, "WeightSpec.d size != K");
  VecX diag(k + 3);
  diag << w.c, w.c, w.c, w.d;
  return (hat(a) * diag.asDiagonal() * hat(b).transpose()).trace();
}

double trace_inner_product_adjoint(const TangentVector& a, const TangentVector& b,
                                   const WeightSpec& w) {
  require_same_k(a.k(), b.k(), "trace_inner_product_adjoint");
  const int k = a.k();
  if (w.b.size() != k) throw Error(ErrorKind::DimensionMismatch, "WeightSpec.b size != K");
  VecX diag(3 * (k + 1));
  diag.head<3>().setConstant(w.a);
  for (int i = 0; i < k; ++i) diag.segment<3>(3 + 3 * i).setConstant(w.b[i]);
  return (small_adjoint(a) * diag.asDiagonal() * small_adjoint(b).transpose()).trace();
}

double volume_element(const TangentVector& xi) { return jacobian_determinant(xi); }

double volume_element_half_angle(const TangentVector& xi) {
  return std::pow(sinc(0.5 * xi.theta()), 2 * (xi.k() + 1));
}

TangentVector integrate_mc_point(int k, std::span<const TranslationBox> boxes, std::uint64_t seed,
                                 std::uint64_t index) {
  CounterRng rng(seed, index);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TangentVector xi(k);
  Vec3 dir;
  do {
    dir = Vec3(normal(rng), normal(rng), normal(rng));
  } while (dir.squaredNorm() < 1e-24);
  // Uniform in the ball: radius pi * u^(1/3).
  xi.phi() = std::numbers::pi * std::cbrt(unit(rng)) * dir.normalized();
  for (int j = 0; j < k; ++j) {
    const TranslationBox& box = boxes[j];
    for (int c = 0; c < 3; ++c) xi.t(j)[c] = box.lo[c] + (box.hi[c] - box.lo[c]) * unit(rng);
  }
  return xi;
}

double integrate_mc(const std::function<double(const GroupElement&)>& f, int k,
                    std::span<const TranslationBox> boxes, std::int64_t samples,
                    std::uint64_t seed, Execution exec) {
  validate_boxes(k, boxes);
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "integrate_mc: samples must be >= 1");

  double domain = 4.0 / 3.0 * std::pow(std::numbers::pi, 4);
  for (const TranslationBox& box : boxes) domain *= (box.hi - box.lo).prod();

  std::vector<double> terms(static_cast<std::size_t>(samples));
  detail::for_each_index(samples, exec, [&](std::int64_t i) {
    const TangentVector xi = integrate_mc_point(k, boxes, seed, static_cast<std::uint64_t>(i));
    terms[i] = f(exp(xi)) * jacobian_determinant(xi);
  });
  double sum = 0.0;
  for (double v : terms) sum += v;
  return domain * sum / static_cast<double>(samples);
}

GroupElement interpolate(const GroupElement& g1, const GroupElement& g2, double alpha) {
  require_same_k(g1.k(), g2.k(), "interpolate");
  const TangentVector xi21 = log(compose(g2, inverse(g1)));
  return compose(exp(alpha * xi21), g1);
}

TangentVector interpolate_coordinates_approx(const GroupElement& g1, const GroupElement& g2,
                                             double alpha) {
  require_same_k(g1.k(), g2.k(), "interpolate_coordinates_approx");
  const TangentVector xi1 = log(g1);
  const TangentVector xi21 = log(compose(g2, inverse(g1)));
  return TangentVector(VecX(alpha * (jacobian_inverse(xi1, Side::Left) * xi21.coords()))) + xi1;
}

}  // namespace sek3
