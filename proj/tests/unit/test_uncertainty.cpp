#include "sek3/uncertainty.hpp"
#include "sek3/metrics.hpp"

#include "sek3/oracle/numeric_oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <vector>

using namespace sek3;
using sek3::test::max_abs_diff;

namespace {

MatX empirical_cov(const std::vector<GroupElement>& samples, const GroupElement& mean, Side side) {
  const int dim = 3 * (mean.k() + 1);
  MatX cov = MatX::Zero(dim, dim);
  const GroupElement inv = inverse(mean);
  for (const GroupElement& s : samples) {
    const VecX e = (side == Side::Left ? log(compose(inv, s)) : log(compose(s, inv))).coords();
    cov.noalias() += e * e.transpose();
  }
  return cov / static_cast<double>(samples.size());
}

double rel_frobenius(const MatX& a, const MatX& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST(SamplingFactor, CholeskyClippingAndErrors) {
  const MatX p = 0.01 * MatX::Identity(6, 6);
  const SamplingFactor f = sampling_factor(p);
  EXPECT_FALSE(f.clipped);
  EXPECT_LE(max_abs_diff(MatX(f.l * f.l.transpose()), p), 1e-16);
  const SamplingFactor z = sampling_factor(MatX::Zero(6, 6));
  EXPECT_TRUE(z.clipped);
  EXPECT_EQ(z.l, MatX::Zero(6, 6));
  MatX neg = p;
  neg(2, 2) = -1e-3;
  try {
    (void)sampling_factor(neg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPSD);
  }
  MatX asym = p;
  asym(0, 1) = 1e-3;
  EXPECT_THROW((void)sampling_factor(asym), Error);
}

TEST(Sample, ZeroCovarianceAndDeterminism) {
  auto rng = test::make_rng(120);
  const GroupElement mean = oracle::random_element(rng, 2);
  for (Side side : {Side::Left, Side::Right}) {
    const ConcentratedGaussian d{mean, MatX::Zero(9, 9), side};
    for (const GroupElement& s : sample(d, 5, 20)) EXPECT_LE(max_abs_diff(s, mean), 0.0);
  }
  const ConcentratedGaussian d{mean, 0.05 * MatX::Identity(9, 9), Side::Right};
  const auto a = sample(d, 11, 500);
  const auto b = sample(d, 11, 500);
  const auto serial = sample(d, 11, 500, Execution::Serial);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].embedding(), b[i].embedding());
    EXPECT_EQ(a[i].embedding(), serial[i].embedding());
    EXPECT_TRUE(is_valid(a[i]));
  }
  EXPECT_NE(sample(d, 12, 1)[0].embedding(), a[0].embedding());
  // Draw i does not depend on how many draws are requested.
  EXPECT_EQ(sample(d, 11, 3)[2].embedding(), a[2].embedding());
}

TEST(Sample, EmpiricalCovarianceAtIdentity) {
  const MatX p = 0.01 * MatX::Identity(9, 9);
  const ConcentratedGaussian d{GroupElement(2), p, Side::Left};
  const auto s = sample(d, 2024, 100000);
  EXPECT_LE(rel_frobenius(empirical_cov(s, GroupElement(2), Side::Left), p), 0.1);
}

TEST(Recover, TrivialCases) {
  auto rng = test::make_rng(121);
  const GroupElement g = oracle::random_element(rng, 2);
  const std::vector<GroupElement> same(10, g);
  for (Side side : {Side::Left, Side::Right}) {
    const ConcentratedGaussian d = recover(same, side);
    EXPECT_LE(max_abs_diff(d.mean, g), 1e-14);
    EXPECT_LE(d.cov.cwiseAbs().maxCoeff(), 1e-28);
    EXPECT_EQ(d.side, side);
  }
  const std::vector<GroupElement> one{g};
  EXPECT_LE(max_abs_diff(recover(one, Side::Left).mean, g), 0.0);
  EXPECT_EQ(recover(one, Side::Left).cov, MatX::Zero(9, 9));
}

TEST(Recover, NotConcentrated) {
  TangentVector far(1);
  far.phi() = Vec3(0, 0, 2.0);
  const std::vector<GroupElement> spread{GroupElement(1), exp(far)};
  try {
    (void)recover(spread, Side::Left);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConcentrated);
  }
}

TEST(Recover, RoundTripWithSample) {
  auto rng = test::make_rng(122);
  const MatX p = 0.01 * MatX::Identity(9, 9);
  for (Side side : {Side::Left, Side::Right}) {
    const GroupElement mean = oracle::random_element(rng, 2);
    const auto s = sample({mean, p, side}, 77, 100000);
    const ConcentratedGaussian d = recover(s, side);
    EXPECT_LE(distance(d.mean, mean, Side::Left), 0.01);
    EXPECT_LE(rel_frobenius(d.cov, p), 0.1);
  }
}

TEST(ConvertSide, IdentityRoundTripAndStatistics) {
  auto rng = test::make_rng(123);
  const MatX p = 0.01 * MatX::Identity(9, 9);
  const ConcentratedGaussian at_id{GroupElement(2), p, Side::Left};
  EXPECT_LE(max_abs_diff(convert_side(at_id).cov, p), 0.0);
  EXPECT_EQ(convert_side(at_id).side, Side::Right);

  const ConcentratedGaussian d{oracle::random_element(rng, 2), p, Side::Left};
  const ConcentratedGaussian back = convert_side(convert_side(d));
  EXPECT_EQ(back.side, Side::Left);
  EXPECT_LE(max_abs_diff(back.cov, d.cov), 1e-12);

  // Right samples of the converted distribution carry the original left covariance.
  const ConcentratedGaussian r = convert_side(d);
  const auto s = sample(r, 5, 100000);
  EXPECT_LE(rel_frobenius(empirical_cov(s, d.mean, Side::Left), d.cov), 0.1);
  const auto s_left = sample(d, 6, 100000);
  EXPECT_LE(rel_frobenius(empirical_cov(s_left, d.mean, Side::Right), r.cov), 0.1);
}

TEST(ConcentratedGaussian, InvarianceOfQuotients) {
  auto rng = test::make_rng(124);
  for (int i = 0; i < 100; ++i) {
    const GroupElement mean = oracle::random_element(rng, 2);
    const GroupElement gamma = oracle::random_element(rng, 2);
    const TangentVector eps = oracle::random_tangent(rng, 2, 0.3, 0.3);
    const GroupElement tr = compose(exp(eps), mean);
    EXPECT_LE(max_abs_diff(compose(compose(tr, gamma), inverse(compose(mean, gamma))),
                           compose(tr, inverse(mean))),
              1e-12);
    const GroupElement tl = compose(mean, exp(eps));
    EXPECT_LE(max_abs_diff(compose(inverse(compose(gamma, mean)), compose(gamma, tl)),
                           compose(inverse(mean), tl)),
              1e-12);
  }
}
