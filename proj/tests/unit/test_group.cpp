#include "sek3/group.hpp"
#include "sek3/so3.hpp"

#include "sek3/oracle/numeric_oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <Eigen/LU>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

using namespace sek3;
using sek3::test::max_abs_diff;

namespace {

bool throws_kind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST(TangentVector, ShapeAndSlots) {
  TangentVector xi(2);
  EXPECT_EQ(xi.k(), 2);
  EXPECT_EQ(xi.dim(), 9);
  xi.t(1) = Vec3(7, 8, 9);
  EXPECT_EQ(xi.coords().tail<3>(), Vec3(7, 8, 9));
  EXPECT_TRUE(throws_kind(ErrorKind::DimensionMismatch, [] { TangentVector bad(VecX(4)); }));
  EXPECT_TRUE(throws_kind(ErrorKind::DimensionMismatch,
                          [] { (void)(TangentVector(1) + TangentVector(2)); }));
}

TEST(GroupCompose, IdentityAndDenseProduct) {
  auto rng = test::make_rng(10);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 50; ++i) {
      const GroupElement a = oracle::random_element(rng, k);
      const GroupElement b = oracle::random_element(rng, k);
      EXPECT_LE(max_abs_diff(compose(GroupElement::identity(k), a), a), 0.0);
      EXPECT_LE(max_abs_diff(compose(a, b).embedding(), MatX(a.embedding() * b.embedding())),
                1e-13);
      EXPECT_LE(max_abs_diff(compose(a, inverse(a)), GroupElement::identity(k)), 1e-12);
    }
  }
  EXPECT_TRUE(throws_kind(ErrorKind::DimensionMismatch,
                          [] { (void)compose(GroupElement(1), GroupElement(2)); }));
}

TEST(GroupInverse, DenseInverseAndInvolution) {
  auto rng = test::make_rng(11);
  EXPECT_LE(max_abs_diff(inverse(GroupElement::identity(2)), GroupElement::identity(2)), 0.0);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = oracle::random_element(rng, 2);
    EXPECT_LE(max_abs_diff(inverse(g).embedding(), MatX(g.embedding().inverse())), 1e-10);
    EXPECT_LE(max_abs_diff(inverse(inverse(g)), g), 1e-13);
  }
}

TEST(GroupEmbedding, RoundTripAndValidation) {
  auto rng = test::make_rng(12);
  const GroupElement g = oracle::random_element(rng, 3);
  const MatX m = g.embedding();
  EXPECT_EQ(m.rows(), 6);
  EXPECT_EQ(m.bottomRightCorner(3, 3), MatX::Identity(3, 3));
  EXPECT_EQ(m.bottomLeftCorner(3, 3), MatX::Zero(3, 3));
  EXPECT_LE(max_abs_diff(GroupElement::from_embedding(m), g), 0.0);
  MatX bad = m;
  bad(4, 0) = 0.1;
  EXPECT_TRUE(throws_kind(ErrorKind::MalformedAlgebra,
                          [&] { (void)GroupElement::from_embedding(bad); }));
}

TEST(GroupHatVee, RoundTripAndGenerators) {
  EXPECT_EQ(hat(TangentVector(2)), MatX::Zero(5, 5));
  auto rng = test::make_rng(13);
  for (int k = 0; k <= 3; ++k) {
    const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
    EXPECT_EQ(vee(hat(xi)), xi);
  }
  // Generators are hat of basis vectors; spot-check the layout at K=2.
  const int k = 2;
  MatX g0 = MatX::Zero(5, 5);
  g0(1, 2) = -1;
  g0(2, 1) = 1;
  EXPECT_EQ(generator(k, 0), g0);
  MatX g1 = MatX::Zero(5, 5);
  g1(0, 2) = 1;
  g1(2, 0) = -1;
  EXPECT_EQ(generator(k, 1), g1);
  for (int slot = 0; slot < k; ++slot) {
    for (int axis = 0; axis < 3; ++axis) {
      MatX g = MatX::Zero(5, 5);
      g(axis, 3 + slot) = 1;
      EXPECT_EQ(generator(k, 3 + 3 * slot + axis), g);
    }
  }
  // hat(sum c_i e_i) == sum c_i G_i
  const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
  MatX sum = MatX::Zero(5, 5);
  for (int i = 0; i < xi.dim(); ++i) sum += xi.coords()[i] * generator(k, i);
  EXPECT_EQ(hat(xi), sum);

  MatX bad = hat(xi);
  bad(3, 0) = 1e-6;
  EXPECT_TRUE(throws_kind(ErrorKind::MalformedAlgebra, [&] { (void)vee(bad); }));
  bad = hat(xi);
  bad(0, 1) += 1e-6;
  EXPECT_TRUE(throws_kind(ErrorKind::MalformedAlgebra, [&] { (void)vee(bad); }));
}

TEST(GroupBracket, AlternatingAntisymmetricAndCommutator) {
  auto rng = test::make_rng(14);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 100; ++i) {
      const TangentVector a = oracle::random_tangent(rng, k, 3.0);
      const TangentVector b = oracle::random_tangent(rng, k, 3.0);
      EXPECT_EQ(bracket(a, a), TangentVector(k));
      EXPECT_EQ(bracket(a, b), -bracket(b, a));
      const MatX comm = hat(a) * hat(b) - hat(b) * hat(a);
      EXPECT_LE(max_abs_diff(vee(comm), bracket(a, b)), 1e-13);
    }
  }
}

TEST(GroupExp, TrivialCases) {
  EXPECT_LE(max_abs_diff(exp(TangentVector(2)), GroupElement::identity(2)), 0.0);
  TangentVector xi(2);
  xi.t(0) = Vec3(1, 2, 3);
  xi.t(1) = Vec3(-4, 5, 0.5);
  const GroupElement g = exp(xi);
  EXPECT_EQ(g.rotation(), Mat3::Identity());
  EXPECT_EQ(Vec3(g.translation(0)), Vec3(1, 2, 3));
  EXPECT_EQ(Vec3(g.translation(1)), Vec3(-4, 5, 0.5));
}

TEST(GroupExp, MatchesSeriesOracleAndEmbeddingClosedForm) {
  auto rng = test::make_rng(15);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 250; ++i) {
      const TangentVector xi = oracle::random_tangent(rng, k, 3.0);
      const MatX dense = oracle::expm_series(hat(xi));
      EXPECT_LE(max_abs_diff(exp(xi).embedding(), dense), 1e-12);
      EXPECT_LE(max_abs_diff(exp_embedding_closed_form(xi), dense), 1e-12);
    }
  }
}

TEST(GroupLog, TrivialCases) {
  EXPECT_EQ(log(GroupElement::identity(3)), TangentVector(3));
  Mat3X p(3, 2);
  p << 1, 2, 3, 4, 5, 6;
  const TangentVector xi = log(GroupElement(Mat3::Identity(), p));
  EXPECT_EQ(Vec3(xi.phi()), Vec3::Zero());
  EXPECT_EQ(Vec3(xi.t(0)), Vec3(p.col(0)));
  EXPECT_EQ(Vec3(xi.t(1)), Vec3(p.col(1)));
}

TEST(GroupLog, RoundTrip) {
  auto rng = test::make_rng(16);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 1000; ++i) {
      const TangentVector xi = oracle::random_tangent(rng, k, std::numbers::pi - 0.1);
      EXPECT_LE(max_abs_diff(log(exp(xi)), xi), 1e-10);
    }
  }
}

TEST(GroupLog, MatchesDenseMatrixLog) {
  auto rng = test::make_rng(17);
  for (int i = 0; i < 50; ++i) {
    const TangentVector xi = oracle::random_tangent(rng, 2, 2.5);
    const MatX l = oracle::logm_inverse_scaling(exp(xi).embedding());
    EXPECT_LE(max_abs_diff(l, hat(xi)), 1e-9);
  }
}

TEST(GroupAlgebra, QuarticIdentity) {
  auto rng = test::make_rng(18);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 250; ++i) {
      const TangentVector xi = oracle::random_tangent(rng, k, 6.0);
      const MatX s = hat(xi);
      const MatX s2 = s * s;
      const double th = xi.theta();
      const MatX resid = s2 * s2 + th * th * s2;
      EXPECT_LE(resid.cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, std::pow(th, 4)));
    }
  }
}

TEST(GroupReduction, KZeroMatchesSo3AndKOneMatchesSe3) {
  auto rng = test::make_rng(19);
  for (int i = 0; i < 200; ++i) {
    const Vec3 phi = oracle::random_vec3(rng, 0.0, std::numbers::pi - 0.1);
    const TangentVector xi(phi, Mat3X(3, 0));
    EXPECT_LE(max_abs_diff(exp(xi).rotation(), so3::exp(phi)), 1e-13);
    EXPECT_LE(max_abs_diff(Vec3(log(exp(xi)).phi()), so3::log(so3::exp(phi))), 1e-13);

    const TangentVector x1 = oracle::random_tangent(rng, 1, 3.0);
    const GroupElement g = exp(x1);
    EXPECT_LE(max_abs_diff(Vec3(g.translation(0)), Vec3(so3::jl(x1.phi()) * x1.t(0))), 1e-13);
    EXPECT_LE(max_abs_diff(g.embedding(), oracle::expm_series(hat(x1))), 1e-12);
  }
}

TEST(GroupAction, TrivialAndHomomorphism) {
  auto rng = test::make_rng(20);
  const Vec3 b(0.3, -1.0, 2.0);
  const std::array<double, 2> gamma{0.7, -1.3};
  EXPECT_EQ(act(GroupElement::identity(2), b, gamma), b);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = oracle::random_element(rng, 2);
    const GroupElement h = oracle::random_element(rng, 2);
    const std::array<double, 2> zero{0.0, 0.0};
    EXPECT_LE(max_abs_diff(act(g, b, zero), Vec3(g.rotation() * b)), 1e-15);
    EXPECT_LE(max_abs_diff(act(g, act(h, b, gamma), gamma), act(compose(g, h), b, gamma)), 1e-12);
  }
  const std::vector<double> short_gamma{1.0};
  EXPECT_TRUE(throws_kind(ErrorKind::DimensionMismatch,
                          [&] { (void)act(GroupElement(2), b, short_gamma); }));
}

TEST(GroupValidity, DetectsBadRotation) {
  auto rng = test::make_rng(21);
  const GroupElement g = oracle::random_element(rng, 1);
  EXPECT_TRUE(is_valid(g));
  Mat3 r = g.rotation();
  r(0, 0) += 1e-6;
  EXPECT_FALSE(is_valid(GroupElement(r, g.translations())));
  EXPECT_FALSE(is_valid(GroupElement(-Mat3::Identity(), g.translations())));
}
