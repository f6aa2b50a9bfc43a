#include "sek3/bch.hpp"
#include "sek3/so3.hpp"

#include "sek3/oracle/numeric_oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

using namespace sek3;
using sek3::test::max_abs_diff;

namespace {

TangentVector exact_compose(const TangentVector& a, const TangentVector& b) {
  return log(compose(exp(a), exp(b)));
}

TangentVector scaled_to(TangentVector v, double norm) {
  v *= norm / v.coords().norm();
  return v;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST(Bch, TrivialCases) {
  auto rng = test::make_rng(50);
  for (int order = 1; order <= 4; ++order) {
    const TangentVector a = oracle::random_tangent(rng, 2, 2.0);
    EXPECT_EQ(bch(a, TangentVector(2), order), a);
    const TangentVector xi = oracle::random_tangent(rng, 2, 1.0);
    EXPECT_LE(max_abs_diff(bch(0.3 * xi, -1.1 * xi, order), (0.3 - 1.1) * xi), 1e-15);
  }
  EXPECT_THROW((void)bch(TangentVector(1), TangentVector(1), 5), Error);
  EXPECT_THROW((void)bch(TangentVector(1), TangentVector(1), 0), Error);
  EXPECT_THROW((void)bch(TangentVector(1), TangentVector(2), 2), Error);
}

TEST(Bch, OrderFourMatchesExactComposition) {
  auto rng = test::make_rng(51);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 200; ++i) {
      const TangentVector a = scaled_to(oracle::random_tangent(rng, k, 1.0), 0.05);
      const TangentVector b = scaled_to(oracle::random_tangent(rng, k, 1.0), 0.05);
      EXPECT_LE((bch(a, b, 4).coords() - exact_compose(a, b).coords()).norm(), 1e-6);
    }
  }
}

TEST(Bch, TruncationErrorShrinksWithOrder) {
  auto rng = test::make_rng(52);
  const TangentVector a = scaled_to(oracle::random_tangent(rng, 2, 1.0), 0.1);
  const TangentVector b = scaled_to(oracle::random_tangent(rng, 2, 1.0), 0.1);
  const TangentVector exact = exact_compose(a, b);
  double prev = 1e300;
  for (int order = 1; order <= 4; ++order) {
    const double err = (bch(a, b, order).coords() - exact.coords()).norm();
    EXPECT_LT(err, prev);
    prev = err;
  }
}

TEST(Bch, CommutatorFormAgrees) {
  auto rng = test::make_rng(53);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 100; ++i) {
      const TangentVector a = oracle::random_tangent(rng, k, 1.0, 1.0);
      const TangentVector b = oracle::random_tangent(rng, k, 1.0, 1.0);
      for (int order = 1; order <= 4; ++order) {
        EXPECT_LE(max_abs_diff(bch(a, b, order), bch_commutator_form(a, b, order)), 1e-13);
      }
    }
  }
}

TEST(BchFirstOrder, ZeroSmallArgument) {
  auto rng = test::make_rng(54);
  const TangentVector a = oracle::random_tangent(rng, 2, 2.0);
  EXPECT_LE(max_abs_diff(bch_first_order(TangentVector(2), a, SmallArg::First), a), 0.0);
  EXPECT_LE(max_abs_diff(bch_first_order(a, TangentVector(2), SmallArg::Second), a), 0.0);
}

TEST(BchFirstOrder, QuadraticErrorUnderHalving) {
  auto rng = test::make_rng(55);
  for (int k : {0, 1, 2, 3}) {
    for (SmallArg which : {SmallArg::First, SmallArg::Second}) {
      std::vector<double> ratios;
      for (int i = 0; i < 100; ++i) {
        const TangentVector big = oracle::random_tangent(rng, k, 2.0, 1.0);
        const TangentVector dir = scaled_to(oracle::random_tangent(rng, k, 1.0, 1.0), 1.0);
        const auto err = [&](double eps) {
          const TangentVector small = eps * dir;
          const TangentVector a = which == SmallArg::First ? small : big;
          const TangentVector b = which == SmallArg::First ? big : small;
          return (bch_first_order(a, b, which).coords() - exact_compose(a, b).coords()).norm();
        };
        ratios.push_back(err(1e-2) / err(5e-3));
      }
      const double med = median(ratios);
      EXPECT_GE(med, 3.5) << "k=" << k;
      EXPECT_LE(med, 4.5) << "k=" << k;
    }
  }
}

TEST(Perturb, ZeroDeltaAndQuadraticError) {
  auto rng = test::make_rng(56);
  for (Side side : {Side::Left, Side::Right}) {
    const TangentVector xi = oracle::random_tangent(rng, 2, 2.0);
    EXPECT_LE(max_abs_diff(perturb(xi, TangentVector(2), side), exp(xi)), 0.0);
    std::vector<double> ratios;
    for (int i = 0; i < 100; ++i) {
      const TangentVector x = oracle::random_tangent(rng, 2, 2.5);
      const TangentVector dir = scaled_to(oracle::random_tangent(rng, 2, 1.0, 1.0), 1.0);
      const auto err = [&](double eps) {
        const TangentVector d = eps * dir;
        return (exp(x + d).embedding() - perturb(x, d, side).embedding()).norm();
      };
      const double e1 = err(1e-3);
      EXPECT_LE(e1, 10.0 * 1e-6);
      ratios.push_back(e1 / err(5e-4));
    }
    EXPECT_GE(median(ratios), 3.5);
    EXPECT_LE(median(ratios), 4.5);
  }
}

TEST(GroupDifference, MatchesQuotientLogToSecondOrder) {
  auto rng = test::make_rng(57);
  const TangentVector xi0 = oracle::random_tangent(rng, 1, 2.0);
  EXPECT_EQ(group_difference(xi0, TangentVector(1), Side::Left), TangentVector(1));
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<double> ratios;
    for (int i = 0; i < 100; ++i) {
      const TangentVector x = oracle::random_tangent(rng, 2, 2.5);
      const TangentVector dir = scaled_to(oracle::random_tangent(rng, 2, 1.0, 1.0), 1.0);
      const auto err = [&](double eps) {
        const TangentVector d = eps * dir;
        const GroupElement t = exp(x);
        const GroupElement t2 = exp(x + d);
        const TangentVector exact = side == Side::Right ? log(compose(inverse(t), t2))
                                                        : log(compose(t2, inverse(t)));
        return (group_difference(x, d, side).coords() - exact.coords()).norm();
      };
      ratios.push_back(err(1e-3) / err(5e-4));
    }
    EXPECT_GE(median(ratios), 3.5);
    EXPECT_LE(median(ratios), 4.5);
  }
}

TEST(AdjointPerturbation, QuadraticError) {
  auto rng = test::make_rng(58);
  std::vector<double> ratios;
  for (int i = 0; i < 100; ++i) {
    const TangentVector x = oracle::random_tangent(rng, 2, 2.5);
    const TangentVector dir = scaled_to(oracle::random_tangent(rng, 2, 1.0, 1.0), 1.0);
    const auto err = [&](double eps) {
      const TangentVector d = eps * dir;
      const TangentVector step(VecX(jacobian(x, Side::Left) * d.coords()));
      return (exp_adjoint(x + d) - exp_adjoint(step) * exp_adjoint(x)).norm();
    };
    ratios.push_back(err(1e-3) / err(5e-4));
  }
  EXPECT_GE(median(ratios), 3.5);
  EXPECT_LE(median(ratios), 4.5);
}

TEST(BchInverseJacobian, BernoulliSeries) {
  auto rng = test::make_rng(59);
  for (int i = 0; i < 100; ++i) {
    const TangentVector xi = scaled_to(oracle::random_tangent(rng, 2, 1.0, 1.0), 0.1);
    for (Side side : {Side::Left, Side::Right}) {
      EXPECT_LE(max_abs_diff(jacobian_inverse(xi, side),
                             oracle::bernoulli_jacobian_inverse(xi, side, 8)),
                1e-8);
    }
  }
}
