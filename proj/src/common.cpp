#include "sek3/common.hpp"

#include <cmath>
#include <string>

namespace sek3 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedAlgebra: return "MalformedAlgebra";
    case ErrorKind::MalformedAdjoint: return "MalformedAdjoint";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::InvalidBox: return "InvalidBox";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonDecreasingCost: return "NonDecreasingCost";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotConcentrated: return "NotConcentrated";
    case ErrorKind::LogBranch: return "LogBranch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void require_same_k(int a, int b, const char* where) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(where) + ": K=" + std::to_string(a) + " vs K=" + std::to_string(b));
  }
}

namespace {

// Below this angle the power series converges fast with no cancellation
// (largest term at theta=2 is 2, terms fall below 1e-17 by j=12).
constexpr double kSeriesCutoff = 2.0;
constexpr int kSeriesTerms = 14;

double series_c(int n, double theta2) {
  double inv_fact = 1.0;
  for (int i = 2; i <= n; ++i) inv_fact /= i;
  double term = inv_fact;
  double sum = term;
  for (int j = 0; j < kSeriesTerms; ++j) {
    term *= -theta2 / static_cast<double>((2 * j + n + 1) * (2 * j + n + 2));
    sum += term;
  }
  return sum;
}

}  // namespace

TrigSeries trig_series(double theta) {
  TrigSeries s{};
  if (theta < kSeriesCutoff) {
    const double t2 = theta * theta;
    s.c0 = series_c(0, t2);
    s.c1 = series_c(1, t2);
    s.c2 = series_c(2, t2);
    s.c3 = series_c(3, t2);
    s.c4 = series_c(4, t2);
    s.c5 = series_c(5, t2);
    return s;
  }
  const double t2 = theta * theta;
  s.c0 = std::cos(theta);
  s.c1 = std::sin(theta) / theta;
  s.c2 = (1.0 - s.c0) / t2;
  s.c3 = (1.0 - s.c1) / t2;
  s.c4 = (0.5 - s.c2) / t2;
  s.c5 = (1.0 / 6.0 - s.c3) / t2;
  return s;
}

}  // namespace sek3
