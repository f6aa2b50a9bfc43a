#pragma once

#include "sek3/batch.hpp"
#include "sek3/jacobians.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sek3 {

/// T = mean exp(eps) (Left) or T = exp(eps) mean (Right), eps ~ N(0, cov).
struct ConcentratedGaussian {
  GroupElement mean;
  MatX cov;
  Side side = Side::Left;
};

/// L with L L^T = cov. Uses Cholesky; a semidefinite cov falls back to an
/// eigen-decomposition with negative eigenvalues clipped to zero, reported
/// through `clipped`.
struct SamplingFactor {
  MatX l;
  bool clipped = false;
};

/// Throws NotPSD if cov is not symmetric within 1e-12 (relative to its
/// largest entry) or has an eigenvalue below -1e-12 (same scale).
[[nodiscard]] SamplingFactor sampling_factor(const MatX& cov);

/// n draws; draw i depends only on (seed, i), so Serial and Parallel agree
/// bit for bit.
[[nodiscard]] std::vector<GroupElement> sample(const ConcentratedGaussian& d, std::uint64_t seed,
                                               std::int64_t n,
                                               Execution exec = Execution::Parallel);

/// Fits mean and covariance by the fixed point m <- m exp(mean_i log(m^-1 T_i))
/// (left convention; a Right result is converted at the end). Stops when the
/// mean correction is below 1e-10 or after 100 iterations. Covariance is the
/// 1/n second moment of the final logs. Throws NotConcentrated if any sample
/// sits at rotation angle pi/2 or more from the running mean.
[[nodiscard]] ConcentratedGaussian recover(std::span<const GroupElement> samples, Side side);

/// Same distribution on the other side: cov' = Ad cov Ad^T with Ad = Ad_mean
/// (left to right) or Ad_mean^-1 (right to left).
[[nodiscard]] ConcentratedGaussian convert_side(const ConcentratedGaussian& d);

}  // namespace sek3
