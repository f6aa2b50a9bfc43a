#include "sek3/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sek3 {

std::vector<GroupElement> batch_exp(std::span<const TangentVector> xs, Execution exec) {
  std::vector<GroupElement> out(xs.size());
  detail::for_each_index(static_cast<std::int64_t>(xs.size()), exec,
                         [&](std::int64_t i) { out[i] = exp(xs[i]); });
  return out;
}

std::vector<TangentVector> batch_log(std::span<const GroupElement> gs, Execution exec) {
  std::vector<TangentVector> out(gs.size());
  detail::for_each_index(static_cast<std::int64_t>(gs.size()), exec,
                         [&](std::int64_t i) { out[i] = log(gs[i]); });
  return out;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sek3
