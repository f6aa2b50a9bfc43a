#pragma once

#include "sek3/group.hpp"

#include <cstdint>
#include <exception>
#include <span>
#include <vector>

namespace sek3 {

/// Every batched kernel has a plain loop (Serial) kept as the reference and an
/// OpenMP loop (Parallel). Both produce bit-identical output.
enum class Execution { Serial, Parallel };

/// exp of every tangent vector.
[[nodiscard]] std::vector<GroupElement> batch_exp(std::span<const TangentVector> xs,
                                                  Execution exec = Execution::Parallel);

/// log of every element.
[[nodiscard]] std::vector<TangentVector> batch_log(std::span<const GroupElement> gs,
                                                   Execution exec = Execution::Parallel);

/// Number of OpenMP threads a Parallel kernel would use (1 without OpenMP).
[[nodiscard]] int parallel_threads();

namespace detail {

// Runs body(i) for i in [0, n). Parallel uses a static OpenMP schedule; the
// body must only write to slot i of its output. An exception thrown by any
// body is rethrown after the loop; with several, the lowest index wins so the
// reported failure does not depend on scheduling.
template <typename Body>
void for_each_index(std::int64_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::int64_t error_index = n;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(sek3_for_each_index)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

}  // namespace sek3
