#pragma once

// JSON records used by the command-line tools:
//   GroupElement  {"k": K, "r": [9 reals, row-major], "p": [3K reals]}
//   TangentVector {"k": K, "xi": [3(K+1) reals]}

#include "sek3/group.hpp"

#include <json.hpp>

namespace sek3 {

[[nodiscard]] nlohmann::json to_json(const GroupElement& g);
[[nodiscard]] nlohmann::json to_json(const TangentVector& xi);

/// Throw InvalidArgument on missing fields or wrong types, DimensionMismatch
/// when the array lengths disagree with k. The rotation is not re-orthogonalized.
[[nodiscard]] GroupElement group_element_from_json(const nlohmann::json& j);
[[nodiscard]] TangentVector tangent_vector_from_json(const nlohmann::json& j);

/// Reads an array of exactly n finite numbers.
[[nodiscard]] VecX read_reals(const nlohmann::json& j, const char* field, Eigen::Index n);

}  // namespace sek3
