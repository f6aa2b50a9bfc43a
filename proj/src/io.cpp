#include "sek3/io.hpp"

#include <cmath>
#include <string>

namespace sek3 {

namespace {

int read_k(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() || j["k"].get<int>() < 0) {
    throw Error(ErrorKind::InvalidArgument, "record needs a non-negative integer field 'k'");
  }
  return j["k"].get<int>();
}

}  // namespace

VecX read_reals(const nlohmann::json& j, const char* field, Eigen::Index n) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing array field '") + field + "'");
  }
  const auto& arr = j[field];
  if (static_cast<Eigen::Index>(arr.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, std::string("field '") + field + "' has " +
                                                  std::to_string(arr.size()) + " entries, expected " +
                                                  std::to_string(n));
  }
  VecX out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& v = arr[static_cast<std::size_t>(i)];
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("field '") + field + "' must hold finite numbers");
    }
    out[i] = v.get<double>();
  }
  return out;
}

nlohmann::json to_json(const GroupElement& g) {
  nlohmann::json r = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) r.push_back(g.rotation()(i, c));
  nlohmann::json p = nlohmann::json::array();
  for (int j = 0; j < g.k(); ++j)
    for (int c = 0; c < 3; ++c) p.push_back(g.translations()(c, j));
  return {{"k", g.k()}, {"r", r}, {"p", p}};
}

nlohmann::json to_json(const TangentVector& xi) {
  return {{"k", xi.k()}, {"xi", std::vector<double>(xi.coords().begin(), xi.coords().end())}};
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  const int k = read_k(j);
  const VecX r = read_reals(j, "r", 9);
  const VecX p = read_reals(j, "p", 3 * k);
  Mat3 rot;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) rot(i, c) = r[3 * i + c];
  Mat3X trans(3, k);
  for (int m = 0; m < k; ++m) trans.col(m) = p.segment<3>(3 * m);
  return GroupElement(rot, trans);
}

TangentVector tangent_vector_from_json(const nlohmann::json& j) {
  const int k = read_k(j);
  return TangentVector(read_reals(j, "xi", 3 * (k + 1)));
}

}  // namespace sek3
