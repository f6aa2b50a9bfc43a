#include "sek3/io.hpp"

#include "sek3/oracle/random_instances.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace sek3;

TEST(Io, GroupElementRoundTrip) {
  auto rng = test::make_rng(140);
  for (int k = 0; k <= 3; ++k) {
    const GroupElement g = oracle::random_element(rng, k);
    const nlohmann::json j = to_json(g);
    EXPECT_EQ(j["k"], k);
    EXPECT_EQ(j["r"].size(), 9u);
    EXPECT_EQ(j["p"].size(), static_cast<std::size_t>(3 * k));
    EXPECT_EQ(j["r"][1].get<double>(), g.rotation()(0, 1));
    const GroupElement back = group_element_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.embedding(), g.embedding());
  }
}

TEST(Io, TangentVectorRoundTrip) {
  auto rng = test::make_rng(141);
  const TangentVector xi = oracle::random_tangent(rng, 2, 3.0);
  EXPECT_EQ(tangent_vector_from_json(nlohmann::json::parse(to_json(xi).dump())), xi);
}

TEST(Io, RejectsMalformedRecords) {
  const auto kind_of = [](const char* text) {
    try {
      (void)group_element_from_json(nlohmann::json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::LogBranch;  // sentinel: nothing thrown
  };
  EXPECT_EQ(kind_of(R"({"r":[1,0,0,0,1,0,0,0,1],"p":[]})"), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of(R"({"k":1,"r":[1,0,0,0,1,0,0,0,1],"p":[1,2]})"), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of(R"({"k":0,"r":[1,0,0,0,1,0,0,0,"x"],"p":[]})"), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of(R"({"k":-1,"r":[],"p":[]})"), ErrorKind::InvalidArgument);
}
