#include <doctest.h>

#include <nlohmann/json.hpp>

#include "mfs/json_io.hpp"

using namespace mfs;
using nlohmann::json;

TEST_CASE("weight JSON carries both coordinate systems and round-trips") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  Weight w = b4.fund_weights()[3];
  json j = io::weight_json(b4, w);
  CHECK(j["eps"][0] == "1/2");
  CHECK(j["fw"] == std::vector<long long>{0, 0, 0, 1});
  CHECK(io::weight_from_json(b4, j) == w);
  json eps_only;
  eps_only["eps"] = j["eps"];
  CHECK(io::weight_from_json(b4, eps_only) == w);
}

TEST_CASE("datum JSON matches the documented shape") {
  auto d = RootDatum::build({{Family::B, 4}});
  json j = io::datum_json(d);
  CHECK(j["components"].size() == 1);
  CHECK(j["components"][0][0] == "B");
  CHECK(j["components"][0][1] == 4);
  CHECK(j["torus"] == 0);
}

TEST_CASE("well slices serialize deterministically") {
  auto pair = wells::MFPair::so9_spin7();
  Weight mu = pair.mu_weight(1);
  auto s1 = io::build_slice(pair, mu, Rat(6));
  auto j1 = io::slice_json(pair, s1).dump();

  auto pair2 = wells::MFPair::so9_spin7();
  auto s2 = io::build_slice(pair2, pair2.mu_weight(1), Rat(6));
  CHECK(io::slice_json(pair2, s2).dump() == j1);

  CHECK(s1.elements.size() == s1.degrees.size());
  auto csv = io::slice_csv(pair, s1);
  CHECK(csv.rfind("lambda_fw,degree,tag\n", 0) == 0);
}

TEST_CASE("weight parsing: fw by default, eps with rationals on demand") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  CHECK(io::parse_weight(b4, "0,0,0,1", false) == b4.fund_weights()[3]);
  CHECK(io::parse_weight(b4, "1/2,1/2,1/2,1/2", true) == b4.fund_weights()[3]);
  CHECK_THROWS_AS(io::parse_weight(b4, "1/3,0,0,0", true), LatticeMismatch);
}
