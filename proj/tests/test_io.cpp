#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cyclo/catalog.hpp"
#include "cyclo/io.hpp"
#include "test_util.hpp"

using namespace cyclo;
using cyclo::test::I;
using nlohmann::json;

TEST_CASE("element serialization round trip") {
  for (const RingElement& e :
       {RingElement::phi(), RingElement::sqrt2(), I(-2), RingElement()}) {
    RingElement back = element_from_json(element_to_json(e), RingId::Compositum);
    CHECK(back == e);
  }
  // reduced form required
  json bad = {{"c", {2, 0, 0, 2, 0, 0, 0, 0}}, {"den", 2}};
  CHECK_THROWS_AS(element_from_json(bad, RingId::Compositum), ParseError);
  json unpaired = {{"c", {1, 0, 0, 0, 0, 0, 0, 0}}, {"den", 2}};
  CHECK_THROWS_AS(element_from_json(unpaired, RingId::Compositum), ParseError);
}

TEST_CASE("graph documents round trip the whole catalog") {
  for (const auto& [name, g] : catalog_maximals(6)) {
    RGraph back = graph_from_json(graph_to_json(g, name));
    CHECK(back.matrix() == g.matrix());
    CHECK(back.ring() == g.ring());
  }
}

TEST_CASE("parse rejects malformed documents") {
  json j = graph_to_json(build_sporadic("S2"));
  j["matrix"][0][1]["c"][0] = 5;  // breaks symmetry
  CHECK_THROWS_AS(graph_from_json(j), ParseError);

  json k = graph_to_json(build_sporadic("S2"));
  k["ring"] = "zmystery";
  CHECK_THROWS_AS(graph_from_json(k), ParseError);

  // sqrt2 entry declared in a zphi document
  json m = graph_to_json(build_sporadic("S2ddag"));
  m["ring"] = "zphi";
  CHECK_THROWS_AS(graph_from_json(m), ParseError);

  CHECK_THROWS_AS(graph_from_json(json::array()), ParseError);
}

TEST_CASE("level JSON carries keys, membership and parents") {
  auto levels = enumerate_s_prime(RingId::Zsqrt3, 3);
  json j = levels_to_json(levels);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[1]["n"] == 2);
  CHECK(j[1]["ring"] == "zsqrt3");
  for (const auto& m : j[2]["members"]) {
    CHECK(m.contains("key"));
    CHECK(m.contains("in_s"));
    CHECK(m["parents"].is_array());
    CHECK(!m["parents"].empty());
  }
  json only_s = level_to_json(levels[1], true);
  for (const auto& m : only_s["members"]) CHECK(m["in_s"] == true);
}

TEST_CASE("dot export marks negative edges dashed") {
  std::string dot = to_dot(build_sporadic("S4s3"));
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("label=\"s3\"") != std::string::npos);
  std::string s1 = to_dot(build_sporadic("S1"));
  CHECK(s1.find("label=\"2\"") != std::string::npos);
}
