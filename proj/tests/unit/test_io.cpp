#include <filesystem>

#include "doctest.h"

#include "aplike/error.hpp"
#include "aplike/io.hpp"
#include "corpus.hpp"

using namespace aplike;

TEST_CASE("monoid files") {
  auto const Z2 = load_monoid(testing::data_path("z2.json"));
  CHECK(Z2 == testing::cyclic(2));
  auto const RZ1 = load_monoid(testing::data_path("rz1.json"));
  CHECK(RZ1 == testing::rz1());
  auto const Z3 = load_monoid(testing::data_path("z3.json"));
  CHECK(Z3.order() == 3);
  try {
    load_monoid(testing::data_path("nonassoc.json"));
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NonAssociative);
  }
  CHECK_THROWS_AS(load_monoid(testing::data_path("missing.json")), Error);
}

TEST_CASE("round trip") {
  for (auto const& [name, M] : testing::corpus()) {
    CHECK(monoid_from_json(monoid_to_json(M)) == M);
  }
}

TEST_CASE("generator order follows the file") {
  auto const M = monoid_from_json(Json::parse(
      R"({"order": 3, "identity": 0, "table": [[0,1,2],[1,1,1],[2,2,2]], "generators": {"b": 2, "a": 1}})"));
  CHECK(M.generators()[0].letter == "b");
  CHECK(M.generators()[1].letter == "a");
}

TEST_CASE("malformed monoids name the field") {
  auto const expect_field = [](char const* text, char const* field) {
    try {
      monoid_from_json(Json::parse(text));
      FAIL("no error");
    } catch (Error const& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  expect_field(R"({"order": 2, "identity": 0, "table": [[0,1],[1,1]]})", "generators");
  expect_field(R"({"order": 2, "table": [[0,1],[1,1]], "generators": {"x": 1}})", "identity");
  expect_field(R"({"order": 2, "identity": 0, "table": [[0,1],[1,-1]], "generators": {"x": 1}})",
               "table[1]");
  expect_field(R"({"points": 2, "generators": {"x": "swap"}})", "generators.x");
}

TEST_CASE("point sets") {
  auto const Z3 = testing::cyclic(3);
  CHECK(point_set_from_json(Json::parse("[2, 0, 2]"), Z3, "Y") == PointSet(3, {0, 2}));
  CHECK(to_json(PointSet(3, {2, 0})).dump() == "[0,2]");
  CHECK_THROWS_AS(point_set_from_json(Json::parse("[3]"), Z3, "Y"), Error);
  CHECK_THROWS_AS(point_set_from_json(Json::parse("{}"), Z3, "Y"), Error);
}

TEST_CASE("graphs") {
  auto const Z2 = testing::cyclic(2);
  auto const g  = graph_from_json(read_json_file(testing::data_path("stable_g_z2.graph.json")), Z2);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edges.size() == 2);
  CHECK(g.edge_labels[1] == PointSet(2, {1}));
  auto const again = graph_from_json(graph_to_json(g), Z2);
  CHECK(again.vertex_labels == g.vertex_labels);
  CHECK(again.edge_labels == g.edge_labels);

  auto const numeric = graph_from_json(
      Json::parse(R"({"vertices": [0, 1], "edges": [{"src": 0, "dst": 1, "label": [1]}],
                      "labels": {"v0": [0], "v1": [1]}})"),
      Z2);
  CHECK(numeric.edges[0].dst == 1);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["v0"], "labels": {}})"), Z2), Error);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"vertices": ["v0"], "edges": [{"src": "v0", "dst": "x"}],
                                     "labels": {"v0": [0], "e0": [0]}})"),
                      Z2),
      Error);
}

TEST_CASE("library directories") {
  auto const dir = std::filesystem::temp_directory_path() / "aplike-test-library";
  std::filesystem::remove_all(dir);
  auto const lib = aperiodic_library(3);
  write_library(dir, lib);
  CHECK(std::filesystem::exists(dir / "index.json"));
  auto const back = read_library(dir);
  REQUIRE(back.size() == lib.size());
  for (std::size_t i = 0; i < lib.size(); ++i) {
    CHECK(back[i].name == lib[i].name);
    CHECK(back[i].monoid == lib[i].monoid);
    CHECK(back[i].aperiodic);
  }
  std::filesystem::remove_all(dir);
}
