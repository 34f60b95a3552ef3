#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "aplike/cli.hpp"
#include "corpus.hpp"

using namespace aplike;

namespace {

  struct Outcome {
    int         code;
    Json        report;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    Json               report;
    if (code == 0 && !out.str().empty() && out.str().front() == '{') {
      report = Json::parse(out.str());
    }
    return {code, report, err.str()};
  }

  std::string data(char const* file) {
    return testing::data_path(file);
  }

}  // namespace

TEST_CASE("analyze") {
  auto const o = run({"analyze", "--monoid", data("z2.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report["command"] == "analyze");
  CHECK(o.report["result"]["order"] == 2);
  CHECK(o.report["result"]["aperiodic"] == false);
  CHECK(o.report["result"]["green"]["L"].dump() == "[[0,1]]");
  CHECK(o.report["input_hash"].get<std::string>().size() == 64);

  auto const dot = std::filesystem::temp_directory_path() / "aplike-test-eggbox.dot";
  CHECK(run({"analyze", "--monoid", data("lz1.json"), "--dot", dot.string()}).code == 0);
  CHECK(std::filesystem::exists(dot));
  std::filesystem::remove(dot);
}

TEST_CASE("expand") {
  auto const o = run({"expand", "--monoid", data("z2.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report["result"]["expansion"]["order"] == 3);
  CHECK(o.report["result"]["eta"].dump() == "[0,1,0]");
  auto const two = run({"expand", "--monoid", data("u1.json"), "--iterate", "2"});
  REQUIRE(two.code == 0);
  CHECK(two.report["result"]["levels"].size() == 2);
  CHECK(run({"expand", "--monoid", data("z3.json"), "--iterate", "3", "--cap", "6"}).code == 2);
}

TEST_CASE("pointlikes") {
  auto const o = run({"pointlikes", "--monoid", data("z2.json"), "--maximal"});
  REQUIRE(o.code == 0);
  CHECK(o.report["result"]["maximal"].dump() == "[[0,1]]");
  auto const all = run({"pointlikes", "--monoid", data("z3.json")});
  CHECK(all.report["result"]["count"] == 7);
  CHECK(all.report["result"]["members"].size() == 7);
  auto const idem = run({"pointlikes", "--monoid", data("z3.json"), "--idempotent"});
  CHECK(idem.report["result"]["idempotent"].dump() == "[[0,1,2]]");
  CHECK(run({"pointlikes", "--monoid", data("z3.json"), "--cap", "3"}).code == 2);
}

TEST_CASE("stable pairs") {
  auto const a = run({"stable-pairs", "--monoid", data("z2.json"), "--variety", "A", "--decide",
                      R"({"Y":[1],"N":[0,1]})"});
  REQUIRE(a.code == 0);
  CHECK(a.report["result"]["decision"]["verdict"] == true);
  CHECK(a.report["result"]["decision"]["certificate_verified"] == true);
  auto const m = run({"stable-pairs", "--monoid", data("z2.json"), "--variety", "M", "--decide",
                      "[1]", "[0,1]"});
  REQUIRE(m.code == 0);
  CHECK(m.report["result"]["decision"]["verdict"] == false);
  auto const max = run({"stable-pairs", "--monoid", data("lz1.json"), "--variety", "M", "--maximal"});
  REQUIRE(max.code == 0);
  CHECK(max.report["result"]["maximal"].size() == 3);
  CHECK(run({"stable-pairs", "--monoid", data("z2.json"), "--variety", "Q", "--maximal"}).code == 1);
  CHECK(run({"stable-pairs", "--monoid", data("z2.json"), "--variety", "A", "--decide",
             R"({"Y":[1],"N":[1]})"})
            .code
        == 1);
}

TEST_CASE("triples") {
  auto const o = run({"triples", "--monoid", data("u1.json"), "--decide", R"({"A":[0],"B":[0],"C":[1]})"});
  REQUIRE(o.code == 0);
  CHECK(o.report["result"]["decision"]["verdict"] == false);
  auto const m = run({"triples", "--monoid", data("z2.json"), "--maximal"});
  REQUIRE(m.code == 0);
  CHECK(m.report["result"]["maximal"].size() == 1);
  auto const three = run({"triples", "--monoid", data("z2.json"), "--decide", "[0]", "[1]", "[0,1]"});
  CHECK(three.report["result"]["decision"]["certificate"]["case"] == 1);
}

TEST_CASE("inevitable") {
  auto const s = run({"inevitable", "--monoid", data("z2.json"), "--graph",
                      data("stable_g_z2.graph.json"), "--sweep"});
  REQUIRE(s.code == 0);
  CHECK(s.report["result"]["verdict"] == "consistent");
  CHECK(s.report["result"]["conclusive"] == false);
  CHECK(s.report["result"]["census"]["witnesses"].get<int>() > 0);
  auto const m = run({"inevitable", "--monoid", data("z2.json"), "--graph",
                      data("stable_g_z2.graph.json"), "--sweep", "--variety", "M"});
  REQUIRE(m.code == 0);
  CHECK(m.report["result"]["verdict"] == "refuted");
  auto const self = run({"inevitable", "--monoid", data("u1.json"), "--graph",
                         R"({"vertices":["v0"],"labels":{"v0":[0,1]}})"});
  REQUIRE(self.code == 0);
  CHECK(self.report["result"]["sat"] == false);
}

TEST_CASE("gen-library") {
  auto const dir = std::filesystem::temp_directory_path() / "aplike-test-cli-library";
  std::filesystem::remove_all(dir);
  auto const o = run({"gen-library", "--out", dir.string(), "--max-order", "3"});
  REQUIRE(o.code == 0);
  CHECK(o.report["result"]["count"] == 6 + 6);
  CHECK(std::filesystem::exists(dir / "index.json"));
  std::filesystem::remove_all(dir);
  CHECK(run({"gen-library", "--out", dir.string(), "--max-order", "5"}).code == 1);
}

TEST_CASE("input errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"analyze"}).code == 1);
  auto const missing = run({"analyze", "--monoid", data("missing.json")});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("missing.json") != std::string::npos);
  auto const bad = run({"analyze", "--monoid", data("nonassoc.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NonAssociative") != std::string::npos);
  CHECK(run({"triples", "--monoid", data("z2.json"), "--decide", R"({"A":[0],"B":[0]})"}).code == 1);
  CHECK(run({"triples", "--monoid", data("z2.json"), "--decide", R"({"A":[],"B":[0],"C":[0]})"}).code
        == 1);
}

TEST_CASE("cache") {
  auto const dir = std::filesystem::temp_directory_path() / "aplike-test-cache";
  std::filesystem::remove_all(dir);
  auto const M = testing::cyclic(4);
  auto const computed = henckell_closure(M);
  auto const first    = cli::cached_pointlikes(M, dir, DEFAULT_FAMILY_CAP);
  CHECK(std::filesystem::exists(dir / ("pl-" + cli::monoid_hash(M) + ".json")));
  auto const second = cli::cached_pointlikes(M, dir, DEFAULT_FAMILY_CAP);
  CHECK(first.members() == computed.members());
  CHECK(second.members() == computed.members());
  CHECK(second.provenance() == computed.provenance());

  // A corrupt entry is replaced.
  {
    std::ofstream(dir / ("pl-" + cli::monoid_hash(M) + ".json")) << "{ not json";
  }
  CHECK(cli::cached_pointlikes(M, dir, DEFAULT_FAMILY_CAP).members() == computed.members());

  auto const a = run({"pointlikes", "--monoid", data("z3.json"), "--cache", dir.string()});
  auto const b = run({"pointlikes", "--monoid", data("z3.json"), "--cache", dir.string()});
  auto const c = run({"pointlikes", "--monoid", data("z3.json")});
  REQUIRE(a.code == 0);
  CHECK(a.report["result"] == b.report["result"]);
  CHECK(a.report["result"] == c.report["result"]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("hashes") {
  CHECK(cli::sha256_hex("abc")
        == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  auto const a = run({"analyze", "--monoid", data("rz1.json")});
  auto const b = run({"analyze", "--monoid", data("rz1.json"), "--threads", "3"});
  CHECK(a.report["input_hash"] == b.report["input_hash"]);
  auto const c = run({"analyze", "--monoid", data("lz1.json")});
  CHECK(a.report["input_hash"] != c.report["input_hash"]);
}
