#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> const& args, std::string const& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.code = cubic::cli::run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

nlohmann::json json_of(Outcome const& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("hilbert-dim as JSON") {
  auto const o = run({"--format", "json", "hilbert-dim", "12;4,4,4,4,2,2"});
  REQUIRE(o.code == 0);
  auto const j = json_of(o);
  CHECK(j["class"] == "12;4,4,4,4,2,2");
  CHECK(j["degree"] == 16);
  CHECK(j["genus"] == 29);
  CHECK(j["dim"]["kind"] == "exact");
  CHECK(j["dim"]["value"] == 64);
  CHECK(j["dim"]["method"] == "prop-4.5");
}

TEST_CASE("global flags may follow the subcommand") {
  auto const a = run({"--format", "json", "classify", "12;4,4,4,4,4,2"});
  auto const b = run({"classify", "12;4,4,4,4,4,2", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto const j = json_of(a);
  CHECK(j["verdict"]["kind"] == "obstructed");
  CHECK(j["verdict"]["m"] == 1);
}

TEST_CASE("JSON output is byte stable") {
  auto const a = run({"--format", "json", "cohomology", "3;1,1,1,1,-1,-1"});
  auto const b = run({"--format", "json", "cohomology", "3;1,1,1,1,-1,-1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["h0"] == 6);
}

TEST_CASE("table output") {
  auto const o = run({"kleppe", "14;2,2,2,2,2,2"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("proven-theorem-1") != std::string::npos);
  CHECK(o.out.find("120") != std::string::npos);

  auto const r = run({"reduce", "1;1,1,0,0,0,0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0;0,0,0,0,0,-1") != std::string::npos);
  CHECK(r.out.find("cremona") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto const bad = run({"classify", "12;4,4,x,4,2,2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find('^') != std::string::npos);
  CHECK(bad.err.find("12;4,4,x,4,2,2") != std::string::npos);

  auto const pre = run({"normality", "5;5,0,0,0,0,0"});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("NotSmoothMember") != std::string::npos);

  CHECK(run({"hilbert-dim", "3;1,1,1,1,1,1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"--format", "xml", "classify", "3;1,1,1,1,1,1"}).code == 1);
  CHECK(run({"census", "--d-min", "5", "--d-max", "3", "--g-min", "0", "--g-max", "1"}).code == 2);

  auto const help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("census") != std::string::npos);
  CHECK(help.out.find("oracle") == std::string::npos);
}

TEST_CASE("census") {
  std::vector<std::string> const base{"--format", "csv",     "census",  "--d-min", "10",
                                      "--d-max",  "12",      "--g-min", "0",       "--g-max",
                                      "20"};
  auto const one = run(base);
  auto with_threads = base;
  with_threads.insert(with_threads.end(), {"--threads", "3"});
  auto const three = run(with_threads);
  REQUIRE(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(one.out.rfind("d,g,a,b1,", 0) == 0);

  auto const table = run({"census", "--d-min", "16", "--d-max", "16", "--g-min", "29",
                          "--g-max", "29"});
  REQUIRE(table.code == 0);
  CHECK(table.out.find(" families, ") != std::string::npos);
  CHECK(table.out.find("(d,g) pairs without families") != std::string::npos);

  auto const js = run({"--format", "json", "census", "--d-min", "16", "--d-max", "16",
                       "--g-min", "29", "--g-max", "29"});
  REQUIRE(js.code == 0);
  CHECK(json_of(js)["records"].size() >= 1);
}

TEST_CASE("batch mode") {
  auto const o = run({"--stdin", "--format", "json", "invariants"},
                     "12;4,4,4,4,2,2\n\n# comment\n3;1,1,1,1,1,1\n");
  REQUIRE(o.code == 0);
  auto const j = json_of(o);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["degree"] == 16);
  CHECK(j[1]["genus"] == 1);

  auto const csv = run({"--stdin", "--format", "csv", "invariants"}, "1;0,0,0,0,0,0\n3;1,1,1,1,1,1\n");
  REQUIRE(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

  CHECK(run({"--stdin", "invariants"}, "").code == 1);
  CHECK(run({"--stdin", "invariants", "3;1,1,1,1,1,1"}, "3;1,1,1,1,1,1\n").code == 1);
}

TEST_CASE("output file") {
  auto const path = std::filesystem::temp_directory_path() / "cubichilb_test_out.json";
  std::filesystem::remove(path);
  auto const o = run({"--format", "json", "--out", path.string(), "invariants", "3;1,1,1,1,1,1"});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(nlohmann::json::parse(text.str())["degree"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("gen-obstructed") {
  auto const o = run({"--format", "json", "gen-obstructed", "--k", "1", "--dprime", "0;0,0,0,0,0"});
  REQUIRE(o.code == 0);
  auto const j = json_of(o);
  CHECK(j["class"] == "13;4,4,4,4,4,1");
  CHECK(j["verdict"]["kind"] == "obstructed");
  CHECK(j["verdict"]["rule"] == "rho-surjective");
  CHECK(run({"gen-obstructed", "--k", "4", "--dprime", "0;0,0,0,0,0"}).code == 2);
  CHECK(run({"gen-obstructed", "--k", "0", "--dprime", "1;1,1,0,0,0"}).code == 2);
}

TEST_CASE("hidden oracle subcommand") {
  auto const o = run({"--format", "json", "oracle", "3;1,1,1,1,1,1", "--seed", "3"});
  REQUIRE(o.code == 0);
  auto const j = json_of(o);
  CHECK(j["h0_interpolation"] == 4);
  CHECK(j["h0"] == 4);
}
