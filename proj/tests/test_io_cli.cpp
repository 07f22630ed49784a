#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rif/cli.hpp"
#include "rif/construct.hpp"
#include "rif/error.hpp"
#include "rif/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace rif;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = rif::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/rif_test_") + name + "_" + std::to_string(::getpid()) + ".json";
}

} // namespace

TEST_CASE("family files round-trip to the identical canonical value") {
  for (const KSetFamily& fam :
       {projective_plane(2), brace_daykin(3), complete_uniform(6, 2), neq2k_construction(4)}) {
    std::stringstream buf;
    write_family(buf, fam);
    const KSetFamily back = read_family(buf);
    CHECK(back.n == fam.n);
    CHECK(back.k == fam.k);
    CHECK(back.sets == fam.sets);
  }
}

TEST_CASE("reader tolerates whitespace and reorders the outer array") {
  std::istringstream in(R"({
    "format": "rif-family/1",
    "n": 4,  "k": 2,
    "sets": [ [3, 4], [1, 2] ]
  })");
  const KSetFamily fam = read_family(in);
  CHECK(fam.size() == 2);
  CHECK(fam.sets[0] == SetBits::of(4, {1, 2})); // canonical order restored
}

TEST_CASE("reader error cases") {
  std::istringstream bad_json("{not json");
  CHECK_THROWS_WITH_AS(read_family(bad_json), doctest::Contains("ParseError"), Error);

  std::istringstream bad_format(R"({"format":"other/1","n":4,"k":2,"sets":[]})");
  CHECK_THROWS_WITH_AS(read_family(bad_format), doctest::Contains("ParseError"), Error);

  std::istringstream decreasing(R"({"format":"rif-family/1","n":4,"k":2,"sets":[[2,1]]})");
  CHECK_THROWS_WITH_AS(read_family(decreasing), doctest::Contains("ParseError"), Error);

  std::istringstream dup(R"({"format":"rif-family/1","n":4,"k":2,"sets":[[1,2],[1,2]]})");
  CHECK_THROWS_WITH_AS(read_family(dup), doctest::Contains("InvariantViolation"), Error);

  std::istringstream out_of_range(R"({"format":"rif-family/1","n":4,"k":2,"sets":[[1,9]]})");
  CHECK_THROWS_WITH_AS(read_family(out_of_range), doctest::Contains("InvariantViolation"), Error);
}

TEST_CASE("cli bounds") {
  const CliResult res = run_cli({"bounds", "--n", "9", "--k", "4"});
  CHECK(res.code == 0);
  CHECK(res.out.find("hoffman(s=1)\t36") != std::string::npos);
  CHECK(res.out.find("general\t36") != std::string::npos);
  CHECK(res.out.find("verdict\tOpen") != std::string::npos);

  const CliResult json_res = run_cli({"bounds", "--n", "9", "--k", "4", "--json"});
  const auto doc = nlohmann::json::parse(json_res.out);
  CHECK(doc["n"] == 9);
  CHECK(doc["k"] == 4);
  bool saw_general = false;
  for (const auto& e : doc["bounds"])
    if (e["name"] == "general") {
      saw_general = true;
      CHECK(e["value"] == "36");
    }
  CHECK(saw_general);
}

TEST_CASE("cli construct | verify piping") {
  const CliResult plane = run_cli({"construct", "pp", "--q", "2"});
  REQUIRE(plane.code == 0);
  const CliResult verify = run_cli({"verify"}, plane.out);
  CHECK(verify.code == 0);
  CHECK(verify.out.find("size 7") != std::string::npos);
  CHECK(verify.out.find("regular: true (delta=3)") != std::string::npos);
  CHECK(verify.out.find("intersecting: true") != std::string::npos);

  const CliResult v2 = run_cli({"verify", "--s", "2"}, plane.out);
  CHECK(v2.out.find("subset-regular(s=2): true (delta_2=1)") != std::string::npos);
}

TEST_CASE("cli verify reports expected values for the n=2k constructions") {
  const CliResult neq = run_cli({"construct", "neq2k", "--k", "4"});
  const CliResult v = run_cli({"verify"}, neq.out);
  CHECK(v.out.find("size 32") != std::string::npos);
  CHECK(v.out.find("regular: true (delta=16)") != std::string::npos);

  const CliResult bd = run_cli({"construct", "brace-daykin", "--k", "5"});
  const CliResult vb = run_cli({"verify"}, bd.out);
  CHECK(vb.out.find("size 126") != std::string::npos);
  CHECK(vb.out.find("regular: true (delta=63)") != std::string::npos);

  const CliResult p3 = run_cli({"construct", "prop3", "--q", "2", "--l", "1"});
  const CliResult vp = run_cli({"verify"}, p3.out);
  CHECK(vp.out.find("size 245") != std::string::npos);
  CHECK(vp.out.find("ratio: 3/7") != std::string::npos);
}

TEST_CASE("cli verify --json is schema-stable") {
  const CliResult plane = run_cli({"construct", "pp", "--q", "2"});
  const CliResult v = run_cli({"verify", "--json"}, plane.out);
  const auto doc = nlohmann::json::parse(v.out);
  CHECK(doc["n"] == 7);
  CHECK(doc["k"] == 3);
  CHECK(doc["size"] == 7);
  CHECK(doc["delta"] == 3);
  CHECK(doc["regular"] == true);
  CHECK(doc["intersecting"] == true);
  CHECK(doc["inner_distribution"] == nlohmann::json::array({"1", "0", "6", "0"}));
}

TEST_CASE("cli exit codes") {
  const std::string malformed = temp_path("malformed");
  {
    std::ofstream f(malformed);
    f << "{broken";
  }
  const CliResult parse_fail = run_cli({"verify", "--input", malformed});
  CHECK(parse_fail.code == 1);
  CHECK(parse_fail.err.find("ParseError") != std::string::npos);
  std::remove(malformed.c_str());

  CHECK(run_cli({"bounds", "--n", "9"}).code == 2);          // missing --k
  CHECK(run_cli({"bounds", "--n", "9", "--k", "4", "--bogus"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"construct", "pp", "--q", "6"}).code == 1); // NotPrimePower
  CHECK(run_cli({"construct", "brace-daykin", "--k", "4"}).code == 1);
}

TEST_CASE("cli scheme and lp output") {
  const CliResult p = run_cli({"scheme", "--n", "7", "--k", "3", "--matrix", "P"});
  CHECK(p.code == 0);
  CHECK(p.out == "1 12 18 4\n1 5 -3 -3\n1 0 -3 2\n1 -3 3 -1\n");

  const CliResult q = run_cli({"scheme", "--n", "7", "--k", "3", "--matrix", "Q"});
  CHECK(q.out.find("6 5/2 -1 -9/2") != std::string::npos);

  const CliResult g = run_cli({"scheme", "--n", "13", "--k", "4", "--gamma"});
  CHECK(g.out == "0 -264 -264 0\n");

  const CliResult lp = run_cli({"lp", "--n", "7", "--k", "3", "--regular"});
  CHECK(lp.out == "optimum 7\nwitness 0 6\n");

  const CliResult lp94 = run_cli({"lp", "--n", "9", "--k", "4", "--regular"});
  CHECK(lp94.out.find("optimum 36") != std::string::npos);
}

TEST_CASE("cli search with witness output") {
  const std::string witness = temp_path("witness");
  const CliResult res =
      run_cli({"search", "--n", "7", "--k", "3", "--strategy", "dfs", "--out", witness});
  CHECK(res.code == 0);
  CHECK(res.out.find("size 7") != std::string::npos);
  CHECK(res.out.find("exhaustive true") != std::string::npos);
  CHECK(res.out.find("certificate pass") != std::string::npos);
  const KSetFamily fam = read_family_file(witness);
  CHECK(fam.size() == 7);
  std::remove(witness.c_str());

  const CliResult json_res =
      run_cli({"search", "--n", "6", "--k", "3", "--strategy", "dfs", "--json"});
  const auto doc = nlohmann::json::parse(json_res.out);
  CHECK(doc["size"] == 10);
  CHECK(doc["delta"] == 5);
  CHECK(doc["exhaustive"] == true);

  CHECK(run_cli({"search", "--n", "7", "--k", "3", "--strategy", "cyclic", "--target", "7"}).code ==
        2);
}

TEST_CASE("search witness files re-verify") {
  const CliResult search =
      run_cli({"search", "--n", "9", "--k", "4", "--strategy", "dfs", "--target", "36", "--json"});
  CHECK(search.code == 0);
  const auto doc = nlohmann::json::parse(search.out);
  CHECK(doc["size"] == 36);
  CHECK(doc["delta"] == 16);
}
