#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "toric/cli.hpp"

using namespace toric;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run({"present", "toric", "2", "3", "4"}).code == 0);
    CHECK(run({"present", "toric", "2", "4", "6"}).code == 2);
    CHECK(run({"present", "nope", "2", "3", "4"}).code == 2);
    CHECK(run({"wp", "coxeter", "2,3,4", "r9"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"classify", "6", "2", "3", "--max-cosets", "20000"}).code == 0);
    CHECK(run({"wp", "toric", "6,2,3", "x1 x2 x1 x2 x1 x2 x1 x2 x1 x2 x1 x2", "--max-cosets", "20000"}).code == 0);
  }

  TEST_CASE("present output") {
    Run r = run({"present", "toric", "2", "3", "4"});
    CHECK(r.out.find("rel: x1 x2 x3 x1 = x2 x3 x1 x2 = x3 x1 x2 x3") != std::string::npos);
    Run alt = run({"present", "alt-plus", "2", "3", "5"});
    CHECK(alt.out.find("gens: a b") != std::string::npos);
  }

  TEST_CASE("json shape") {
    Run r = run({"--format", "json", "wp", "coxeter", "6,2,3", "r1 r3 r1 r3 r1 r3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"command", "params", "bounds", "result", "status", "evidence"})
      CHECK(j.contains(key));
    CHECK(j["result"]["identity"] == true);
    CHECK(j["bounds"]["max_cosets"] == 1000000);
    CHECK(j["bounds"]["seed"] == 0);
    Run unk = run({"--format", "json", "wp", "toric", "6,2,3", "x1 x2 x1 x2 x1 x2 x1 x2 x1 x2 x1 x2", "--max-cosets", "20000"});
    auto u = nlohmann::json::parse(unk.out);
    CHECK(u["status"] == "unknown");
  }

  TEST_CASE("same seed, same bytes") {
    std::vector<std::string> args{"--format", "json", "--seed", "3", "classify", "2", "3", "5"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> sweep{"--format", "json", "sweep", "--kmax", "3", "--mmax", "4",
                                   "--max-cosets", "20000", "--threads", "4"};
    CHECK(run(sweep).out == run(sweep).out);
  }

  TEST_CASE("rep and enumerate") {
    Run w = run({"--format", "json", "rep", "witness"});
    CHECK(nlohmann::json::parse(w.out)["result"]["unfaithful"] == true);
    CHECK(run({"enumerate", "toric", "3", "2", "3"}).out.find("index: 24") != std::string::npos);
    CHECK(run({"--qr", "bad", "rep", "verify", "6", "2", "3"}).code == 2);
    CHECK(run({"--qr", "zero", "rep", "verify", "6", "2", "3"}).code == 0);
  }
}
