#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tburau/cli.hpp"
#include "tburau/laurent.hpp"
#include "tburau/registry.hpp"
#include "tburau/selftest.hpp"

using namespace tburau;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Writes the example representation to a temporary file for --rep tests.
class TempRepFile {
 public:
  TempRepFile() : path_("cli_test_rep.json") {
    std::ofstream f(path_);
    f << selftest::kTrefoilJson;
  }
  ~TempRepFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("burau command prints the classical matrix") {
  CliRun r = run({"burau", "--braid", "s1", "--colors", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 - t") != std::string::npos);
  CHECK(r.out.find("t") != std::string::npos);

  CliRun identity = run({"burau", "--braid", "", "--colors", "1"});
  CHECK(identity.code == 0);
  CHECK(identity.out.find("1") != std::string::npos);
}

TEST_CASE("json matrix output re-parses to the same polynomials") {
  CliRun r = run({"burau", "--braid", "s1 s1", "--colors", "1,2", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"] == 2);
  RegistryPtr reg = color_registry(2);
  LaurentPoly corner = parse_poly(doc["entries"][0][0].get<std::string>(), reg);
  CHECK(corner == parse_poly("1 - t1 + t1*t2", reg));
  for (const auto& row : doc["entries"])
    for (const auto& cell : row) {
      LaurentPoly value = parse_poly(cell.get<std::string>(), reg);
      CHECK(value.str() == cell.get<std::string>());
    }
}

TEST_CASE("reduced command with a representation file") {
  TempRepFile rep;
  CliRun r = run({"reduced", "--braid", "s1^3", "--colors", "1,1", "--rep", rep.path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("s*t^3") != std::string::npos);
  CHECK(r.out.find("s^2*t^3") != std::string::npos);
}

TEST_CASE("torsion command routes") {
  TempRepFile rep;
  CliRun both = run({"torsion", "--braid", "s1^3", "--colors", "1,1", "--rep", rep.path(),
                     "--route", "both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("route:       wada") != std::string::npos);
  CHECK(both.out.find("route:       burau") != std::string::npos);
  CHECK(both.out.find("normalized:  1 - s*t^2") != std::string::npos);

  CliRun json = run({"torsion", "--braid", "s1 s1", "--colors", "1,2", "--format", "json"});
  REQUIRE(json.code == 0);
  nlohmann::json doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["normalized"] == "1");
}

TEST_CASE("verify command exit codes") {
  TempRepFile rep;
  CliRun pass = run({"verify", "--braid", "s1^3", "--colors", "1,1", "--rep", rep.path()});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("verdict: pass") != std::string::npos);

  CliRun inapplicable = run({"verify", "--braid", "s1", "--colors", "1,1", "--rep", rep.path()});
  CHECK(inapplicable.code == 1);
  CHECK(inapplicable.out.find("verdict: not applicable") != std::string::npos);
  CHECK(inapplicable.out.find("x1") != std::string::npos);

  CliRun allowed = run({"verify", "--braid", "s1", "--colors", "1,1", "--rep", rep.path(),
                        "--allow-nonextendable"});
  CHECK(allowed.code == 0);
}

TEST_CASE("alexander command") {
  CliRun r = run({"alexander", "--braid", "s1 s2^-1 s1 s2^-1", "--colors", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 - 3*t + t^2") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"burau", "--braid", "s9", "--colors", "1,1"}).code == 2);
  CHECK(run({"burau", "--braid", "s1", "--colors", "1,3"}).code == 2);
  CHECK(run({"burau", "--braid", "s1"}).code == 2);  // missing --colors
  CHECK(run({"torsion", "--braid", "s1", "--colors", "1,2"}).code == 2);  // colors not preserved
  CHECK(run({"burau", "--braid", "s1", "--colors", "1,1", "--rep", "missing.json"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"burau", "--braid", "s1", "--colors", "1,x"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("burau") != std::string::npos);
}

TEST_CASE("selftest smoke run") {
  CliRun r = run({"selftest", "--seed", "3", "--scale", "0.01"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all passed") != std::string::npos);
}
