#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hac/cli_app.hpp"
#include "hac/error.hpp"
#include "hac/json_io.hpp"
#include "test_util.hpp"

using namespace hac;
using namespace hac::test;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hac_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kIdentityJson = R"({"points": [["0","0"], ["1","1"]]})";

}  // namespace

TEST_CASE("cli sawtooth-sweep emits the exact 2 - 4/n column") {
  TempDir tmp;
  std::string out = tmp.file("saw.csv");
  REQUIRE(run_cli({"sawtooth-sweep", "--n-max", "8", "--out", out}) == 0);
  std::string csv = slurp(out);
  CHECK(csv.find("n,rho,rho_decimal,uniform,uniform_decimal,bound,bound_decimal\n") == 0);
  CHECK(csv.find("\n2,0,0,") != std::string::npos);
  CHECK(csv.find("\n4,1,1,1/8,0.125,2,2\n") != std::string::npos);
  CHECK(csv.find("\n8,3/2,1.5,") != std::string::npos);

  // reruns are byte-identical
  std::string out2 = tmp.file("saw2.csv");
  REQUIRE(run_cli({"sawtooth-sweep", "--n-max", "8", "--out", out2}) == 0);
  CHECK(slurp(out2) == csv);
}

TEST_CASE("cli cantor-sweep holds rho at 1/3") {
  TempDir tmp;
  std::string out = tmp.file("cantor.csv");
  REQUIRE(run_cli({"cantor-sweep", "--k-max", "4", "--out", out}) == 0);
  std::string csv = slurp(out);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.find(",1/3,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("cli rho on identical inputs") {
  TempDir tmp;
  std::string fpath = tmp.file("id.json");
  write(fpath, kIdentityJson);
  std::string out = tmp.file("rho.json");
  REQUIRE(run_cli({"rho", "--f", fpath, "--g", fpath, "--out", out}) == 0);
  Json j = Json::parse(slurp(out));
  CHECK(j["rho"] == "0");
  CHECK(j["upper_bound"] == "2");
}

TEST_CASE("cli accepts inline JSON and round trips wobble") {
  TempDir tmp;
  std::string wpath = tmp.file("wobble.json");
  REQUIRE(run_cli({"wobble", "--a", "0", "--b", "1", "--out", wpath}) == 0);
  Json j = Json::parse(slurp(wpath));
  CHECK(j["points"][1][0] == "1/4");
  CHECK(j["points"][1][1] == "1/3");

  std::string out = tmp.file("fix.json");
  REQUIRE(run_cli({"fix", "--f", slurp(wpath), "--out", out}) == 0);
  Json fixj = Json::parse(slurp(out));
  CHECK(fixj["points"] == Json::array({"0", "4/11", "2/3", "1"}));

  std::string orbs = tmp.file("orb.json");
  REQUIRE(run_cli({"orbitals", "--f", wpath, "--out", orbs}) == 0);
  Json orbj = Json::parse(slurp(orbs));
  REQUIRE(orbj.size() == 3);
  CHECK(orbj[1]["parity"] == -1);
}

TEST_CASE("cli generic-check single and random batch") {
  TempDir tmp;
  std::string out = tmp.file("gen.json");
  REQUIRE(run_cli({"generic-check", "--f", kIdentityJson, "--out", out}) == 0);
  Json j = Json::parse(slurp(out));
  CHECK(j["is_cantor"] == false);
  CHECK(j["null_fixed"] == false);
  CHECK(j["fixed_measure"] == "1");

  std::string csv1 = tmp.file("gen1.csv");
  std::string csv2 = tmp.file("gen2.csv");
  REQUIRE(run_cli({"generic-check", "--random", "5", "--seed", "42", "--out", csv1}) == 0);
  REQUIRE(run_cli({"generic-check", "--random", "5", "--seed", "42", "--out", csv2}) == 0);
  CHECK(slurp(csv1) == slurp(csv2));  // seed determines everything
  REQUIRE(run_cli({"generic-check", "--random", "5", "--seed", "43", "--out", csv2}) == 0);
  CHECK(slurp(csv1) != slurp(csv2));
}

TEST_CASE("cli blowup") {
  TempDir tmp;
  std::string out = tmp.file("blow.json");
  REQUIRE(run_cli({"blowup", "--phi", kIdentityJson, "--sites", "1/4,1/4,1/2", "--out", out}) ==
          0);
  Json j = Json::parse(slurp(out));
  CHECK(j["bound"] == "1/2");
  CHECK(j["rho"] == "0");
}

TEST_CASE("cli conjugate checks the identity exactly") {
  TempDir tmp;
  const char* f = R"({"points": [["0","0"], ["1/2","3/4"], ["1","1"]]})";
  const char* g = R"({"points": [["0","0"], ["1/4","1/2"], ["1","1"]]})";
  std::string out = tmp.file("conj.json");
  REQUIRE(run_cli({"conjugate", "--f", f, "--g", g, "--check", "25", "--seed", "7", "--out",
                   out}) == 0);
  Json j = Json::parse(slurp(out));
  CHECK(j["checks"]["all_exact"] == true);
  CHECK(j["signature"] == Json::array({"pt", "+1", "pt"}));

  // mismatched signatures exit with the orbital-mismatch code
  const char* down = R"({"points": [["0","0"], ["1/2","1/4"], ["1","1"]]})";
  CHECK(run_cli({"conjugate", "--f", f, "--g", down}) ==
        error_kind_exit_code(ErrorKind::OrbitalMismatch));
}

TEST_CASE("cli generators, search, proof-approx pipeline") {
  TempDir tmp;
  // a small fixed pair with no shared interior fixed points
  const char* f = R"({"points": [["0","0"], ["1/4","5/16"], ["3/4","11/16"], ["1","1"]]})";
  const char* g = R"({"points": [["0","0"], ["1/2","7/16"], ["1","1"]]})";
  std::string bundle = tmp.file("bundle.json");
  REQUIRE(run_cli({"generators", "--f", f, "--g", g, "--delta", "1/10", "--out", bundle}) == 0);
  Json bj = Json::parse(slurp(bundle));
  CHECK(bj.contains("g_tilde"));
  CHECK(parse_rational(bj["rho_g_exact"].get<std::string>()) < Q("1/10"));

  std::string report = tmp.file("search.json");
  std::string trace = tmp.file("trace.csv");
  REQUIRE(run_cli({"search", "--bundle", bundle, "--target", kIdentityJson, "--max-len", "2",
                   "--cells", "8", "--trace-csv", trace, "--out", report}) == 0);
  Json sj = Json::parse(slurp(report));
  CHECK(sj["best_word"] == "");
  CHECK(sj["lower"] == "0");
  CHECK(slurp(trace).find("length,best_distance_decimal\n0,0\n") == 0);

  std::string proof = tmp.file("proof.json");
  REQUIRE(run_cli({"proof-approx", "--bundle", bundle, "--target", kIdentityJson, "--epsilon",
                   "1/2", "--out", proof}) == 0);
  Json pj = Json::parse(slurp(proof));
  CHECK(pj["status"] == "ok");
  CHECK(pj["outer_budget"] == "0");
}

TEST_CASE("cli singular-mass") {
  TempDir tmp;
  std::string out = tmp.file("mass.json");
  REQUIRE(run_cli({"singular-mass", "--cantor", "11", "--mesh", "1/177147", "--threshold", "64",
                   "--out", out}) == 0);
  Json j = Json::parse(slurp(out));
  CHECK(j["mass"] == "1");

  REQUIRE(run_cli({"singular-mass", "--f", kIdentityJson, "--mesh", "1/64", "--threshold", "2",
                   "--out", out}) == 0);
  CHECK(Json::parse(slurp(out))["mass"] == "0");
}

TEST_CASE("cli honors the iteration cap flag and env var") {
  // a lazy conjugator whose evaluation near the endpoints needs iterations
  const char* f = R"({"points": [["0","0"], ["1/2","3/4"], ["1","1"]]})";
  const char* g = R"({"points": [["0","0"], ["1/4","1/2"], ["1","1"]]})";
  TempDir tmp;
  std::string conj = tmp.file("conj.json");
  REQUIRE(run_cli({"conjugate", "--f", f, "--g", g, "--out", conj}) == 0);
  std::string lazy = Json::parse(slurp(conj))["conjugator"].dump();

  std::string rho_out = tmp.file("rho.json");
  int ok = run_cli({"rho", "--f", lazy, "--g", lazy, "--cells", "64", "--out", rho_out});
  CHECK(ok == 0);
  Json rj = Json::parse(slurp(rho_out));
  CHECK(rj["lower"] == "0");
  CHECK(rj["upper_bound"] == "2");  // endpoint-fixing pair on [0,1]
  int capped = run_cli({"rho", "--f", lazy, "--g", lazy, "--cells", "64", "--iteration-cap", "2"});
  CHECK(capped == error_kind_exit_code(ErrorKind::IterationCapExceeded));

  ::setenv("HAC_ITERATION_CAP", "2", 1);
  int via_env = run_cli({"rho", "--f", lazy, "--g", lazy, "--cells", "64"});
  ::unsetenv("HAC_ITERATION_CAP");
  CHECK(via_env == error_kind_exit_code(ErrorKind::IterationCapExceeded));
}

TEST_CASE("cli error codes are distinct per family") {
  CHECK(run_cli({"rho", "--f", R"({"points": [["0","0"]]})", "--g", kIdentityJson}) ==
        error_kind_exit_code(ErrorKind::TooFewPoints));
  CHECK(run_cli({"rho", "--f", R"({"points": "bogus"})", "--g", kIdentityJson}) ==
        error_kind_exit_code(ErrorKind::ParseError));
  CHECK(run_cli({"fix", "--f", "/nonexistent/path.json"}) ==
        error_kind_exit_code(ErrorKind::ParseError));
}
