#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(BOHR_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("radius subcommand: classical value, JSON output") {
  RunResult res = run_cli("radius --family monomial --p 1");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["command"] == "radius");
  CHECK(std::abs(j["results"]["radius"].get<double>() - 1.0 / 3.0) < 1e-10);
  CHECK(j["results"]["status"] == "found");
  CHECK(j["results"].contains("residual"));
  CHECK(j["results"].contains("bracket_lo"));
  CHECK(j["results"].contains("iterations"));
}

TEST_CASE("radius subcommand: cesaro and hypergeometric families") {
  RunResult ces = run_cli("radius --family cesaro --alpha 0");
  REQUIRE(ces.exit_code == 0);
  const double r0 = nlohmann::json::parse(ces.out)["results"]["radius"].get<double>();
  CHECK(std::floor(r0 * 1e4) == 5335.0);  // printed truncation 0.5335...

  RunResult hyp = run_cli("radius --family hypergeom --a 1 --b 1 --c 1 --p 1");
  REQUIRE(hyp.exit_code == 0);
  const double rh = nlohmann::json::parse(hyp.out)["results"]["radius"].get<double>();
  CHECK(std::abs(rh - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("no radius below one: exit 0 with a distinct status") {
  RunResult res = run_cli("radius --family hypergeom --a 0 --b 1 --c 1 --p 1");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["results"]["status"] == "no-radius-below-1");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("radius --family monomial --p notanumber").exit_code == 2);
  CHECK(run_cli("radius --family power --p 1").exit_code == 2);       // missing --alpha
  CHECK(run_cli("radius --family nosuch --p 1").exit_code == 2);
  CHECK(run_cli("table --quantity radius").exit_code == 2);           // no range
  CHECK(run_cli("table --quantity closed-form --p-range 2:1:0.5").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  // family construction failures are usage errors too
  CHECK(run_cli("radius --family hypergeom --a -0.5 --b 1 --c 1 --p 1").exit_code == 2);
}

TEST_CASE("table: alpha sweep of the cesaro radius has 11 rows") {
  RunResult res = run_cli("--format csv table --quantity radius --family cesaro "
                          "--alpha-range 0:5:0.5");
  REQUIRE(res.exit_code == 0);
  CHECK(count_lines(res.out) == 12);  // header + 11 rows
  CHECK(res.out.rfind("alpha,radius,residual,iterations,status", 0) == 0);
}

TEST_CASE("table: r sweep of s_alpha has 9 rows") {
  RunResult res = run_cli("--format csv table --quantity s-alpha --alpha 1 "
                          "--r-range 0.1:0.9:0.1");
  REQUIRE(res.exit_code == 0);
  CHECK(count_lines(res.out) == 10);
}

TEST_CASE("table: remaining quantities and axes") {
  RunResult lm = run_cli("--format csv table --quantity lerch-majorant --alpha 0 "
                         "--r-range 0.1:0.5:0.1");
  REQUIRE(lm.exit_code == 0);
  CHECK(count_lines(lm.out) == 6);
  CHECK(lm.out.rfind("r,value,error_bound", 0) == 0);

  RunResult sa = run_cli("table --quantity s-alpha --r 0.5 --alpha-range 0:2:1");
  REQUIRE(sa.exit_code == 0);
  auto j = nlohmann::json::parse(sa.out);
  CHECK(j["rows"].size() == 3);

  RunResult env = run_cli("--format csv table --quantity envelope --r-range 0.4:0.8:0.1");
  REQUIRE(env.exit_code == 0);
  CHECK(count_lines(env.out) == 6);
  CHECK(env.out.find("bombieri") != std::string::npos);
}

TEST_CASE("verify reports no-radius families without certifying") {
  RunResult res = run_cli("verify --family hypergeom --a 0 --b 1 --c 1 --p 1");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["results"]["status"] == "no-radius-below-1");
}

TEST_CASE("table: closed-form p sweep matches p/(2+p) per row") {
  RunResult res = run_cli("table --quantity closed-form --kind R1 --p-range 0.5:2:0.5");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  REQUIRE(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) {
    const double p = row["p"].get<double>();
    CHECK(std::abs(row["radius"].get<double>() - p / (2.0 + p)) < 1e-14);
  }
}

TEST_CASE("csv cells carry 15 significant digits") {
  // closed form p/(2+p) at p = 1 is exactly the double 1/3, so the %.15g
  // rendering is deterministic
  RunResult res = run_cli("--format csv table --quantity closed-form --kind R1 "
                          "--p-range 1:1:1");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("0.333333333333333") != std::string::npos);

  RunResult mono = run_cli("--format csv radius --family monomial --p 1");
  REQUIRE(mono.exit_code == 0);
  CHECK(mono.out.find("0.3333333333333") != std::string::npos);  // solver value, 13+ digits
}

TEST_CASE("plain format") {
  RunResult res = run_cli("--format plain radius --family monomial --p 1");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("command = radius") != std::string::npos);
  CHECK(res.out.find("radius = 0.3333333333333") != std::string::npos);
}

TEST_CASE("verify: report fields and byte-identical reruns with a fixed seed") {
  const std::string args = "verify --family monomial --p 1 --seed 7 --samples 8";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["results"]["status"] == "violation-found");
  CHECK(j["results"]["violation"]["bohr_value"].get<double>() >
        j["results"]["violation"]["phi0"].get<double>());

  RunResult ces = run_cli("verify --family cesaro --alpha 0 --p 1 --seed 3 --samples 4");
  REQUIRE(ces.exit_code == 0);
  auto jc = nlohmann::json::parse(ces.out);
  CHECK(std::floor(jc["results"]["radius"].get<double>() * 1e4) == 5335.0);
  CHECK(jc["results"]["status"] == "violation-found");
}

TEST_CASE("asymptotics subcommand") {
  RunResult res = run_cli("asymptotics");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(std::abs(j["results"]["q"].get<double>() - 7.57736) < 1e-5);
  CHECK(std::abs(j["results"]["lower_constant"].get<double>() - 1.47217) < 1e-5);
  CHECK(std::abs(j["results"]["secondary_constant"].get<double>() - 1.09261) < 1e-5);
  CHECK(j["rows"].size() == 4);
}

TEST_CASE("tolerance flag and environment fallback") {
  RunResult flag = run_cli("radius --family monomial --p 1 --tolerance 1e-6");
  REQUIRE(flag.exit_code == 0);
  auto jf = nlohmann::json::parse(flag.out);
  CHECK(jf["parameters"]["tolerance"].get<double>() == 1e-6);
  // halving the tolerance never moves the radius by more than the prior one
  RunResult tight = run_cli("radius --family monomial --p 1 --tolerance 5e-7");
  const double r1 = jf["results"]["radius"].get<double>();
  const double r2 = nlohmann::json::parse(tight.out)["results"]["radius"].get<double>();
  CHECK(std::abs(r1 - r2) <= 1e-6);

  RunResult env = run_cli("radius --family monomial --p 1", "BOHR_LAB_TOLERANCE=1e-7");
  auto je = nlohmann::json::parse(env.out);
  CHECK(je["parameters"]["tolerance"].get<double>() == 1e-7);

  // the flag wins over the environment
  RunResult both = run_cli("radius --family monomial --p 1 --tolerance 1e-9",
                           "BOHR_LAB_TOLERANCE=1e-7");
  auto jb = nlohmann::json::parse(both.out);
  CHECK(jb["parameters"]["tolerance"].get<double>() == 1e-9);
}

TEST_CASE("--out writes the record to a file") {
  const std::string path = "/tmp/bohr_cli_out_test.json";
  std::remove(path.c_str());
  RunResult res = run_cli("--out " + path + " radius --family monomial --p 1");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  auto j = nlohmann::json::parse(ss.str());
  CHECK(std::abs(j["results"]["radius"].get<double>() - 1.0 / 3.0) < 1e-10);
  std::remove(path.c_str());
}

TEST_CASE("JSON output round-trips") {
  RunResult res = run_cli("radius --family shifted --p 2");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("help exits 0 and every command is deterministic") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("radius --help").exit_code == 0);

  for (const std::string args :
       {std::string("radius --family cesaro --alpha 0.5"),
        std::string("table --quantity radius --family cesaro --alpha-range 0:2:1"),
        std::string("asymptotics --r 0.9 --r 0.99")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run_cli("verify --family monomial --p 1 --below-points 0").exit_code == 2);
}
