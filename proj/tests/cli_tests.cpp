// Drives the installed command-line binary end to end. The binary path
// arrives as the first argument; everything else goes to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_gs;
std::filesystem::path g_dir;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + g_gs + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name, const std::string& body) {
  auto p = g_dir / name;
  std::ofstream out(p);
  out << body;
  return p.string();
}

const char* kGeneric =
    "\"1 2 3\",1+2i\n"
    "\"1 3 2\",0.4-1i\n"
    "\"2 1 3\",-0.7+0.3i\n"
    "\"2 3 1\",2.2\n"
    "\"3 1 2\",-1.1-0.6i\n"
    "\"3 2 1\",0.9+1.4i\n";

const char* kOther =
    "\"1 2 3\",0.3-0.2i\n"
    "\"1 3 2\",1.7+0.5i\n"
    "\"2 1 3\",-2.1+1.2i\n"
    "\"2 3 1\",0.8-0.9i\n"
    "\"3 1 2\",1.5+0.1i\n"
    "\"3 2 1\",-0.4-1.3i\n";

const char* kConstant =
    "\"1 2 3\",1\n\"1 3 2\",1\n\"2 1 3\",1\n\"2 3 1\",1\n\"3 1 2\",1\n\"3 2 1\",1\n";

// one key per coset of sym:2 in sym:3, valid for either side
const char* kCoset = "\"1 2 3\",1+1i\n\"3 2 1\",-2\n\"1 3 2\",0.5i\n";

}  // namespace

TEST_CASE("transform prints fourier blocks") {
  auto f = fixture("f.csv", kGeneric);
  RunResult r = run("transform --group sym:3 " + f);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"] == "sym:3");
  REQUIRE(j["coefficients"].size() == 3);
  CHECK(j["coefficients"][0]["irrep"] == "3");

  RunResult coset = run("transform --group sym:3 --coset-left --subgroup sym:2 " +
                        fixture("cl.csv", kCoset));
  REQUIRE(coset.code == 0);
  CHECK(json::parse(coset.out)["coefficients"].size() == 3);
}

TEST_CASE("spectra subcommand covers kinds and sides") {
  auto f = fixture("f.csv", kGeneric);

  RunResult power = run("spectra --group sym:3 --kind power " + f);
  REQUIRE(power.code == 0);
  json jp = json::parse(power.out);
  CHECK(jp["kind"] == "power");
  CHECK(jp["side"] == "left");
  CHECK(jp["blocks"].size() == 3);

  RunResult skew = run("spectra --group sym:3 --kind skew --side right " + f);
  REQUIRE(skew.code == 0);
  json js = json::parse(skew.out);
  CHECK(js["side"] == "right");
  CHECK(js["entries"].size() == 18);

  RunResult restricted = run("spectra --group sym:3 --kind skew-restricted --subgroup sym:2 " +
                             fixture("cl.csv", kCoset));
  REQUIRE(restricted.code == 0);
  CHECK(json::parse(restricted.out)["entries"].size() == 6);

  CHECK(run("spectra --group sym:3 --kind triple --side right " + f).code == 1);
  CHECK(run("spectra --group nope:3 --kind power " + f).code == 1);
}

TEST_CASE("triple correlation lands in a binary sidecar") {
  auto f = fixture("f.csv", kGeneric);
  auto bin = (g_dir / "t.bin").string();
  RunResult r = run("spectra --group sym:3 --kind triple --binary-out " + bin + " " + f);
  REQUIRE(r.code == 0);
  std::ifstream in(bin, std::ios::binary);
  char magic[4] = {};
  in.read(magic, 4);
  CHECK(std::string(magic, 4) == "TC01");

  CHECK(run("spectra --group sym:3 --kind power --binary-out " + bin + " " + f).code == 1);
}

TEST_CASE("compare exit codes encode the verdict") {
  auto f = fixture("f.csv", kGeneric);
  auto f_again = fixture("f2.csv", kGeneric);
  auto other = fixture("g.csv", kOther);
  auto flat1 = fixture("c1.csv", kConstant);
  auto flat2 = fixture("c2.csv", kConstant);

  CHECK(run("compare --group sym:3 " + f + " " + f_again).code == 0);
  CHECK(run("compare --group sym:3 " + f + " " + other).code == 1);
  CHECK(run("compare --group sym:3 " + flat1 + " " + flat2).code == 2);
  CHECK(run("compare --group sym:3 " + f + " /no/such/file.csv").code == 3);
  CHECK(run("compare --group nope:3 " + f + " " + other).code == 3);
  CHECK(run("compare --group sym:3 --side up " + f + " " + other).code == 3);

  RunResult with_json = run("compare --group sym:3 " + f + " " + other);
  CHECK(json::parse(with_json.out)["verdict"] == "distinct");
}

TEST_CASE("bench orders the estimators by work") {
  RunResult r = run("bench --group sym:3 " + fixture("f.csv", kGeneric));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  auto products = [&](const char* key) {
    return j[key]["phases"]["products"]["scalarMults"].get<long long>();
  };
  CHECK(products("skew") < products("bispectrum"));
  CHECK(j["triple"]["scalarMults"].get<long long>() == 2 * 6 * 6 * 6);
}

TEST_CASE("rank condition over right cosets") {
  RunResult r = run("rank --group sym:3 --subgroup sym:2 " + fixture("cr.csv", kCoset));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["allOk"] == true);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["rank"] == 0);
}

TEST_CASE("selftest respects GS_SEED and is reproducible") {
  RunResult a = run("selftest --group sym:3", "GS_SEED=999");
  RunResult b = run("selftest --group sym:3", "GS_SEED=999");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 999);

  RunResult def = run("selftest --group cyclic:12");
  CHECK(def.code == 0);
  CHECK(json::parse(def.out)["seed"] == 12345);
}

TEST_CASE("output lands in a file when asked") {
  auto f = fixture("f.csv", kGeneric);
  auto out = (g_dir / "power.json").string();
  RunResult r = run("spectra --group sym:3 --kind power --out " + out + " " + f);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  json j = json::parse(in);
  CHECK(j["kind"] == "power");
}

TEST_CASE("identical invocations produce identical bytes") {
  auto f = fixture("f.csv", kGeneric);
  RunResult a = run("spectra --group sym:3 --kind bispectrum " + f);
  RunResult b = run("spectra --group sym:3 --kind bispectrum " + f);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run("").code != 0);
  CHECK(run("spectra --group sym:3 --kind power").code != 0);  // input missing
}

int run_all(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <gs-binary> [doctest args]\n");
    return 2;
  }
  g_gs = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "gs_cli_fixtures";
  std::filesystem::create_directories(g_dir);
  argv[1] = argv[0];
  int rc = run_all(argc - 1, argv + 1);
  std::filesystem::remove_all(g_dir);
  return rc;
}
