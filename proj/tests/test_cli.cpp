#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string bin() {
  const char* b = std::getenv("ISODBT_BIN");
  REQUIRE_MESSAGE(b != nullptr, ("ISODBT_BIN must point at the executable"));
  return b;
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::string why = "missing output file " + p.string();
  REQUIRE_MESSAGE(is.good(), why);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("isodbt_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("exit code contract") {
  TempDir t;
  std::string out = " --out " + t.path.string();
  CHECK(run("verify --chain 1+ --a 2 --levels 3" + out) == 0);
  CHECK(run("build --chain 2- --a 2" + out) == 2);        // inadmissible
  CHECK(run("build --chain 1+,1+ --a 2" + out) == 2);     // dependent seeds
  CHECK(run("build --chain 1x --a 2" + out) == 4);        // parse error
  CHECK(run("build --chain 1+ --a 0" + out) == 4);        // bad parameter
  CHECK(run("build --chain 1+ --omega 1/0" + out) == 4);  // bad rational
  CHECK(run("build" + out) == 4);                         // chain missing
  CHECK(run("frobnicate --chain 1+" + out) == 4);         // unknown verb
}

TEST_CASE("build writes the documented artifacts") {
  TempDir t;
  int rc = run("build --chain 1+,2- --a 4 --levels 3 --format both --out " +
               t.path.string());
  CHECK(rc == 0);
  std::string j = slurp(t.path / "1p_2m.build.json");
  CHECK(j.find("\"chain\": \"1+,2-\"") != std::string::npos);
  CHECK(j.find("\"admissible\": true") != std::string::npos);
  CHECK(j.find("\"eigenstates\"") != std::string::npos);
  CHECK(j.find("\"weight\"") != std::string::npos);
  std::string csv = slurp(t.path / "1p_2m.build.csv");
  CHECK(csv.rfind("x,V,psi0,psi1,psi2", 0) == 0);
  // At least the header plus a few hundred sample rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') > 100);
}

TEST_CASE("rejected chains leave a machine-readable report") {
  TempDir t;
  CHECK(run("verify --chain 1-,2- --a 2 --out " + t.path.string()) == 2);
  std::string j = slurp(t.path / "1m_2m.verify.json");
  CHECK(j.find("\"rejected\": true") != std::string::npos);
  CHECK(j.find("\"admissible\": false") != std::string::npos);
  CHECK(j.find("\"failing_prefix\": 2") != std::string::npos);
}

TEST_CASE("verify reports every check and the spectrum tolerance") {
  TempDir t;
  CHECK(run("verify --chain 1+ --a 2 --levels 3 --tol 1e-5 --out " +
            t.path.string()) == 0);
  std::string j = slurp(t.path / "1p.verify.json");
  for (const char* name :
       {"potential_routes_agree", "eigenstate_schrodinger_exact",
        "eigenstate_operator_route", "eigenstate_determinant_route",
        "sturm_certificate", "crum_krein_delta", "shape_invariance",
        "inverse_state_excluded", "orthogonality", "spectrum"})
    CHECK(j.find(std::string("\"") + name + "\"") != std::string::npos);
  CHECK(j.find("\"all_ok\": true") != std::string::npos);
}

TEST_CASE("spectrum accepts the plain base potential") {
  TempDir t;
  CHECK(run("spectrum --chain base --a 2 --levels 3 --format csv --out " +
            t.path.string()) == 0);
  std::string csv = slurp(t.path / "base.spectrum.csv");
  CHECK(csv.rfind("k,eigenvalue,target,abs_error", 0) == 0);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  TempDir t1, t2;
  std::string args = "build --chain 1+,2- --a 4 --levels 4 --format both";
  CHECK(run(args + " --out " + t1.path.string()) == 0);
  CHECK(run(args + " --out " + t2.path.string()) == 0);
  CHECK(slurp(t1.path / "1p_2m.build.json") ==
        slurp(t2.path / "1p_2m.build.json"));
  CHECK(slurp(t1.path / "1p_2m.build.csv") ==
        slurp(t2.path / "1p_2m.build.csv"));
}

TEST_CASE("batch mode aggregates in input order with worst exit code") {
  TempDir t;
  fs::path list = t.path / "chains.txt";
  std::ofstream(list) << "# comment line\n1+\n1-,2-\n1+,2-\n";
  setenv("ISODBT_THREADS", "2", 1);
  int rc = run("verify --batch " + list.string() + " --a 2 --levels 3 --out " +
               t.path.string());
  unsetenv("ISODBT_THREADS");
  CHECK(rc == 2);
  std::string j = slurp(t.path / "batch_summary.json");
  size_t p1 = j.find("\"1+\"");
  size_t p2 = j.find("\"1-,2-\"");
  size_t p3 = j.find("\"1+,2-\"");
  REQUIRE(p1 != std::string::npos);
  REQUIRE(p2 != std::string::npos);
  REQUIRE(p3 != std::string::npos);
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  CHECK(j.find("\"exit_code\": 2") != std::string::npos);
}

TEST_CASE("table emits coefficient rows") {
  TempDir t;
  CHECK(run("table --chain 1+ --a 2 --levels 2 --format both --out " +
            t.path.string()) == 0);
  std::string csv = slurp(t.path / "1p.table.csv");
  // Level 0 row: degree 1, coefficients 7, 2 (primitive-normalized).
  CHECK(csv.find("0,1,7,2") != std::string::npos);
  std::string j = slurp(t.path / "1p.table.json");
  CHECK(j.find("\"polynomials\"") != std::string::npos);
}
