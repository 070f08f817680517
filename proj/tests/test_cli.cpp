#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

#include "drgtight/sequences.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = drgtight::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    dir_ = fs::temp_directory_path() / ("drgtight-test-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~TempDir() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

private:
  fs::path dir_;
};

const char* kJ63 = R"doc({"name":"J(6,3)","D":3,"b":["9","4","1"],"c":["1","4","9"]})doc";
const char* kQ3 = R"doc({"name":"Q3","D":3,"b":["3","2","1"],"c":["1","2","3"]})doc";
const char* kBad = R"doc({"name":"bad","D":3,"b":["3","2","1"],"c":["2","2","3"]})doc";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
  TempDir tmp;
  Result ok = run_cli({"validate", tmp.file("j63.json", kJ63)});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"case\": \"IV\"") != std::string::npos);
  CHECK(ok.out.find("\"k\": \"9\"") != std::string::npos);

  Result bad = run_cli({"validate", tmp.file("bad.json", kBad)});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("c_1") != std::string::npos);

  Result missing = run_cli({"validate", tmp.file("nope", "").append(".gone")});
  CHECK(missing.code == 1);

  Result malformed = run_cli({"validate", tmp.file("junk.json", "{not json")});
  CHECK(malformed.code == 1);

  // non-graphical arrays pass validation but carry a warning
  std::string warned = tmp.file(
      "warn.json", R"doc({"D":3,"b":["4","2","1"],"c":["1","3","4"]})doc");
  Result w = run_cli({"validate", warned});
  CHECK(w.code == 0);
  CHECK(w.out.find("not realizable") != std::string::npos);
}

TEST_CASE("pcs prints exact rationals") {
  TempDir tmp;
  std::string q3 = tmp.file("q3.json", kQ3);
  Result r = run_cli({"pcs", q3, "--theta", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1, -1, 1, -1\n");

  Result r2 = run_cli({"pcs", tmp.file("j63.json", kJ63), "--theta", "3"});
  CHECK(r2.out == "1, 1/3, -1/3, -1\n");
}

TEST_CASE("tight") {
  TempDir tmp;
  std::string j63 = tmp.file("j63.json", kJ63);
  Result r = run_cli({"tight", j63, "--theta", "3", "--theta2", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tight\n") == 0);
  CHECK(r.out.find("gamma: 1, -1/9, -1/9, 1") != std::string::npos);
  CHECK(r.out.find("psi: -1") != std::string::npos);
  CHECK(r.out.find("epsilon: 5/3") != std::string::npos);

  Result not_tight = run_cli({"tight", j63, "--theta", "3", "--theta2", "-1"});
  CHECK(not_tight.code == 0);
  CHECK(not_tight.out == "not tight\n");
}

TEST_CASE("spectrum descends") {
  TempDir tmp;
  // the reduced matrix only exists in case II
  Result wrong = run_cli({"spectrum", tmp.file("j.json", kJ63), "--reduced"});
  CHECK(wrong.code == 2);

  Result r = run_cli({"spectrum", tmp.file("j63.json", kJ63)});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<double> vals;
  std::string line;
  while (std::getline(lines, line)) vals.push_back(std::stod(line));
  REQUIRE(vals.size() == 4);
  CHECK(std::is_sorted(vals.rbegin(), vals.rend()));
  CHECK(vals[0] == doctest::Approx(9.0));
}

TEST_CASE("classify emits the report document") {
  TempDir tmp;
  Result r = run_cli({"classify", tmp.file("j63.json", kJ63)});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"case\": \"IV\"") != std::string::npos);
  CHECK(r.out.find("\"theta\": \"3\"") != std::string::npos);
  CHECK(r.out.find("\"theta_prime\": \"-3\"") != std::string::npos);
  CHECK(r.out.find("\"epsilon\": \"5/3\"") != std::string::npos);

  Result explicit_cands =
      run_cli({"classify", tmp.file("j.json", kJ63), "--candidates", "3,-1"});
  CHECK(explicit_cands.code == 0);
  CHECK(explicit_cands.out.find("\"theta\": \"3\"") != std::string::npos);
  CHECK(explicit_cands.out.find("\"theta\": \"-1\"") == std::string::npos);
}

TEST_CASE("recover and feasible round trip through the document schema") {
  TempDir tmp;
  Result rec =
      run_cli({"recover", tmp.file("j63.json", kJ63), "--theta", "3", "--epsilon", "5/3"});
  CHECK(rec.code == 0);
  CHECK(rec.out.find("\"9\"") != std::string::npos);
  CHECK(rec.out.find("c_D_unconstrained") == std::string::npos);  // theta is an eigenvalue

  Result feas = run_cli({"feasible", "--sigma", "1,1/3,-1/3,-1", "--epsilon", "5/3"});
  CHECK(feas.code == 0);
  CHECK(feas.out.find("\"c_D_unconstrained\": true") != std::string::npos);

  // computation errors exit with 2
  Result zero =
      run_cli({"recover", tmp.file("j.json", kJ63), "--theta", "9", "--epsilon", "2"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("sigma") != std::string::npos);

  Result infeasible = run_cli({"feasible", "--sigma", "1,1/3,1,0", "--epsilon", "5/3"});
  CHECK(infeasible.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK(run_cli({"pcs"}).code == 1);              // missing file and theta
  CHECK(run_cli({"--help"}).code == 0);
  TempDir tmp;
  CHECK(run_cli({"pcs", tmp.file("q3.json", kQ3), "--theta", "zzz"}).code == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
  TempDir tmp;
  std::string j63 = tmp.file("j63.json", kJ63);
  Result a = run_cli({"classify", j63});
  Result b = run_cli({"classify", j63});
  CHECK(a.out == b.out);
  Result c = run_cli({"spectrum", j63});
  Result d = run_cli({"spectrum", j63});
  CHECK(c.out == d.out);
}

TEST_CASE("scalar formatting round-trips through parse") {
  TempDir tmp;
  Result r = run_cli({"pcs", tmp.file("j63.json", kJ63), "--theta", "1/7"});
  REQUIRE(r.code == 0);
  std::string body = r.out.substr(0, r.out.size() - 1);
  std::stringstream ss(body);
  std::string tok;
  std::vector<drgtight::Scalar> parsed;
  while (std::getline(ss, tok, ',')) parsed.push_back(drgtight::Scalar::parse(tok));
  REQUIRE(parsed.size() == 4);
  drgtight::PseudoCosineSeq s =
      drgtight::pseudo_cosine_sequence(drgtight::testing::j63(), drgtight::Scalar::from_ratio(1, 7));
  for (size_t i = 0; i < parsed.size(); ++i)
    CHECK(parsed[i].ratio() == s.sigma[i].ratio());
}

TEST_CASE("--approx forces approximate mode") {
  TempDir tmp;
  Result r = run_cli({"--approx", "pcs", tmp.file("q3.json", kQ3), "--theta", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1.0") != std::string::npos);  // decimal, not exact, output
}

TEST_CASE("JSON numeric literals and decimals are accepted") {
  TempDir tmp;
  std::string numeric =
      tmp.file("n.json", R"doc({"D":3,"b":[9,4,1],"c":[1,4,9]})doc");
  Result r = run_cli({"validate", numeric});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"case\": \"IV\"") != std::string::npos);

  std::string decimal =
      tmp.file("d.json", R"doc({"D":3,"b":["9.0","4","1"],"c":["1","4","9"]})doc");
  Result rd = run_cli({"pcs", decimal, "--theta", "3"});
  CHECK(rd.code == 0);
  CHECK(rd.out.find("/") == std::string::npos);  // whole array went approximate
}

TEST_CASE("tolerance can come from the environment or the flag") {
  TempDir tmp;
  std::string q3 = tmp.file("q3.json", kQ3);
  Result strict = run_cli({"--tol", "1e-12", "spectrum", q3});
  CHECK(strict.code == 0);

  ::setenv("DRGTIGHT_TOL", "1e-6", 1);
  Result via_env = run_cli({"spectrum", q3});
  ::unsetenv("DRGTIGHT_TOL");
  CHECK(via_env.code == 0);
  // looser bisection still lands within its wider bracket
  CHECK(std::stod(via_env.out.substr(0, via_env.out.find('\n'))) ==
        doctest::Approx(3.0).epsilon(1e-6));
}

}  // TEST_SUITE
