#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bihom/cli.hpp"
#include "bihom/io.hpp"
#include "support.hpp"

using namespace bihom;
namespace fs = std::filesystem;

namespace {

const std::string data = BIHOM_DATA_DIR;

std::string path(const std::string& file) { return data + "/" + file; }

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes text to a fresh file in the temp directory and returns its path.
std::string scratch_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("bihom_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const char* n4_text = R"({
  "name": "n4", "arity": 3, "dim": 4, "parity": [0, 0, 0, 0], "basis": ["e1", "e2", "e3", "e4"],
  "bracket_symmetry": "super-skew",
  "bracket": [{"args": [0, 1, 2], "out": {"e4": "1"}}]
})";

std::vector<std::string> data_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(data))
    if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("bundled files parse to the expected shapes") {
  const auto osp = io::load_algebra(path("osp12.json"));
  CHECK(osp.arity == 2);
  REQUIRE(osp.binary);
  CHECK(osp.binary->space.dim() == 5);
  CHECK(osp.space().name(3) == "F");
  const auto n4 = io::load_algebra(path("n4.json"));
  CHECK(n4.arity == 3);
  REQUIRE(n4.ternary);
  CHECK(n4.ternary->dim() == 4);
  CHECK(n4.ternary->bracket.nonzero_count() == 6);
  CHECK(n4.ternary->bracket.eval({1, 0, 2}) == test::vec({0, 0, 0, -1}));
  REQUIRE(n4.twist);
  const auto t = io::load_algebra(path("tstar_n4.json"));
  REQUIRE(t.form);
  REQUIRE(t.subspaces.size() == 1);
  CHECK(t.subspaces[0].first == "dual");
  const auto th = io::load_algebra(path("n4_eps_theta.json"));
  CHECK(th.module_kind == "coadjoint");
  REQUIRE(th.theta);
  CHECK(th.theta->eval({0, 1, 2}) == test::vec({0, 0, 0, 1}));
}

TEST_CASE("round trip through render for every data file") {
  const auto files = data_files();
  CHECK(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f);
    const std::string text = slurp(path(f));
    const auto a = io::parse_algebra(text);
    const auto again = io::parse_algebra(io::pretty(io::render(a)));
    CHECK(io::render(again) == io::render(a));
    CHECK(io::render(a) == io::Json::parse(text));
    if (a.ternary) {
      CHECK(again.ternary->bracket == a.ternary->bracket);
      CHECK(again.ternary->alpha == a.ternary->alpha);
      CHECK(again.ternary->space == a.ternary->space);
    }
    if (a.binary) CHECK(again.binary->bracket == a.binary->bracket);
    if (a.theta) CHECK(*again.theta == *a.theta);
    if (a.form) CHECK(again.form->gram == a.form->gram);
  }
}

TEST_CASE("rationals survive a round trip bit-exactly") {
  std::string text = n4_text;
  text.replace(text.find("\"1\""), 3, "\"-123456789012345678901/98765432109876543210\"");
  const auto a = io::parse_algebra(text);
  CHECK(a.ternary->bracket.eval({0, 1, 2})[3] == Scalar::parse("-123456789012345678901/98765432109876543210"));
  CHECK(io::parse_algebra(io::pretty(io::render(a))).ternary->bracket == a.ternary->bracket);
}

TEST_CASE("input validation") {
  std::string bad = n4_text;
  bad.replace(bad.find("[0, 0, 0, 0]"), 12, "[0, 0, 0]");
  CHECK_THROWS_WITH_AS(io::parse_algebra(bad), doctest::Contains("parity: length mismatch"), Error);
  try {
    io::parse_algebra(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
  }
  std::string range = n4_text;
  range.replace(range.find("[0, 1, 2]"), 9, "[0, 1, 7]");
  CHECK_THROWS_AS(io::parse_algebra(range), Error);
  std::string frac = n4_text;
  frac.replace(frac.find("\"1\""), 3, "\"1/0\"");
  CHECK_THROWS_WITH_AS(io::parse_algebra(frac), doctest::Contains("DivisionByZero"), Error);
  std::string flt = n4_text;
  flt.replace(flt.find("\"1\""), 3, "0.5");
  CHECK_THROWS_WITH_AS(io::parse_algebra(flt), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(io::parse_algebra("{\"name\": "), doctest::Contains("ParseError"), Error);
  std::string label = n4_text;
  label.replace(label.find("\"e4\": \"1\""), 9, "\"e9\": \"1\"");
  CHECK_THROWS_AS(io::parse_algebra(label), Error);
}

TEST_CASE("exit codes of every command") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"verify", path("n4.json")}, 0},
      {{"verify", path("osp12.json")}, 0},
      {{"verify", path("tstar_n4.json")}, 0},
      {{"verify", path("n4_eps_theta.json")}, 0},
      {{"twist", path("osp12.json"), "--lambda", "2/1", "--mu", "3/1"}, 0},
      {{"twist", path("super_n.json")}, 0},
      {{"twist", path("n4.json"), "--k", "2"}, 0},
      {{"sum", path("n4.json"), path("gl11_ternary.json")}, 0},
      {{"tensor", path("assoc_line.json"), path("s3.json")}, 0},
      {{"semidirect", path("n4_adjoint.json")}, 0},
      {{"t-theta", path("n4_eps_theta.json")}, 0},
      {{"theta-f", path("n4_adjoint.json")}, 0},
      {{"sigma", path("n4_adjoint.json")}, 0},
      {{"dual", path("a4.json")}, 0},
      {{"tstar", path("n4_eps_theta.json")}, 0},
      {{"series", path("s3.json")}, 0},
      {{"derivations", path("n4.json"), "--r", "1", "--s", "0"}, 0},
      {{"center", path("gl11_ternary.json")}, 0},
      {{"reconstruct", path("tstar_n4.json"), "--ideal", "dual"}, 0},
      {{"bogus", path("n4.json")}, 2},
      {{"verify", path("no_such_file.json")}, 2},
      {{"twist", path("osp12.json"), "--lambda", "0", "--mu", "1"}, 2},
      {{"twist", path("osp12.json"), "--lambda", "1/0", "--mu", "1"}, 2},
      {{"reconstruct", path("tstar_n4.json"), "--ideal", "nowhere"}, 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args.empty() ? std::string("<none>") : c.args[0]);
    const Run r = run(c.args);
    CHECK(r.code == c.code);
    const auto j = r.json();
    if (c.code == 2) {
      CHECK(j.contains("error"));
      CHECK_FALSE(r.err.empty());
    } else {
      CHECK(j.value("overall", "pass") == "pass");
    }
  }
}

TEST_CASE("usage errors") {
  const Run r = run({});
  CHECK(r.code == 2);
  CHECK(r.err.find("usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit 1 exactly when a check fails") {
  std::string broken = n4_text;
  const std::string skew = "\"bracket_symmetry\": \"super-skew\",";
  broken.replace(broken.find(skew), skew.size(), "");
  const auto p = scratch_file("broken.json", broken);
  const Run r = run({"verify", p});
  CHECK(r.code == 1);
  const auto j = r.json();
  CHECK(j["overall"] == "fail");
  bool witnessed = false;
  for (const auto& c : j["checks"])
    if (c["status"] == "fail") witnessed = witnessed || c.contains("witness");
  CHECK(witnessed);

  // The adjoint of a twisted algebra fails the dual-representation conditions.
  const auto tw = run({"twist", path("super_n.json"), "--out", scratch_file("tw.json", "")});
  REQUIRE(tw.code == 0);
  const Run d = run({"dual", (fs::temp_directory_path() / "bihom_cli_tw.json").string()});
  CHECK(d.code == 1);
  CHECK(d.json()["overall"] == "fail");
}

TEST_CASE("twist table for osp(1,2)") {
  const Run r = run({"twist", path("osp12.json"), "--lambda", "2/1", "--mu", "3/1"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  std::vector<std::string> table = j["table"];
  CHECK(std::find(table.begin(), table.end(), "[H,X] = 18 X") != table.end());
  CHECK(std::find(table.begin(), table.end(), "[F,F] = 1/3 Y") != table.end());
  CHECK(j["algebra"]["alpha"][1][1] == "4");  // α(X) = λ² X
}

TEST_CASE("reconstruct emits an isometry certificate") {
  const Run r = run({"reconstruct", path("tstar_n4.json"), "--ideal", "dual"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  bool isometry = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "phi-isometry") isometry = c["status"] == "pass";
  CHECK(isometry);
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", path("tstar_n4.json")},
           {"reconstruct", path("tstar_n4.json"), "--ideal", "dual"},
           {"derivations", path("super_n.json"), "--parity", "1"},
           {"dual", path("gl11_ternary.json")}}) {
    setenv("BIHOMLIE_THREADS", "1", 1);
    const Run a = run(args);
    setenv("BIHOMLIE_THREADS", "4", 1);
    const Run b = run(args);
    unsetenv("BIHOMLIE_THREADS");
    const Run c = run(args);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
  }
}

TEST_CASE("--out writes a loadable algebra") {
  const auto p = (fs::temp_directory_path() / "bihom_cli_sum.json").string();
  const Run r = run({"sum", path("n4.json"), path("n4.json"), "--out", p});
  REQUIRE(r.code == 0);
  const auto a = io::load_algebra(p);
  REQUIRE(a.ternary);
  CHECK(a.ternary->dim() == 8);
  CHECK(a.ternary->bracket.nonzero_count() == 12);
  CHECK(run({"verify", p}).code == 0);
}
