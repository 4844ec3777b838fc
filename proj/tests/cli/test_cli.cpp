#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "facenum_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = facenum::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) {
  return (fs::path(FACENUM_FIXTURE_DIR) / (name + ".fct")).string();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "facenum_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("check ds on the torus over GF(5)") {
  auto r = run({"check", "ds", fixture("torus7"), "--field", "5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["field"] == "5");
  for (const auto& rep : j["reports"]) {
    for (const auto& x : rep["residuals"]) CHECK(x == 0);
  }
}

TEST_CASE("generated M5(9) meets the h2 bound with equality") {
  auto path = scratch("m59.fct");
  auto g = run({"gen", "kuhnel-lassman", "--d", "5", "--n", "9", "-o", path.string()});
  REQUIRE(g.code == 0);
  auto r = run({"check", "h2", path.string(), "--field", "2^16"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"][0]["residuals"][0] == 0);
}

TEST_CASE("schenzel dims for RP2 in characteristic two") {
  auto r = run({"check", "schenzel", fixture("rp2_6"), "--field", "2^16", "--seed", "7"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"][0]["context"]["dims"] == nlohmann::json::array({1, 3, 6, 1}));
  CHECK(j["seed"] == 7);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* kind : {"all", "rigidity", "schenzel"}) {
    auto a = run({"check", kind, fixture("torus7"), "--field", "65537", "--seed", "3"});
    auto b = run({"check", kind, fixture("torus7"), "--field", "65537", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto g1 = run({"gen", "cyclic", "--n", "8", "--d", "4"});
  auto g2 = run({"gen", "cyclic", "--n", "8", "--d", "4"});
  CHECK(g1.out == g2.out);
}

TEST_CASE("exit codes") {
  // Failing check.
  auto susp = scratch("susp.fct");
  REQUIRE(run({"gen", "suspension", fixture("rp2_6"), "-o", susp.string()}).code == 0);
  auto bad = run({"check", "manifold", susp.string(), "--field", "2"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["pass"] == false);
  CHECK(run({"check", "all", susp.string(), "--field", "2"}).code == 1);
  // Usage and input errors.
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"check", "ds", "/nonexistent/x.fct"}).code == 2);
  CHECK(run({"check", "ds", fixture("torus7"), "--field", "4"}).code == 2);
  CHECK(run({"check", "nope", fixture("torus7")}).code == 2);
  CHECK(run({"check", "h2", fixture("torus7")}).code == 2);
  CHECK(run({"check", "ds", fixture("torus7"), "--format", "xml"}).code == 2);
  CHECK(run({"gen", "kuhnel-lassman", "--d", "3", "--n", "9"}).code == 2);
  auto garbage = scratch("garbage.fct");
  std::ofstream(garbage) << "1 2 x\n";
  auto pe = run({"info", garbage.string()});
  CHECK(pe.code == 2);
  CHECK(pe.err.find("ParseError") != std::string::npos);
}

TEST_CASE("info, vectors and text output") {
  auto info = run({"info", fixture("octahedron")});
  CHECK(info.code == 0);
  CHECK(nlohmann::json::parse(info.out)["f"] == nlohmann::json::array({1, 6, 12, 8}));
  auto vec = run({"vectors", fixture("rp2_6"), "--field", "2", "--format", "text"});
  CHECK(vec.code == 0);
  CHECK(vec.out.find("h″ = (1,3,3,1)") != std::string::npos);
  auto vj = nlohmann::json::parse(run({"vectors", fixture("cp2_9"), "--field", "2"}).out);
  CHECK(vj["h_prime"] == nlohmann::json::array({1, 4, 10, 20, 4, 1}));
  CHECK(vj["h_dprime"] == nlohmann::json::array({1, 4, 10, 10, 4, 1}));
}

TEST_CASE("gen round trips through files") {
  auto oct = scratch("oct.fct");
  REQUIRE(run({"gen", "fixture", "--name", "octahedron", "-o", oct.string()}).code == 0);
  CHECK(slurp(oct) == slurp(fixture("octahedron")));
  auto coned = scratch("cone.fct");
  REQUIRE(run({"gen", "cone", oct.string(), "-o", coned.string()}).code == 0);
  auto j = nlohmann::json::parse(run({"info", coned.string()}).out);
  CHECK(j["vertices"] == 7);
  auto sum = scratch("sum.fct");
  auto m = scratch("m.fct");
  REQUIRE(run({"gen", "kuhnel-lassman", "--d", "5", "--n", "9", "-o", m.string()}).code == 0);
  REQUIRE(run({"gen", "connected-sum", m.string(), "--b", "2", "-o", sum.string()}).code == 0);
  auto h2 = nlohmann::json::parse(run({"check", "h2", sum.string(), "--field", "2^16"}).out);
  CHECK(h2["pass"] == true);
  CHECK(h2["reports"][0]["residuals"][0] == 0);
  auto punched = scratch("punched.fct");
  REQUIRE(run({"gen", "punch", m.string(), "-o", punched.string()}).code == 0);
  CHECK(run({"check", "h2", punched.string(), "--field", "2^16"}).code == 0);
  auto join = run({"gen", "join", oct.string(), oct.string()});
  CHECK(join.code == 0);
  auto du = run({"gen", "disjoint-union", oct.string(), oct.string()});
  CHECK(du.code == 0);
}
