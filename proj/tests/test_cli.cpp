#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

using abcover::cli::run_cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch file that lives for the duration of one test.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("abcover_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path) << text;
  }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

TempFile generated(std::vector<std::string> args) {
  args.insert(args.begin(), {"-q", "generate"});
  auto r = run(args);
  REQUIRE(r.code == 0);
  return TempFile(r.out);
}

}  // namespace

TEST_CASE("validate") {
  auto p = generated({"petersen-d5"});
  auto ok = run({"validate", p.str()});
  CHECK(ok.code == 0);
  CHECK(ok.doc()["valid"] == true);

  auto doc = json::parse(run({"-q", "generate", "k4"}).out);
  doc["edges"][0]["color"] = "000";
  TempFile bad(doc.dump());
  auto r = run({"validate", bad.str()});
  CHECK(r.code == 1);
  bool identity = false;
  const auto vdoc = r.doc();
  for (const auto& v : vdoc["violations"]) identity = identity || v["kind"] == "identity-color";
  CHECK(identity);

  TempFile junk("{ not json");
  CHECK(run({"validate", junk.str()}).code == 2);
  CHECK(run({"validate", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("invariants") {
  auto k4 = generated({"k4"});
  auto r = run({"-q", "invariants", k4.str()});
  REQUIRE(r.code == 0);
  auto doc = r.doc();
  CHECK(doc["b0"] == 1);
  CHECK(doc["b1"] == 3);
  CHECK(doc["unsplittable"] == true);
  CHECK(doc["special_circuits"][0]["length"] == 3);
  CHECK(doc["gamma_h"].size() == 7);
  CHECK(doc["taut"] == true);

  auto m = generated({"mobius-d2", "--n", "4"});
  auto lv = run({"-q", "invariants", m.str()}).doc()["taut_levels"];
  CHECK(lv["1"] == true);
  CHECK(lv["2"] == false);
}

TEST_CASE("gamma-h and complex") {
  auto m = generated({"mobius-d2", "--n", "4"});
  auto g = run({"-q", "gamma-h", m.str(), "--char", "01"});
  REQUIRE(g.code == 0);
  CHECK(g.doc()["edges"].size() == 8);
  CHECK(g.doc()["b0"] == 1);
  CHECK(run({"-q", "gamma-h", m.str(), "--char", "011"}).code == 2);
  CHECK(run({"-q", "gamma-h", m.str(), "--char", "00"}).code == 2);

  auto k4 = generated({"k4"});
  auto c = run({"-q", "complex", k4.str(), "--k", "2"});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["b0"] == 6);
  CHECK(c.doc()["b1"] == 4);
  CHECK(c.doc()["euler_ok"] == true);
  CHECK(run({"-q", "complex", k4.str(), "--k", "4"}).code == 2);
}

TEST_CASE("predict") {
  auto k4 = generated({"k4"});
  auto r = run({"-q", "predict", k4.str()});
  CHECK(r.code == 0);
  CHECK(r.doc()["coker"] == json::array());

  auto m3 = generated({"mobius-d4", "--n", "3"});
  auto r3 = run({"-q", "predict", m3.str()});
  CHECK(r3.code == 0);
  CHECK(r3.doc()["coker_text"] == "Z2");

  auto alt = generated({"mobius-d4-alt", "--n", "5"});
  auto unmet = run({"-q", "predict", alt.str()});
  CHECK(unmet.code == 3);
  CHECK(unmet.doc()["error"] == "hypotheses unmet");
}

TEST_CASE("generate") {
  auto p = run({"-q", "generate", "petersen-d5"});
  CHECK(p.code == 0);
  CHECK(p.doc()["vertices"].size() == 10);
  CHECK(p.doc()["edges"].size() == 15);

  auto t = generated({"d3-tree-circuit", "--m", "4", "--b", "6"});
  auto inv = run({"-q", "invariants", t.str()}).doc();
  CHECK(inv["b1"] == 6);
  bool four = false;
  for (const auto& s : inv["special_circuits"]) four = four || s["length"] == 4;
  CHECK(four);

  CHECK(run({"-q", "generate", "mobius-d2", "--n", "0"}).code == 2);
  CHECK(run({"-q", "generate", "nonesuch"}).code == 2);
  CHECK(run({"-q", "generate", "mobius-d2", "--n", "abc"}).code == 2);
}

TEST_CASE("enumerate") {
  auto k4 = generated({"k4"});
  auto r = run({"-q", "enumerate", k4.str(), "--d", "3", "--up-to-symmetry"});
  CHECK(r.code == 0);
  CHECK(r.doc()["count"] == 1);
  CHECK(run({"-q", "enumerate", k4.str(), "--d", "0"}).code == 2);
}

TEST_CASE("verify") {
  CHECK(run({"-q", "verify", "nonesuch"}).code == 2);
  auto g = run({"-q", "verify", "graded-ring", "--d", "4"});
  CHECK(g.code == 0);
  CHECK(g.doc()["passed"] == true);
  CHECK(run({"-q", "verify", "witness", "--family", "mobius-d4", "--n-max", "8"}).code == 0);
  CHECK(run({"-q", "verify", "mobparity", "--m-max", "9"}).code == 0);
}
