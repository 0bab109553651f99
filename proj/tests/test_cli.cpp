#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

std::string ctl() {
  const char* p = std::getenv("WEYLCTL");
  REQUIRE_MESSAGE(p != nullptr, "WEYLCTL must point at the CLI binary");
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_out.tmp";
  int rc = std::system((ctl() + " " + args + " > " + out_file + " 2> cli_err.tmp").c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return RunResult{WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("model listing and export") {
  RunResult r = run("model --list");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["models"].size() == 11);
  CHECK(j["models"][0] == "z2_trivial");

  RunResult m = run("model z4_mod2");
  CHECK(m.code == 0);
  Json pj = Json::parse(m.out);
  CHECK(pj["n"] == 4);
  CHECK(pj["E"] == Json::array({0, 2}));

  CHECK(run("export z4_mod2 --out exported.json").code == 0);
  std::ifstream f("exported.json");
  CHECK(Json::parse(f) == pj);
}

TEST_CASE("verify accepts bundled and file models") {
  RunResult r = run("verify --pair-model inv2");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["star_semigroup"]["ok"] == true);
  CHECK(j["weyl_pair"]["ok"] == true);
  CHECK(j["relation_laws"]["ok"] == true);

  CHECK(run("export sign_z2 --out pair.json").code == 0);
  CHECK(run("verify pair.json").code == 0);

  // tampered multiplication table must be reported, not crash
  std::ifstream f("pair.json");
  Json pj = Json::parse(f);
  pj["mult"][0][0] = 1;
  std::ofstream g("broken.json");
  g << pj.dump();
  g.close();
  RunResult b = run("verify broken.json");
  CHECK(b.code == 1);
}

TEST_CASE("weyl groupoid command") {
  RunResult r = run("weyl --pair-model z4_mod2 --carrier ultrafilters --dot graph.dot");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["points"].size() == 2);
  CHECK(j["etale"]["ok"] == true);
  CHECK(j["groupoid_laws"]["ok"] == true);
  std::ifstream d("graph.dot");
  std::stringstream ss;
  ss << d.rdbuf();
  CHECK(ss.str().find("digraph") != std::string::npos);

  CHECK(run("weyl --pair-model z4_mod2 --carrier nope").code == 2);
}

TEST_CASE("cosets command output shape") {
  RunResult r = run("cosets --pair-model inv2");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["filters"].size() == 7);
  CHECK(j["ultrafilters"].size() == 4);
  CHECK(j["cosets_exhaustive"] == true);
  CHECK(j["units"].size() >= 1);
  for (const Json& u : j["units"]) {
    bool found = false;
    for (const Json& c : j["cosets"])
      if (c == u) found = true;
    CHECK(found);
  }
}

TEST_CASE("norm command") {
  Json mj;
  mj["d"] = 2;
  mj["entries"] = Json::array({Json::array({"2", "0"}), Json::array({"0", "1/3"})});
  std::ofstream f("mat.json");
  f << mj.dump();
  f.close();
  RunResult r = run("norm mat.json --exact");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ceil_norm"] == "2");
  CHECK(j["exact"] == true);

  CHECK(run("norm missing.json").code == 2);
  CHECK(run("laws --samples 10").code != 0);  // seed is mandatory
}

TEST_CASE("bundle command") {
  RunResult l = run("bundle --list");
  CHECK(l.code == 0);
  CHECK(Json::parse(l.out)["systems"].size() == 3);

  RunResult r = run("bundle two_block");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["system"]["ok"] == true);
  CHECK(j["projection"]["ok"] == true);
  CHECK(j["fibers"].size() == 2);
  CHECK(j["fibers"][0]["classes"].size() == 2);
}

TEST_CASE("byte determinism across runs and worker counts") {
  const char* cmds[] = {
      "model z4_mod2",
      "cosets --pair-model sign_z2",
      "weyl --pair-model s3_a3 --carrier filters",
      "bundle two_block",
  };
  for (const char* c : cmds) {
    RunResult a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  RunResult w1 = run("laws --samples 60 --seed 9 --workers 1");
  RunResult w4 = run("laws --samples 60 --seed 9 --workers 4");
  CHECK(w1.code == 0);
  CHECK(w1.out == w4.out);
}
