#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using namespace lampctl;

namespace {

JobConfig job(const std::string& command, std::initializer_list<std::string> args) {
  JobConfig cfg;
  cfg.command = command;
  for (const auto& a : args) {
    if (a.find('=') != std::string::npos)
      cfg.set_assignment(a);
    else
      cfg.args.push_back(a);
  }
  return cfg;
}

std::pair<int, std::string> exec(const JobConfig& cfg, const RunOptions& opt = {}) {
  std::ostringstream out;
  const int status = run(cfg, out, opt);
  return {status, out.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("config parsing") {
  JobConfig cfg;
  CHECK_THROWS_AS(cfg.set("bogus", "1"), usage_error);
  CHECK_THROWS_AS(cfg.set_assignment("novalue"), usage_error);
  CHECK_THROWS_AS(cfg.set("cap_states", "0"), usage_error);
  CHECK_THROWS_AS(cfg.set("cap_heldkarp", "-3"), usage_error);
  CHECK(cfg.get_int("radius") == 6);

  std::istringstream spaced("radius = 4\n");
  cfg.load(spaced);
  CHECK(cfg.get_int("radius") == 4);
  std::istringstream good("# comment\n  n=3\n\nsides=1/2/3\n");
  cfg.load(good);
  CHECK(cfg.get_int("n") == 3);
  CHECK(cfg.get_int_list("sides") == std::vector<long>{1, 2, 3});
  std::istringstream bad("n=3\nwhatever=1\n");
  try {
    cfg.load(bad);
    FAIL("expected a usage error");
  } catch (const usage_error& e) {
    CHECK(has(e.what(), "line 2"));
  }
  cfg.set("seed", "x");
  CHECK_THROWS_AS(cfg.get_int("seed"), usage_error);
}

TEST_CASE("distance command") {
  auto [status, text] = exec(job("dist", {}));
  CHECK(status == kPass);
  CHECK(has(text, "distance: 8"));
  CHECK(has(text, "[trailer]\ndistance=8\nstatus=0\n"));
  auto [bad, msg] = exec(job("dist", {"to={9:1}@0"}));
  CHECK(bad == kUsage);
}

TEST_CASE("build command") {
  auto [status, text] = exec(job("build", {"lamplighter", "n=2", "base=complete-3"}));
  CHECK(status == kPass);
  CHECK(has(text, "vertices: 24"));
  CHECK(has(text, "truncated-cube isomorphism: PASS"));
  CHECK(has(text, "command=build\narg0=lamplighter\nbase=complete-3\nn=2\n"));

  const std::string dot = "lampctl_test.dot";
  auto [s2, t2] = exec(job("build", {"lamplighter", "n=2", "base=complete-2"}), {dot});
  CHECK(s2 == kPass);
  CHECK(has(t2, "C8 isomorphism: PASS"));
  std::ifstream in(dot);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(has(body.str(), "graph"));
  CHECK(has(body.str(), "--"));
  std::remove(dot.c_str());

  CHECK(exec(job("build", {"moebius"})).first == kUsage);
}

TEST_CASE("exit codes follow verdicts") {
  CHECK(exec(job("homotopy", {"graph=cycle-4", "path=0/1/2/3/0", "scale=2"})).first == kPass);
  CHECK(exec(job("homotopy", {"graph=cycle-4", "path=0/1/2/3/0", "scale=1", "cap_len=4"})).first == kFail);
  CHECK(exec(job("homotopy", {"graph=cycle-8", "path=0/1/2/3/4/5/6/7/0", "scale=1", "cap_states=5"})).first ==
        kInconclusive);
  CHECK(exec(job("homotopy", {"graph=cycle-4"})).first == kUsage);

  auto refuted = exec(job("persist", {"graph=grid", "radius=3", "path=-2,0/-1,0/0,0/1,0/2,0", "target=0,0", "scale=2"}));
  CHECK(refuted.first == kFail);
  CHECK(has(refuted.second, "script:"));
  CHECK(exec(job("persist", {"graph=path-3", "path=0/1/2", "target=0"})).first == kPass);

  CHECK(exec(job("kappa", {"map=double", "radius=50", "kappa=1/2", "r=4"})).first == kPass);
  CHECK(exec(job("kappa", {"map=double", "radius=50", "kappa=1", "r=4"})).first == kFail);
  CHECK(exec(job("kappa", {"kappa=half"})).first == kUsage);

  CHECK(exec(job("ends", {"graph=line", "radius=3", "radii=2", "margin=3"})).first == kInconclusive);
  CHECK(exec(job("ends", {"graph=tree-3", "radius=6", "radii=2", "margin=2"})).first == kPass);
  CHECK(exec(job("nonsense", {})).first == kUsage);
}

TEST_CASE("leaves command") {
  auto square = exec(job("leaves", {"radius=20", "leaves={}/{-6:1}/{-6:1,6:1}/{6:1}"}));
  CHECK(square.first == kPass);
  CHECK(has(square.second, "first: {-6:1}"));
  auto broken = exec(job("leaves", {"radius=20", "leaves={}/{-6:1}/{-6:1,7:1}/{6:1}"}));
  CHECK(broken.first == kFail);
  auto ladder = exec(job("leaves", {"mode=ladder", "radius=20", "leaves={}/{5:1}/{5:1,10:1}",
                                     "rungs={0:1}/{0:1,5:1}/{0:1,5:1,10:1}", "from={}@0", "to={5:1,10:1}@0"}));
  CHECK(ladder.first == kPass);
  CHECK(has(ladder.second, "difference: {0:1}"));
}

TEST_CASE("amenability commands") {
  CHECK(exec(job("folner", {"dim=3"})).first == kPass);
  auto wreath = exec(job("folner", {"mode=wreath", "lamp_width=2", "base_width=2"}));
  CHECK(wreath.first == kPass);
  CHECK(has(wreath.second, "|dF|: 16"));
  CHECK(exec(job("folner", {"mode=tree", "degree=4", "radius=5", "samples=20"})).first == kPass);
  CHECK(exec(job("aptolic", {"variant=amenable"})).first == kPass);
  auto distortion = exec(job("distortion", {}));
  CHECK(distortion.first == kPass);
  CHECK(has(distortion.second, "ratio=1.33333"));
}

TEST_CASE("reports are reproducible") {
  auto cfg = job("aptolic", {"m=3", "p=2", "pairs=40", "seed=5"});
  auto first = exec(cfg), second = exec(cfg);
  CHECK(first.second == second.second);
  CHECK(has(first.second, "seed=5"));
  auto other = exec(job("aptolic", {"m=3", "p=2", "pairs=40", "seed=6"}));
  CHECK(other.second != first.second);
}

TEST_CASE("fixture suite") {
  auto [status, text] = exec(job("fixtures", {}));
  CHECK(status == kPass);
  CHECK(has(text, "failed=0"));
  for (const auto& f : run_fixtures()) CHECK_MESSAGE(f.pass, f.name);
}
