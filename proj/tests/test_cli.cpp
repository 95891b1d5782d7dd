#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harmonic/cli.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/inc_format.hpp"

using namespace harmonic;
using json = nlohmann::json;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int rc = cli_run(args, o, e);
  return {rc, o.str(), e.str()};
}

json doc_of(const RunResult& r) {
  REQUIRE_FALSE(r.out.empty());
  return json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/harmonic_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("verified claims exit zero with the full report schema") {
  RunResult r = run({"verify", "theorem-pp", "-p", "3"});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["claim"] == "theorem-pp");
  CHECK(d["verdict"] == "verified");
  CHECK(d["sizes"]["seed"] == 10);
  CHECK(d["sizes"]["closure"] == 13);
  CHECK(d["stages"] == 1);
  CHECK(d["seed"] == 0);
  CHECK(d.contains("elapsed_ms"));
  CHECK_FALSE(d.contains("counterexample"));
  CHECK(r.err.find("theorem-pp: verified") != std::string::npos);
}

TEST_CASE("quiet mode silences the summary but not the report") {
  RunResult r = run({"--quiet", "verify", "theorem-pp", "-p", "2"});
  CHECK(r.rc == 0);
  CHECK(r.err.empty());
  CHECK(doc_of(r)["verdict"] == "verified");
}

TEST_CASE("the base seed is recorded wherever it is given") {
  RunResult before = run({"--rng-seed", "7", "verify", "theorem-pp", "-p", "3"});
  CHECK(doc_of(before)["seed"] == 7);
  RunResult after = run({"verify", "theorem-pp", "-p", "3", "--rng-seed", "9"});
  CHECK(doc_of(after)["seed"] == 9);
}

TEST_CASE("falsified claims exit one and carry a counterexample") {
  RunResult r = run({"verify", "minimality", "-p", "3"});
  CHECK(r.rc == 1);
  json d = doc_of(r);
  CHECK(d["verdict"] == "falsified");
  CHECK(d["sizes"]["closure"] == 13);
  CHECK(d.contains("counterexample"));
  CHECK(r.err.find("counterexample") != std::string::npos);
}

TEST_CASE("the aggregate mode flattens its parts and keeps the worst verdict") {
  RunResult r = run({"verify", "all", "-p", "3"});
  CHECK(r.rc == 1);
  json d = doc_of(r);
  CHECK(d["claim"] == "all");
  CHECK(d["verdict"] == "falsified");
  CHECK(d["sizes"]["theorem-pp.closure"] == 13);
  CHECK(d["sizes"]["minimality.seed"] == 9);
  CHECK(d["sizes"]["conjugation-laws.triples"] == 312);
  CHECK(d["sizes"]["sequence-plane.period"] == 3);
  std::string ce = d["counterexample"];
  CHECK(ce.rfind("minimality: ", 0) == 0);
}

TEST_CASE("conjugation and agreement verifiers through the CLI") {
  RunResult c = run({"verify", "conjugation", "-p", "3"});
  CHECK(c.rc == 0);
  json dc = doc_of(c);
  CHECK(dc["sizes"]["triples"] == 312);
  CHECK(dc["sizes"]["witnesses"] == 5616);

  RunResult a = run({"verify", "agreement", "-p", "5"});
  CHECK(a.rc == 0);
  json da = doc_of(a);
  CHECK(da["sizes"]["triples"] == 3720);
  CHECK(da["sizes"]["witnesses"] == 372000);
}

TEST_CASE("usage problems are reported without a crash") {
  RunResult help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("build") != std::string::npos);

  RunResult unknown = run({"frobnicate"});
  CHECK(unknown.rc == 2);

  RunResult badmode = run({"verify", "nonsense"});
  CHECK(badmode.rc == 2);

  RunResult noargs = run({});
  CHECK(noargs.rc == 2);
}

TEST_CASE("runtime failures exit two with an error report") {
  RunResult r = run({"closure", "--ambient", "foo:3", "--seed", "lp:3"});
  CHECK(r.rc == 2);
  json d = doc_of(r);
  CHECK(d["verdict"] == "error");
  CHECK(d.contains("counterexample"));

  RunResult bad = run({"verify", "theorem-pp", "-p", "9"});
  CHECK(bad.rc == 2);
  CHECK(doc_of(bad)["verdict"] == "error");
}

TEST_CASE("closure subcommand reports the growth and writes a replayable trace") {
  TempFile trace("closure_trace.json");
  RunResult r = run({"closure", "--ambient", "pg:3", "--seed", "lp:3", "--trace", trace.path});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["claim"] == "closure");
  CHECK(d["verdict"] == "observed");
  CHECK(d["sizes"]["ambient_points"] == 13);
  CHECK(d["sizes"]["seed"] == 10);
  CHECK(d["sizes"]["closure"] == 13);
  CHECK(d["sizes"]["added"] == 3);
  CHECK(d["stages"] == 1);
  CHECK(d["result"]["fixpoint"] == true);
  CHECK(d["result"]["closure_is_whole_plane"] == true);
  CHECK(d["result"]["trace"] == trace.path);

  json t = json::parse(slurp(trace.path));
  CHECK(t["initial"].size() == 10);
  CHECK(t["final_count"] == 13);
  CHECK(t["stages"] == 1);
  CHECK(t["fixpoint"] == true);
  REQUIRE(t["additions"].size() == 3);
  for (const auto& a : t["additions"]) {
    CHECK(a["stage"] == 1);
    CHECK(a.contains("point"));
    CHECK(a.contains("line"));
    CHECK(a.contains("pair"));
    CHECK(a.contains("middle"));
  }
}

TEST_CASE("a four element group expansion is already closed without filling the plane") {
  RunResult r = run({"closure", "--ambient", "pg:4", "--seed", "group_expansion:2,2"});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["sizes"]["ambient_points"] == 21);
  CHECK(d["sizes"]["seed"] == 13);
  CHECK(d["sizes"]["added"] == 0);
  CHECK(d["stages"] == 0);
  CHECK(d["result"]["fixpoint"] == true);
  CHECK(d["result"]["closure_is_whole_plane"] == false);
}

TEST_CASE("extension field ambients accept caret and bare order spellings") {
  RunResult caret = run({"closure", "--ambient", "pg:3^2", "--seed", "lp:3"});
  CHECK(caret.rc == 0);
  json d = doc_of(caret);
  CHECK(d["sizes"]["ambient_points"] == 91);
  CHECK(d["sizes"]["closure"] == 13);

  RunResult bare = run({"closure", "--ambient", "pg:9", "--seed", "lp:3"});
  CHECK(bare.rc == 0);
  CHECK(doc_of(bare)["sizes"]["closure"] == 13);
}

TEST_CASE("conjugate subcommand runs both methods and compares them") {
  RunResult r = run({"conjugate", "--ambient", "pg:3", "--y", "[1,0,0]", "--z", "[0,1,0]",
                     "--x", "[1,2,0]"});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["result"]["quadrangle"]["status"] == "unique");
  CHECK(d["result"]["quadrangle"]["point"] == "[1,1,0]");
  CHECK(d["result"]["quadrangle"]["witnesses"] == 18);
  CHECK(d["result"]["crossratio"]["point"] == "[1,1,0]");
  CHECK(d["result"]["agree"] == true);

  RunResult only_cr = run({"conjugate", "--ambient", "pg:3", "--y", "[1,0,0]", "--z",
                           "[0,1,0]", "--x", "[1,2,0]", "--method", "crossratio"});
  json dc = doc_of(only_cr);
  CHECK_FALSE(dc["result"].contains("quadrangle"));
  CHECK(dc["result"]["crossratio"]["point"] == "[1,1,0]");
}

TEST_CASE("sequence subcommand lists the terms to the first repeat") {
  RunResult r = run({"sequence", "--ambient", "pg:5", "--base", "[0,1,0]", "--a0",
                     "[1,0,0]", "--a1", "[1,1,0]"});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  std::vector<std::string> want = {"[1,0,0]", "[1,1,0]", "[1,2,0]",
                                   "[1,3,0]", "[1,4,0]", "[1,0,0]"};
  CHECK(d["result"]["terms"] == json(want));
  CHECK(d["result"]["modular"] == true);
  CHECK(d["result"]["repeat_index"] == 5);
  CHECK(d["result"]["matched_index"] == 0);
  CHECK(d["result"]["period"] == 5);
}

TEST_CASE("sequence plane verification finds the subplane upstairs") {
  RunResult r = run({"sequence", "--ambient", "pg:9", "--base", "[0,1,0]", "--a0",
                     "[1,0,0]", "--a1", "[1,1,0]", "--verify-plane"});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["claim"] == "sequence-plane");
  CHECK(d["verdict"] == "verified");
  CHECK(d["sizes"]["period"] == 3);
  CHECK(d["sizes"]["closure"] == 13);
  CHECK(d["sizes"]["plane_order"] == 3);
}

TEST_CASE("audit subcommand states the verdict and the reason") {
  RunResult h = run({"audit", "pg:2"});
  CHECK(h.rc == 0);
  json dh = doc_of(h);
  CHECK(dh["result"]["verdict"] == "harmonic");
  CHECK(dh["result"]["conjugate_is_identity"] == true);

  RunResult l = run({"audit", "lp:3"});
  CHECK(l.rc == 0);
  json dl = doc_of(l);
  CHECK(dl["result"]["verdict"] == "not_harmonic");
  std::string detail = dl["result"]["detail"];
  CHECK(detail.find("yields no conjugate") != std::string::npos);
  CHECK(dl["sizes"]["partial_meet_triples"].get<long>() > 0);
}

TEST_CASE("environment bounds are honored and validated") {
  setenv("HARMONIC_AUDIT_BOUND", "5", 1);
  RunResult r = run({"audit", "lp:3"});
  unsetenv("HARMONIC_AUDIT_BOUND");
  CHECK(r.rc == 2);
  json d = doc_of(r);
  CHECK(d["verdict"] == "error");
  std::string ce = d["counterexample"];
  CHECK(ce.find("TooLarge") != std::string::npos);

  setenv("HARMONIC_PLANE_BOUND", "3", 1);
  RunResult c = run({"closure", "--ambient", "pg:5", "--seed", "lp:5"});
  unsetenv("HARMONIC_PLANE_BOUND");
  CHECK(c.rc == 2);

  setenv("HARMONIC_PLANE_BOUND", "junk", 1);
  RunResult bad = run({"closure", "--ambient", "pg:3", "--seed", "lp:3"});
  unsetenv("HARMONIC_PLANE_BOUND");
  CHECK(bad.rc == 2);
}

TEST_CASE("build emits an incidence file that parses back") {
  RunResult r = run({"build", "fano"});
  CHECK(r.rc == 0);
  IncidenceStructure parsed = parse_incidence(r.out);
  LabeledStructure want = fano();
  CHECK(parsed.num_points() == 7);
  CHECK(parsed.lines() == want.inc.lines());
  CHECK(parsed.point_labels() == want.inc.point_labels());
  CHECK(r.err.find("fano: 7 points, 7 long lines") != std::string::npos);

  TempFile out("built.inc");
  RunResult f = run({"build", "lp", "-p", "3", "-o", out.path});
  CHECK(f.rc == 0);
  json d = doc_of(f);
  CHECK(d["result"]["file"] == out.path);
  IncidenceStructure lp_parsed = parse_incidence(slurp(out.path));
  CHECK(lp_parsed.num_points() == 10);
  CHECK(lp_parsed.lines() == lp(3).inc.lines());
}

TEST_CASE("every named build round trips through the text format") {
  std::vector<LabeledStructure> all = {fano(),          nonfano(),
                                       lp(3),           lp(5),
                                       reid(4),         reid_in_lp(5),
                                       group_expansion(2, 2), pg(Field::make(3))};
  for (const LabeledStructure& ls : all) {
    std::string text = emit_incidence(ls.inc);
    IncidenceStructure back = parse_incidence(text);
    CHECK(back.num_points() == ls.inc.num_points());
    CHECK(back.lines() == ls.inc.lines());
    CHECK(back.point_labels() == ls.inc.point_labels());
    // and a second pass is stable
    CHECK(emit_incidence(back) == text);
  }
}

TEST_CASE("incidence files built by the CLI can seed a closure") {
  TempFile inc("seed.inc");
  RunResult b = run({"build", "lp", "-p", "3", "-o", inc.path});
  REQUIRE(b.rc == 0);
  RunResult c = run({"closure", "--ambient", "pg:3", "--seed", inc.path});
  CHECK(c.rc == 0);
  json d = doc_of(c);
  CHECK(d["sizes"]["seed"] == 10);
  CHECK(d["sizes"]["closure"] == 13);
}

TEST_CASE("incidence parser diagnostics carry text line numbers") {
  CHECK_THROWS_AS(parse_incidence("line: 0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_incidence("points 3x\n"), Error);
  CHECK_THROWS_AS(parse_incidence("points 3\nline: 0 1 5\n"), Error);
  CHECK_THROWS_AS(parse_incidence("points 3\nline: 0 1\n"), Error);
  CHECK_THROWS_AS(parse_incidence("points 4\nline: 0 1 banana\n"), Error);
  CHECK_THROWS_AS(parse_incidence("points 3\nlabel 9 far\n"), Error);

  try {
    parse_incidence("points 5\nline: 0 1 2\nline: 0 1 3\n");
    FAIL("expected a pair violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvariantViolation);
    std::string what = e.what();
    CHECK(what.find("lie on two long lines") != std::string::npos);
    CHECK(what.find("2") != std::string::npos);
    CHECK(what.find("3") != std::string::npos);
  }

  try {
    parse_incidence("points 4\nline: 0 1 banana\n");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("banana") != std::string::npos);
  }

  // comments, blank lines, and duplicate rows are tolerated
  IncidenceStructure ok = parse_incidence(
      "# header comment\n"
      "\n"
      "points 4  # four points\n"
      "label 0 origin\n"
      "line: 2 1 0\n"
      "line: 0 1 2\n");
  CHECK(ok.num_points() == 4);
  CHECK(ok.num_lines() == 1);
  CHECK(ok.point_label(0) == "origin");
}

TEST_CASE("synthesize writes a certificate that records every claim") {
  TempFile cert("cert.json");
  RunResult r = run({"synthesize", "-p", "5", "--certificate", cert.path});
  CHECK(r.rc == 0);
  json d = doc_of(r);
  CHECK(d["claim"] == "synthesis");
  CHECK(d["verdict"] == "verified");
  CHECK(d["sizes"]["stages"] == 3);
  CHECK(d["sizes"]["synthesized"] == 15);
  CHECK(d["sizes"]["plane_points"] == 31);
  CHECK(d["result"]["covered"] == true);
  CHECK(d["result"]["wrap_consistent"] == true);

  json c = json::parse(slurp(cert.path));
  CHECK(c["p"] == 5);
  REQUIRE(c["stages"].size() == 3);
  for (const auto& st : c["stages"]) {
    CHECK(st["row_points"].size() == 5);
    CHECK(st["constructions"].size() == 25);
  }
}

TEST_CASE("synthesize refuses a non prime order") {
  RunResult r = run({"synthesize", "-p", "9"});
  CHECK(r.rc == 2);
  CHECK(doc_of(r)["verdict"] == "error");
}
