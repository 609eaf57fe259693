#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "beliefrev/cli.hpp"

using beliefrev::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string phi1_file() {
  const auto path = std::filesystem::temp_directory_path() / "beliefrev_test_phi1.txt";
  std::ofstream f(path);
  f << "atoms: r g s\n000: 2\n001: 2\n010: 1\n011: 1\n100: 0\n101: 0\n110: 0\n111: 0\n";
  return path.string();
}

}  // namespace

TEST_CASE("george --format json") {
  const Result r = invoke({"george", "--op", "natural", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["steps"][1]["label"] == "Phi3");
  CHECK(j["steps"][1]["level0"] == nlohmann::json::array({"010", "011"}));

  const Result flat = invoke({"george", "--op", "flatten", "--format", "json"});
  CHECK(flat.code == 0);
  CHECK(nlohmann::json::parse(flat.out)["believes_g"] == false);
}

TEST_CASE("check exits 1 on a counterexample") {
  const Result r = invoke({"check", "--atoms", "p,q", "--op", "natural", "--cop", "natural-con", "--postulate", "R7",
                           "--mode", "exhaustive"});
  CHECK(r.code == 1);
  CHECK(r.out.find("COUNTEREXAMPLE") != std::string::npos);

  const Result j = invoke({"check", "--atoms", "p,q", "--postulate", "R7", "--format", "json"});
  CHECK(j.code == 1);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["results"][0]["postulate"] == "R7");
  CHECK(report["results"][0].contains("counterexample"));

  const Result ok = invoke({"check", "--atoms", "p,q", "--postulate", "R1,R8"});
  CHECK(ok.code == 0);
}

TEST_CASE("text and JSON report the same verdicts") {
  for (const char* p : {"R1", "R7", "CORE", "C2"}) {
    for (const char* cop : {"natural-con", "drastic"}) {
      const Result text = invoke({"check", "--postulate", p, "--cop", cop});
      const Result json = invoke({"check", "--postulate", p, "--cop", cop, "--format", "json"});
      CHECK(text.code == json.code);
      const bool text_fail = text.out.find("COUNTEREXAMPLE") != std::string::npos;
      CHECK(text_fail == nlohmann::json::parse(json.out)["results"][0].contains("counterexample"));
    }
  }
}

TEST_CASE("seq with flatten") {
  const std::string path = phi1_file();
  const Result r = invoke({"seq", "--state", path, "--op", "flatten", "--steps", "revise:!(r|g|s); revise:!r&(g|s)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("belief set: {001, 010, 011}") != std::string::npos);
  const Result j = invoke({"seq", "--state", path, "--op", "flatten", "--steps", "revise:!(r|g|s); revise:!r&(g|s)",
                           "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["final_belief_set"] == nlohmann::json::array({"001", "010", "011"}));
}

TEST_CASE("revise, contract and models") {
  const std::string path = phi1_file();
  const Result rev = invoke({"revise", "--state", path, "--format", "json", "!(r|g|s)"});
  CHECK(rev.code == 0);
  CHECK(nlohmann::json::parse(rev.out)["final_belief_set"] == nlohmann::json::array({"000"}));
  const Result con = invoke({"contract", "--state", path, "--cop", "drastic", "--format", "json", "r"});
  CHECK(con.code == 0);
  CHECK(nlohmann::json::parse(con.out)["final_belief_set"].size() == 8);
  const Result m = invoke({"models", "--atoms", "p,q", "--format", "json", "p <-> q"});
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["formulas"][0]["models"] == nlohmann::json::array({"00", "11"}));
}

TEST_CASE("theorem harness commands") {
  CHECK(invoke({"theorem1", "--op", "reverse"}).code == 0);
  CHECK(invoke({"theorem1", "--cop", "drastic"}).code == 1);
  CHECK(invoke({"corollary1", "--op", "flatten"}).code == 0);
  CHECK(invoke({"observation1"}).code == 0);
  CHECK(invoke({"hansson", "--cop", "drastic"}).code == 0);
  const Result j = invoke({"theorem1", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["claims"].size() == 2);
}

TEST_CASE("enumerate") {
  CHECK(invoke({"enumerate", "--atoms", "p,q"}).out == "count: 75\n");
  const Result j = invoke({"enumerate", "--atoms", "p", "--list", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["count"] == 3);
  CHECK(doc["states"].size() == 3);
  const Result s = invoke({"enumerate", "--atoms", "p,q,r,s", "--mode", "sample", "--samples", "5", "--seed", "2"});
  CHECK(s.out == "count: 5\n");
}

TEST_CASE("usage and input errors exit 2 with one diagnostic line") {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"check", "--op", "nonsense"},
      {"check", "--mode", "random"},
      {"check", "--atoms", "p,q,r"},
      {"check", "--atoms", "a,b,c,d", "--mode", "exhaustive"},
      {"check", "--postulate", "R42"},
      {"models", "--atoms", "p", "p & & p"},
      {"models", "--atoms", "p", "q"},
      {"revise", "--state", "/nonexistent/file", "p"},
      {"seq", "--state", "/nonexistent/file", "--steps", "revise:p"},
      {"enumerate", "--atoms", "p,q,r,s"},
  };
  for (const auto& args : bad) {
    const Result r = invoke(args);
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  const Result parse = invoke({"models", "--atoms", "r,g", "r & & g"});
  CHECK(parse.out.empty());
  CHECK(parse.err == "beliefrev: syntax error at position 4: expected formula, found '&'\n");
}

TEST_CASE("help exits 0") {
  const Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("george") != std::string::npos);
}

TEST_CASE("output is deterministic across job counts") {
  const std::vector<std::string> base{"check", "--atoms", "p,q,r", "--mode", "sample", "--samples", "200",
                                      "--seed", "9", "--op", "reverse", "--format", "json"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
  CHECK(invoke(base).out == invoke(with_jobs).out);
}
