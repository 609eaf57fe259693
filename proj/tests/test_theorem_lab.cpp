#include <doctest.h>

#include "beliefrev/theorem_lab.hpp"
#include "support.hpp"

using namespace beliefrev;
using testing::sig_of;
using testing::state_of;
using testing::worlds;

namespace {

const ClaimEntry& find_claim(const TheoremReport& r, std::string_view id) {
  for (const auto& c : r.claims) {
    if (c.claim == id) return c;
  }
  FAIL("missing claim " << id);
  throw std::logic_error("unreachable");
}

bool has_witness_for(const ClaimEntry& c, PostulateId p) {
  for (const auto& w : c.witnesses) {
    if (w.postulate == p) return true;
  }
  return false;
}

void require_replayable(const ClaimEntry& c) {
  for (const auto& w : c.witnesses) {
    const OperatorPair ops = operator_pair(w.revision, w.contraction);
    REQUIRE(check_instance(w.postulate, ops, w.instance).status == Status::fails);
  }
}

const Signature kPq = Signature::parse("p,q");

}  // namespace

TEST_CASE("George tables") {
  const Signature sig = george_signature();
  CHECK(sig.atoms() == std::vector<std::string>{"r", "g", "s"});
  CHECK(george_initial() == state_of(sig, testing::kPhi1));
  CHECK(george_table("Phi1") == state_of(sig, testing::kPhi1));
  CHECK(george_table("Phi2") == state_of(sig, testing::kPhi2));
  CHECK(george_table("Phi3") == state_of(sig, testing::kPhi3));
  CHECK(george_table("Phi2'") == state_of(sig, testing::kPhi2p));
  CHECK(george_table("Phi3'") == state_of(sig, testing::kPhi3p));
  CHECK(george_table("Phi3").rank(sig.parse_valuation("001")) == 3);
  CHECK_THROWS_AS(george_table("Phi4"), Error);
}

TEST_CASE("George golden trace, natural") {
  const GoldenTraceResult g = run_george("natural");
  CHECK(g.passed());
  REQUIRE(g.steps.size() == 2);
  CHECK(g.steps[0].label == "Phi2");
  CHECK(g.steps[1].label == "Phi3");
  for (const auto& s : g.steps) {
    CHECK(s.matches);
    CHECK(s.diff.empty());
    CHECK(s.s1);
    CHECK(s.s2);
  }
  CHECK(g.steps[1].actual.state() == state_of(george_signature(), testing::kPhi3));
  CHECK(g.g_believed);
  CHECK(g.c2.status == Status::holds);
}

TEST_CASE("George golden trace, flatten") {
  const GoldenTraceResult g = run_george("flatten");
  CHECK(g.passed());
  REQUIRE(g.steps.size() == 2);
  CHECK(g.steps[0].actual.state() == state_of(george_signature(), testing::kPhi2p));
  CHECK(g.steps[1].actual.state() == state_of(george_signature(), testing::kPhi3p));
  for (const auto& s : g.steps) {
    CHECK(s.s1);
    CHECK(s.s2);
  }
  CHECK_FALSE(g.g_believed);
  CHECK(g.c2.status == Status::fails);
  CHECK_THROWS_AS(run_george("lex"), UnknownOperatorError);
}

TEST_CASE("George JSON") {
  const nlohmann::json j = to_json(run_george("natural"));
  CHECK(j["passed"] == true);
  CHECK(j["steps"][1]["label"] == "Phi3");
  CHECK(j["steps"][1]["level0"] == nlohmann::json::array({"010", "011"}));
  CHECK(j["steps"][1]["actual"]["001"] == 3);
  CHECK(j["believes_g"] == true);
  CHECK(j["c2"]["status"] == "holds");
}

TEST_CASE("Theorem 1 over every built-in pairing") {
  for (auto rev : revision_operator_names()) {
    for (auto con : contraction_operator_names()) {
      CAPTURE(rev);
      CAPTURE(con);
      const OperatorPair ops = operator_pair(rev, con);
      const TheoremReport r = verify_theorem1(ops, kPq, SearchOptions{});
      REQUIRE(r.claims.size() == 2);
      const ClaimEntry& one = find_claim(r, "theorem1.1");
      const ClaimEntry& two = find_claim(r, "theorem1.2");
      CHECK(one.direction == "both");
      CHECK(two.direction == "both");
      if (con == "drastic") {
        // Drastic withdrawal violates recovery, so the theorem does not apply.
        CHECK(one.status == ClaimStatus::skipped);
        CHECK(has_witness_for(one, PostulateId::PC6));
        continue;
      }
      CHECK(one.status == ClaimStatus::consistent);
      CHECK(two.status == ClaimStatus::consistent);
      CHECK(r.consistent());
      // Independent statuses from direct search agree with the claim.
      const bool s1 = !search_counterexample(PostulateId::S1, ops, kPq, SearchOptions{});
      const bool r1 = !search_counterexample(PostulateId::R1, ops, kPq, SearchOptions{});
      CHECK(s1 == r1);
      CHECK(s1 == (std::string_view(rev) != "reverse"));
      require_replayable(one);
      require_replayable(two);
    }
  }
}

TEST_CASE("Theorem 1 witnesses for the reverse operator") {
  const TheoremReport r = verify_theorem1(operator_pair("reverse", "natural-con"), kPq, SearchOptions{});
  const ClaimEntry& one = find_claim(r, "theorem1.1");
  CHECK(has_witness_for(one, PostulateId::S1));
  CHECK(has_witness_for(one, PostulateId::R1));
  const ClaimEntry& two = find_claim(r, "theorem1.2");
  CHECK(has_witness_for(two, PostulateId::S2));
  CHECK((has_witness_for(two, PostulateId::R2) || has_witness_for(two, PostulateId::R3) ||
         has_witness_for(two, PostulateId::R4)));
}

TEST_CASE("Corollary 1") {
  for (const char* rev : {"natural", "flatten", "lex"}) {
    CAPTURE(rev);
    const TheoremReport r = verify_corollary1(operator_pair(rev, "natural-con"), kPq, SearchOptions{});
    const ClaimEntry& c = find_claim(r, "corollary1");
    CHECK(c.status == ClaimStatus::consistent);
    CHECK(c.violations == 0);
    CHECK(c.witnesses.empty());
  }
  // Direct recount of the applicable instances.
  std::uint64_t applicable = 0;
  for (const auto& s : testing::all_states(kPq)) {
    for (const auto& a : testing::all_inputs(kPq)) {
      if (belief_set(s).intersects(a)) ++applicable;
    }
  }
  const TheoremReport r = verify_corollary1(operator_pair("natural", "natural-con"), kPq, SearchOptions{});
  CHECK(find_claim(r, "corollary1").note.rfind(std::to_string(applicable) + " applicable", 0) == 0);

  const TheoremReport rev = verify_corollary1(operator_pair("reverse", "natural-con"), kPq, SearchOptions{});
  CHECK(find_claim(rev, "corollary1").status == ClaimStatus::skipped);
}

TEST_CASE("Observation 1 profile") {
  for (const char* rev : {"natural", "flatten"}) {
    CAPTURE(rev);
    const TheoremReport r = verify_observation1(operator_pair(rev, "natural-con"), kPq, SearchOptions{});
    REQUIRE(r.claims.size() == 7);
    CHECK(r.consistent());
    for (const char* id : {"observation1.2", "observation1.3", "observation1.6"}) {
      CHECK(find_claim(r, id).violations == 0);
    }
    CHECK(find_claim(r, "observation1.4").status == ClaimStatus::consistent);
    CHECK(find_claim(r, "observation1.7").witnesses.empty());
    CHECK(find_claim(r, "observation1.1").note == "recorded: R3 holds");
    const ClaimEntry& five = find_claim(r, "observation1.5");
    REQUIRE(five.witnesses.size() == 1);
    CHECK(five.witnesses[0].postulate == PostulateId::R7);
    require_replayable(five);
  }
  const TheoremReport reverse = verify_observation1(operator_pair("reverse", "natural-con"), kPq, SearchOptions{});
  CHECK(find_claim(reverse, "observation1.1").note == "recorded: R3 fails");
  const TheoremReport drastic = verify_observation1(operator_pair("natural", "drastic"), kPq, SearchOptions{});
  for (const auto& c : drastic.claims) CHECK(c.status == ClaimStatus::skipped);
}

TEST_CASE("Hansson implication") {
  const TheoremReport nat = verify_hansson(contraction_operator("natural-con"), kPq, SearchOptions{});
  const ClaimEntry& n = find_claim(nat, "hansson");
  CHECK(n.status == ClaimStatus::consistent);
  CHECK(n.witnesses.empty());
  CHECK(n.note == "antecedent holds, recovery holds");

  const TheoremReport dr = verify_hansson(contraction_operator("drastic"), kPq, SearchOptions{});
  const ClaimEntry& d = find_claim(dr, "hansson");
  CHECK(d.status == ClaimStatus::consistent);
  CHECK(d.note == "antecedent fails, recovery fails");
  CHECK(has_witness_for(d, PostulateId::CORE));
  CHECK(has_witness_for(d, PostulateId::PC6));
  require_replayable(d);
}

TEST_CASE("theorem reports are reproducible") {
  const OperatorPair ops = operator_pair("reverse", "natural-con");
  SearchOptions sample;
  sample.mode = SearchMode::sample;
  sample.seed = 12;
  sample.samples = 200;
  const Signature pqr = sig_of("p,q,r");
  const std::string a = to_json(verify_theorem1(ops, pqr, sample)).dump();
  sample.jobs = 4;
  const std::string b = to_json(verify_theorem1(ops, pqr, sample)).dump();
  CHECK(a == b);
  const nlohmann::json j = nlohmann::json::parse(a);
  CHECK(j["mode"] == "sample");
  CHECK(j["samples"] == 200);
  CHECK(j["claims"][0]["status"] == "consistent-with-theorem");
  CHECK(j["consistent"] == true);
}
