#include "beliefrev/theorem_lab.hpp"

#include <algorithm>

namespace beliefrev {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::consistent: return "consistent-with-theorem";
    case ClaimStatus::inconsistent: return "inconsistent-with-theorem";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

bool TheoremReport::consistent() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimEntry& c) { return c.status == ClaimStatus::consistent; });
}

namespace {

TheoremReport empty_report(const OperatorPair& ops, const Signature& sig, const SearchOptions& options) {
  return {ops.revision.name, ops.contraction.name, sig, options, {}, {}};
}

ClaimEntry claim(std::string id, const OperatorPair& ops, std::string direction, std::vector<PostulateId> ps) {
  ClaimEntry c;
  c.claim = std::move(id);
  c.revision = ops.revision.name;
  c.contraction = ops.contraction.name;
  c.direction = std::move(direction);
  c.postulates = std::move(ps);
  return c;
}

// Marks every claim skipped when the operator pair is not AGM-compliant.
bool skip_unless_agm(TheoremReport& report, const OperatorPair& ops, std::vector<ClaimEntry> claims) {
  auto failure = agm_precondition(ops, report.signature, report.options);
  if (!failure) return false;
  for (auto& c : claims) {
    c.status = ClaimStatus::skipped;
    c.note = "precondition failed: operator pair violates " + std::string(to_string(failure->postulate));
    c.witnesses.push_back(*failure);
    report.claims.push_back(std::move(c));
  }
  return true;
}

PostulateSummary add_summary(TheoremReport& report, PostulateId p, const OperatorPair& ops) {
  report.results.push_back(summarize(p, ops, report.signature, report.options));
  return report.results.back();
}

void add_witness(ClaimEntry& c, const PostulateSummary& s) {
  if (s.counterexample) c.witnesses.push_back(*s.counterexample);
}

Counterexample joint_witness(PostulateId p, const OperatorPair& ops, const Instance& inst, Verdict v) {
  return {p, ops.revision.name, ops.contraction.name, inst, std::move(v.witness), std::move(v.detail)};
}

}  // namespace

std::optional<Counterexample> agm_precondition(const OperatorPair& ops, const Signature& sig,
                                               const SearchOptions& options) {
  for (const auto& group : {contraction_postulates(), revision_postulates()}) {
    for (auto p : group) {
      if (auto c = search_counterexample(p, ops, sig, options)) return c;
    }
  }
  return std::nullopt;
}

TheoremReport verify_theorem1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options) {
  using P = PostulateId;
  TheoremReport report = empty_report(ops, sig, options);
  ClaimEntry part1 = claim("theorem1.1", ops, "both", {P::R1, P::S1});
  ClaimEntry part2 = claim("theorem1.2", ops, "both", {P::R2, P::R3, P::R4, P::S2});
  if (skip_unless_agm(report, ops, {part1, part2})) return report;

  const auto s1 = add_summary(report, P::S1, ops);
  const auto r1 = add_summary(report, P::R1, ops);
  const bool s1_holds = !s1.counterexample;
  const bool r1_holds = !r1.counterexample;
  part1.status = s1_holds == r1_holds ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  part1.note = std::string("S1 ") + (s1_holds ? "holds" : "fails") + ", R1 " + (r1_holds ? "holds" : "fails");
  add_witness(part1, s1);
  add_witness(part1, r1);

  const auto s2 = add_summary(report, P::S2, ops);
  const bool s2_holds = !s2.counterexample;
  add_witness(part2, s2);
  bool r234_hold = true;
  std::string failing;
  for (auto p : {P::R2, P::R3, P::R4}) {
    const auto r = add_summary(report, p, ops);
    if (r.counterexample) {
      r234_hold = false;
      failing += (failing.empty() ? "" : ",") + std::string(to_string(p));
    }
    add_witness(part2, r);
  }
  part2.status = s2_holds == r234_hold ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  part2.note = std::string("S2 ") + (s2_holds ? "holds" : "fails") + ", R2-R4 " +
               (r234_hold ? "hold" : "fail (" + failing + ")");

  report.claims.push_back(std::move(part1));
  report.claims.push_back(std::move(part2));
  return report;
}

TheoremReport verify_corollary1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options) {
  using P = PostulateId;
  TheoremReport report = empty_report(ops, sig, options);
  ClaimEntry c = claim("corollary1", ops, "instances with !a not believed", {P::R1, P::R4, P::R9, P::S1, P::S2});

  const auto s1 = add_summary(report, P::S1, ops);
  const auto s2 = add_summary(report, P::S2, ops);
  if (s1.counterexample || s2.counterexample) {
    c.status = ClaimStatus::skipped;
    c.note = "precondition failed: S1 and S2 must hold";
    add_witness(c, s1);
    add_witness(c, s2);
    report.claims.push_back(std::move(c));
    return report;
  }

  std::uint64_t applicable = 0;
  std::uint64_t inapplicable = 0;
  for_each_instance(sig, 2, false, options, [&](const Instance& inst) {
    const WorldSet k = belief_set(inst.state);
    if (!k.intersects(inst.a)) {
      ++inapplicable;
      return true;
    }
    ++applicable;
    const std::vector<Step> revise_contract{{StepKind::revise, inst.a}, {StepKind::contract, inst.a}};
    const std::vector<Step> contract{{StepKind::contract, inst.a}};
    const WorldSet lhs = apply_sequence(ops, inst.state, revise_contract).back().belief_models();
    const WorldSet rhs = apply_sequence(ops, inst.state, contract).back().belief_models();
    if (lhs == rhs) return true;
    ++c.violations;
    if (c.witnesses.empty()) {
      // Name the inclusion that broke: R1 is one direction; R4 or R9 (by
      // whether a is believed) is the other.
      const P other = k.subset_of(inst.a) ? P::R4 : P::R9;
      for (auto p : {P::R1, other}) {
        Verdict v = check_instance(p, ops, inst);
        if (v.status == Status::fails) {
          c.witnesses.push_back(joint_witness(p, ops, inst, std::move(v)));
          break;
        }
      }
    }
    return true;
  });
  c.status = c.violations == 0 ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  c.note = std::to_string(applicable) + " applicable instances, " + std::to_string(inapplicable) +
           " skipped (!a believed), " + std::to_string(c.violations) + " violations";
  report.claims.push_back(std::move(c));
  return report;
}

TheoremReport verify_observation1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options) {
  using P = PostulateId;
  TheoremReport report = empty_report(ops, sig, options);
  std::vector<ClaimEntry> items{
      claim("observation1.1", ops, "R3 status", {P::R3}),
      claim("observation1.2", ops, "R2 => R9 per instance", {P::R2, P::R9}),
      claim("observation1.3", ops, "R1 => R5 per instance", {P::R1, P::R5}),
      claim("observation1.4", ops, "R6 <=> R3 as postulates", {P::R6, P::R3}),
      claim("observation1.5", ops, "R7 refuted", {P::R7}),
      claim("observation1.6", ops, "a not believed & R5 => R1 per instance", {P::R5, P::R1}),
      claim("observation1.7", ops, "R8 holds", {P::R8}),
  };
  if (skip_unless_agm(report, ops, items)) return report;

  const auto r3 = add_summary(report, P::R3, ops);
  const bool r3_holds = !r3.counterexample;
  // Recorded, not asserted: whether R3 holds depends on S2.
  items[0].status = ClaimStatus::consistent;
  items[0].note = std::string("recorded: R3 ") + (r3_holds ? "holds" : "fails");
  add_witness(items[0], r3);

  // Instance-level implications share one pass over the instances.
  struct Implication {
    ClaimEntry& entry;
    P premise;
    P conclusion;
    bool require_unbelieved;
  };
  std::vector<Implication> implications{
      {items[1], P::R2, P::R9, false},
      {items[2], P::R1, P::R5, false},
      {items[5], P::R5, P::R1, true},
  };
  for_each_instance(sig, 2, false, options, [&](const Instance& inst) {
    const bool believed = belief_set(inst.state).subset_of(inst.a);
    for (auto& imp : implications) {
      if (imp.require_unbelieved && believed) continue;
      if (check_instance(imp.premise, ops, inst).status != Status::holds) continue;
      Verdict v = check_instance(imp.conclusion, ops, inst);
      if (v.status != Status::fails) continue;
      ++imp.entry.violations;
      if (imp.entry.witnesses.empty()) imp.entry.witnesses.push_back(joint_witness(imp.conclusion, ops, inst, std::move(v)));
    }
    return true;
  });
  for (auto& imp : implications) {
    imp.entry.status = imp.entry.violations == 0 ? ClaimStatus::consistent : ClaimStatus::inconsistent;
    imp.entry.note = std::to_string(imp.entry.violations) + " violating instances";
  }

  const auto r6 = add_summary(report, P::R6, ops);
  const bool r6_holds = !r6.counterexample;
  items[3].status = r6_holds == r3_holds ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  items[3].note = std::string("R6 ") + (r6_holds ? "holds" : "fails") + ", R3 " + (r3_holds ? "holds" : "fails");
  add_witness(items[3], r6);

  const auto r7 = add_summary(report, P::R7, ops);
  items[4].status = r7.counterexample ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  items[4].note = r7.counterexample ? "R7 counterexample found" : "no R7 counterexample found";
  add_witness(items[4], r7);

  const auto r8 = add_summary(report, P::R8, ops);
  items[6].status = r8.counterexample ? ClaimStatus::inconsistent : ClaimStatus::consistent;
  items[6].note = r8.counterexample ? "R8 counterexample found" : "R8 holds";
  add_witness(items[6], r8);

  for (auto& item : items) report.claims.push_back(std::move(item));
  return report;
}

TheoremReport verify_hansson(const ContractionOperator& con, const Signature& sig, const SearchOptions& options) {
  using P = PostulateId;
  // Only contraction postulates are involved; the revision half is a filler.
  const OperatorPair ops{revision_operator("natural"), con};
  TheoremReport report = empty_report(ops, sig, options);
  ClaimEntry c = claim("hansson", ops, "PC1-PC5 & CORE => PC6", {P::PC1, P::PC2, P::PC3, P::PC4, P::PC5, P::CORE, P::PC6});
  bool antecedent = true;
  for (auto p : {P::PC1, P::PC2, P::PC3, P::PC4, P::PC5, P::CORE}) {
    const auto s = add_summary(report, p, ops);
    if (s.counterexample) {
      antecedent = false;
      add_witness(c, s);
    }
  }
  const auto recovery = add_summary(report, P::PC6, ops);
  add_witness(c, recovery);
  const bool recovers = !recovery.counterexample;
  c.status = !antecedent || recovers ? ClaimStatus::consistent : ClaimStatus::inconsistent;
  c.note = std::string(antecedent ? "antecedent holds" : "antecedent fails") + ", recovery " +
           (recovers ? "holds" : "fails");
  report.claims.push_back(std::move(c));
  return report;
}

// ---------------------------------------------------------------------------
// George

Signature george_signature() {
  static const Signature sig({"r", "g", "s"});
  return sig;
}

namespace {

RankedState table(std::initializer_list<std::pair<const char*, std::uint64_t>> rows) {
  const Signature sig = george_signature();
  std::map<Valuation, std::uint64_t> raw;
  for (const auto& [bits, rank] : rows) raw[sig.parse_valuation(bits)] = rank;
  return normalize(sig, raw);
}

}  // namespace

RankedState george_table(std::string_view label) {
  if (label == "Phi1") {
    return table({{"100", 0}, {"101", 0}, {"110", 0}, {"111", 0}, {"010", 1}, {"011", 1}, {"000", 2}, {"001", 2}});
  }
  if (label == "Phi2") {
    return table({{"000", 0}, {"100", 1}, {"101", 1}, {"110", 1}, {"111", 1}, {"010", 2}, {"011", 2}, {"001", 3}});
  }
  if (label == "Phi3") {
    // The source listing labels the 001 entry of this table as Phi2(001) = 3;
    // it belongs to Phi3, being the only valuation otherwise unranked.
    return table({{"010", 0}, {"011", 0}, {"000", 1}, {"100", 2}, {"101", 2}, {"110", 2}, {"111", 2}, {"001", 3}});
  }
  if (label == "Phi2'") {
    return table({{"000", 0}, {"100", 1}, {"101", 1}, {"110", 1}, {"111", 1}, {"010", 2}, {"011", 2}, {"001", 2}});
  }
  if (label == "Phi3'") {
    return table({{"010", 0}, {"011", 0}, {"001", 0}, {"000", 1}, {"100", 2}, {"101", 2}, {"110", 2}, {"111", 2}});
  }
  throw Error("unknown George table '" + std::string(label) + "'");
}

RankedState george_initial() { return george_table("Phi1"); }

bool GoldenTraceResult::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const GoldenStep& s) { return s.matches && s.s1 && s.s2; }) &&
         g_believed == g_expected && c2.status == c2_expected;
}

GoldenTraceResult run_george(std::string_view revision) {
  if (revision != "natural" && revision != "flatten") {
    throw UnknownOperatorError("george trace supports 'natural' and 'flatten', not '" + std::string(revision) + "'");
  }
  const bool natural = revision == "natural";
  const Signature sig = george_signature();
  const OperatorPair ops = operator_pair(revision, "natural-con");
  const WorldSet not_criminal = models(parse_formula("!(r | g | s)", sig), sig);
  const WorldSet dossier = models(parse_formula("!r & (g | s)", sig), sig);
  const RankedState initial = george_initial();
  const std::vector<Step> steps{{StepKind::revise, not_criminal}, {StepKind::revise, dossier}};
  const auto trace = apply_sequence(ops, initial, steps);

  GoldenTraceResult result;
  result.revision = std::string(revision);
  const std::vector<std::string> labels = natural ? std::vector<std::string>{"Phi2", "Phi3"}
                                                  : std::vector<std::string>{"Phi2'", "Phi3'"};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    GoldenStep step{labels[i], george_table(labels[i]), trace[i + 1], false, {}, false, false};
    if (step.actual.is_absurd()) {
      step.diff = "revision produced the absurd outcome\n";
    } else {
      step.matches = step.actual.state() == step.expected;
      step.diff = rank_table_diff(step.expected, step.actual.state());
      const Instance at{trace[i].state(), steps[i].input, std::nullopt};
      step.s1 = check_instance(PostulateId::S1, ops, at).status == Status::holds;
      step.s2 = check_instance(PostulateId::S2, ops, at).status == Status::holds;
    }
    result.steps.push_back(std::move(step));
  }
  result.g_expected = natural;
  const auto& last = trace.back();
  result.g_believed = !last.is_absurd() && believes(last.state(), parse_formula("g", sig));
  result.c2_expected = natural ? Status::holds : Status::fails;
  result.c2 = check_instance(PostulateId::C2, ops, Instance{initial, not_criminal, dossier});
  return result;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json ranks_json(const RankedState& s) {
  nlohmann::json out = nlohmann::json::object();
  for (std::uint32_t v = 0; v < s.ranks().size(); ++v) out[s.signature().bitstring(Valuation{v})] = s.ranks()[v];
  return out;
}

}  // namespace

nlohmann::json to_json(const ClaimEntry& c) {
  nlohmann::json j;
  j["claim"] = c.claim;
  j["operator_pair"] = {{"revision", c.revision}, {"contraction", c.contraction}};
  j["direction"] = c.direction;
  j["status"] = to_string(c.status);
  j["postulates"] = nlohmann::json::array();
  for (auto p : c.postulates) j["postulates"].push_back(to_string(p));
  j["violations"] = c.violations;
  j["note"] = c.note;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(to_json(w));
  return j;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j = report_header(r.revision, r.contraction, r.signature, r.options);
  j["results"] = nlohmann::json::array();
  for (const auto& s : r.results) j["results"].push_back(to_json(s));
  j["claims"] = nlohmann::json::array();
  for (const auto& c : r.claims) j["claims"].push_back(to_json(c));
  j["consistent"] = r.consistent();
  return j;
}

nlohmann::json to_json(const GoldenTraceResult& g) {
  const Signature sig = george_signature();
  nlohmann::json j;
  j["revision"] = g.revision;
  j["initial"] = ranks_json(george_initial());
  j["steps"] = nlohmann::json::array();
  for (const auto& s : g.steps) {
    nlohmann::json step;
    step["label"] = s.label;
    step["expected"] = ranks_json(s.expected);
    step["absurd"] = s.actual.is_absurd();
    if (!s.actual.is_absurd()) step["actual"] = ranks_json(s.actual.state());
    step["level0"] = s.actual.belief_models().bitstrings(sig);
    step["matches"] = s.matches;
    step["diff"] = s.diff;
    step["s1"] = s.s1;
    step["s2"] = s.s2;
    j["steps"].push_back(std::move(step));
  }
  j["believes_g"] = g.g_believed;
  j["expected_believes_g"] = g.g_expected;
  j["c2"] = {{"status", to_string(g.c2.status)}, {"expected", to_string(g.c2_expected)}};
  j["passed"] = g.passed();
  return j;
}

}  // namespace beliefrev
