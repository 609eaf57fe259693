#pragma once

// Empirical checks of the representation results connecting the recovery
// postulates with the positional conditions S1/S2, plus the George example
// golden trace. Every check is model checking at enumeration scale; a claim
// is reported as consistent with the theorem, never as proved.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefrev/postulates.hpp"

namespace beliefrev {

enum class ClaimStatus { consistent, inconsistent, skipped };

std::string_view to_string(ClaimStatus s);

struct ClaimEntry {
  std::string claim;
  std::string revision;
  std::string contraction;
  // "both" when both directions of a biconditional were checked.
  std::string direction;
  ClaimStatus status = ClaimStatus::consistent;
  std::vector<PostulateId> postulates;
  std::vector<Counterexample> witnesses;
  // Instances that contradicted an instance-level claim.
  std::uint64_t violations = 0;
  std::string note;
};

struct TheoremReport {
  std::string revision;
  std::string contraction;
  Signature signature;
  SearchOptions options;
  std::vector<PostulateSummary> results;
  std::vector<ClaimEntry> claims;

  bool consistent() const;
};

nlohmann::json to_json(const ClaimEntry& c);
nlohmann::json to_json(const TheoremReport& r);

// Checks PC1-PC8 and PR1-PR8; returns the first counterexample, if any.
std::optional<Counterexample> agm_precondition(const OperatorPair& ops, const Signature& sig,
                                               const SearchOptions& options);

// R1 <-> S1 and (R2 & R3 & R4) <-> S2.
TheoremReport verify_theorem1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options);
// K(Phi*a-a) = K(Phi-a) whenever !a is not believed. Requires S1 and S2.
TheoremReport verify_corollary1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options);
// The seven relationships among R1-R9 and the AGM postulates.
TheoremReport verify_observation1(const OperatorPair& ops, const Signature& sig, const SearchOptions& options);
// PC1-PC5 with core-retainment imply recovery.
TheoremReport verify_hansson(const ContractionOperator& con, const Signature& sig, const SearchOptions& options);

// George example over atoms r, g, s.
Signature george_signature();
RankedState george_initial();
struct GoldenStep {
  std::string label;
  RankedState expected;
  RevisionOutcome actual;
  bool matches = false;
  std::string diff;
  // S1 and S2 at the revision producing this step.
  bool s1 = false;
  bool s2 = false;
};

struct GoldenTraceResult {
  std::string revision;
  std::vector<GoldenStep> steps;
  bool g_expected = false;
  bool g_believed = false;
  Status c2_expected = Status::holds;
  Verdict c2;

  bool passed() const;
};

// revision is "natural" (expects Phi2, Phi3) or "flatten" (expects Phi2',
// Phi3'). Throws UnknownOperatorError otherwise.
GoldenTraceResult run_george(std::string_view revision);
// Expected tables, labelled "Phi1", "Phi2", "Phi3", "Phi2'", "Phi3'".
RankedState george_table(std::string_view label);

nlohmann::json to_json(const GoldenTraceResult& g);

}  // namespace beliefrev
