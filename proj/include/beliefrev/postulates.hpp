#pragma once

// Postulates of iterated belief change as decidable predicates on concrete
// instances, and exhaustive or sampled counterexample search.
//
// All checks work on model sets. A theory inclusion K1 ⊆ K2 is decided as
// M(K2) ⊆ M(K1); "alpha ∈ K" is M(K) ⊆ M(alpha).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefrev/operators.hpp"

namespace beliefrev {

enum class PostulateId {
  // Contraction (PC6 is recovery).
  PC1, PC2, PC3, PC4, PC5, PC6, PC7, PC8,
  // Revision.
  PR1, PR2, PR3, PR4, PR5, PR6, PR7, PR8,
  // Recovery-like postulates on revise-then-contract sequences.
  R1, R2, R3, R4, R5, R6, R7, R8, R9,
  // Positional conditions on the minimal non-input worlds.
  S1, S2,
  // Iterated revision; instance.a is the first input (mu), instance.b the
  // second (alpha).
  C1, C2, C3, C4,
  // Core-retainment.
  CORE,
};

std::string_view to_string(PostulateId p);
std::optional<PostulateId> parse_postulate(std::string_view name);
std::span<const PostulateId> all_postulates();
// 2 for (state, a); 3 for (state, a, b).
int arity(PostulateId p);

std::vector<PostulateId> contraction_postulates();  // PC1..PC8
std::vector<PostulateId> revision_postulates();     // PR1..PR8

struct Instance {
  RankedState state;
  WorldSet a;
  std::optional<WorldSet> b;
};

enum class Status { holds, fails, vacuous };

std::string_view to_string(Status s);

struct TraceEntry {
  std::string label;
  RevisionOutcome outcome;
};

struct Verdict {
  Status status;
  // Intermediate states and belief sets; always filled for failures.
  std::vector<TraceEntry> witness;
  // Extra witness data that is not a state, e.g. the sentence lost by a
  // core-retainment failure.
  std::string detail;
};

struct Counterexample {
  PostulateId postulate;
  std::string revision;
  std::string contraction;
  Instance instance;
  std::vector<TraceEntry> trace;
  std::string detail;
};

// Throws ArityError when the instance shape does not match the postulate and
// UnsupportedSequenceError when a sequence would contract the absurd outcome.
Verdict check_instance(PostulateId p, const OperatorPair& ops, const Instance& inst);

enum class SearchMode { exhaustive, sample };

std::string_view to_string(SearchMode m);

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  unsigned jobs = 1;
  // Exhaustive search at three atoms multiplies 545835 states by every
  // input, so it has to be requested explicitly.
  bool allow_large = false;
  // Random inputs drawn per sampled state in sample mode above two atoms.
  // Exhaustive mode and two-atom samples enumerate every input.
  std::uint64_t inputs_per_state = 32;
};

// Calls visit for every instance of the given arity in search order: states
// in stream order, then first input, then second input, inputs in numeric
// mask order. Stops when visit returns false. include_empty admits falsum as
// an input.
void for_each_instance(const Signature& sig, int arity, bool include_empty, const SearchOptions& options,
                       const std::function<bool(const Instance&)>& visit);

std::optional<Counterexample> search_counterexample(PostulateId p, const OperatorPair& ops, const Signature& sig,
                                                    const SearchOptions& options);

struct PostulateSummary {
  PostulateId postulate;
  std::uint64_t checked = 0;
  std::uint64_t holds = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t fails = 0;
  std::optional<Counterexample> counterexample;
};

struct SuiteReport {
  std::string revision;
  std::string contraction;
  Signature signature;
  SearchOptions options;
  std::vector<PostulateSummary> results;

  bool has_counterexample() const;
};

// Full scan per postulate: counts every verdict and keeps the first failure.
PostulateSummary summarize(PostulateId p, const OperatorPair& ops, const Signature& sig,
                           const SearchOptions& options);

SuiteReport run_suite(const OperatorPair& ops, const Signature& sig, std::span<const PostulateId> postulates,
                      const SearchOptions& options);

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const PostulateSummary& s);
nlohmann::json to_json(const SuiteReport& r);
// Common header fields shared by suite and theorem reports.
nlohmann::json report_header(std::string_view revision, std::string_view contraction, const Signature& sig,
                             const SearchOptions& options);

// Rebuilds the instance recorded in a serialized counterexample.
Instance instance_from_json(const nlohmann::json& counterexample);

}  // namespace beliefrev
