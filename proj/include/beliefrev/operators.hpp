#pragma once

// Revision and contraction operators on ranked epistemic states.
//
// Built-in revision operators (all faithful: the new belief set is the set of
// minimal input worlds):
//   natural  - minimal input worlds drop to rank 0, everything else keeps its
//              relative order above them.
//   flatten  - three tiers: minimal input worlds, minimal non-input worlds,
//              everything else.
//   lex      - every input world below every non-input world, relative orders
//              preserved on both sides.
//   reverse  - like lex, but the non-input worlds have their order reversed.
//              Deliberately breaks the positional conditions on non-input
//              worlds.
// Built-in contraction operators:
//   natural-con - minimal non-input worlds join the belief level.
//   drastic     - a believed input empties the belief set entirely.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefrev/epistemic_state.hpp"

namespace beliefrev {

// Result of a revision: an epistemic state, or the absurd outcome produced by
// revising with an unsatisfiable input.
class RevisionOutcome {
 public:
  RevisionOutcome(RankedState state) : state_(std::move(state)) {}  // NOLINT: implicit by intent
  static RevisionOutcome absurd(const Signature& sig) { return RevisionOutcome(sig); }

  bool is_absurd() const noexcept { return !state_.has_value(); }
  // Precondition: !is_absurd().
  const RankedState& state() const { return *state_; }
  const Signature& signature() const { return state_ ? state_->signature() : *sig_; }

  // Models of the extracted knowledge base; empty for the absurd outcome.
  WorldSet belief_models() const;

  friend bool operator==(const RevisionOutcome&, const RevisionOutcome&) = default;

 private:
  explicit RevisionOutcome(const Signature& sig) : sig_(sig) {}

  std::optional<RankedState> state_;
  std::optional<Signature> sig_;
};

using RevisionFn = std::function<RevisionOutcome(const RankedState&, const WorldSet&)>;
using ContractionFn = std::function<RankedState(const RankedState&, const WorldSet&)>;

struct RevisionOperator {
  std::string name;
  RevisionFn transform;

  RevisionOutcome operator()(const RankedState& s, const WorldSet& a) const { return transform(s, a); }
};

struct ContractionOperator {
  std::string name;
  ContractionFn transform;

  RankedState operator()(const RankedState& s, const WorldSet& a) const { return transform(s, a); }
};

struct OperatorPair {
  RevisionOperator revision;
  ContractionOperator contraction;
};

RevisionOutcome natural_revision(const RankedState& s, const WorldSet& a);
RevisionOutcome flatten_revision(const RankedState& s, const WorldSet& a);
RevisionOutcome lex_revision(const RankedState& s, const WorldSet& a);
RevisionOutcome reverse_revision(const RankedState& s, const WorldSet& a);

RankedState natural_contraction(const RankedState& s, const WorldSet& a);
RankedState drastic_withdrawal(const RankedState& s, const WorldSet& a);

std::span<const std::string_view> revision_operator_names();
std::span<const std::string_view> contraction_operator_names();

// Throws UnknownOperatorError.
RevisionOperator revision_operator(std::string_view name);
ContractionOperator contraction_operator(std::string_view name);
OperatorPair operator_pair(std::string_view revision, std::string_view contraction);

enum class StepKind { revise, contract };

struct Step {
  StepKind kind;
  WorldSet input;
};

// Parses "revise:FORMULA; contract:FORMULA; ..." into steps over sig.
std::vector<Step> parse_steps(std::string_view text, const Signature& sig);

// Trace of outcomes starting with s itself. Revising the absurd outcome by a
// satisfiable input revises the uniform state instead; contracting it throws
// UnsupportedSequenceError.
std::vector<RevisionOutcome> apply_sequence(const OperatorPair& ops, const RankedState& s,
                                            std::span<const Step> steps);

}  // namespace beliefrev
