#include "beliefrev/operators.hpp"

#include <array>

namespace beliefrev {

WorldSet RevisionOutcome::belief_models() const {
  if (state_) return belief_set(*state_);
  return WorldSet::empty(sig_->size());
}

namespace {

void check_input(const RankedState& s, const WorldSet& a) {
  if (a.width() != s.width()) throw SignatureError("signature mismatch between state and input");
}

// Builds a state from raw ranks; normalize() does the compaction.
template <typename RankOf>
RankedState rerank(const RankedState& s, RankOf&& rank_of) {
  std::vector<std::uint64_t> raw(s.ranks().size());
  for (std::uint32_t v = 0; v < raw.size(); ++v) raw[v] = rank_of(Valuation{v});
  return normalize(s.signature(), raw);
}

}  // namespace

RevisionOutcome natural_revision(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  if (a.empty()) return RevisionOutcome::absurd(s.signature());
  const WorldSet bottom = min_worlds(s, a);
  return rerank(s, [&](Valuation v) -> std::uint64_t { return bottom.contains(v) ? 0 : s.rank(v) + 1; });
}

RevisionOutcome flatten_revision(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  if (a.empty()) return RevisionOutcome::absurd(s.signature());
  const WorldSet tier0 = min_worlds(s, a);
  const WorldSet tier1 = min_worlds(s, a.complement());
  return rerank(s, [&](Valuation v) -> std::uint64_t {
    if (tier0.contains(v)) return 0;
    if (tier1.contains(v)) return 1;
    return 2;
  });
}

RevisionOutcome lex_revision(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  if (a.empty()) return RevisionOutcome::absurd(s.signature());
  const std::uint64_t offset = s.level_count();
  return rerank(s, [&](Valuation v) -> std::uint64_t { return a.contains(v) ? s.rank(v) : offset + s.rank(v); });
}

RevisionOutcome reverse_revision(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  if (a.empty()) return RevisionOutcome::absurd(s.signature());
  const std::uint64_t top = s.level_count() - 1;
  return rerank(s, [&](Valuation v) -> std::uint64_t {
    return a.contains(v) ? s.rank(v) : top + 1 + (top - s.rank(v));
  });
}

RankedState natural_contraction(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  const WorldSet k = belief_set(s);
  if (!k.subset_of(a) || a.is_full()) return s;
  const WorldSet bottom = k | min_worlds(s, a.complement());
  return rerank(s, [&](Valuation v) -> std::uint64_t { return bottom.contains(v) ? 0 : s.rank(v) + 1; });
}

RankedState drastic_withdrawal(const RankedState& s, const WorldSet& a) {
  check_input(s, a);
  if (!belief_set(s).subset_of(a)) return s;
  return RankedState::uniform(s.signature());
}

namespace {

constexpr std::array<std::string_view, 4> kRevisionNames{"natural", "flatten", "lex", "reverse"};
constexpr std::array<std::string_view, 2> kContractionNames{"natural-con", "drastic"};

}  // namespace

std::span<const std::string_view> revision_operator_names() { return kRevisionNames; }
std::span<const std::string_view> contraction_operator_names() { return kContractionNames; }

RevisionOperator revision_operator(std::string_view name) {
  if (name == "natural") return {"natural", natural_revision};
  if (name == "flatten") return {"flatten", flatten_revision};
  if (name == "lex") return {"lex", lex_revision};
  if (name == "reverse") return {"reverse", reverse_revision};
  throw UnknownOperatorError("unknown revision operator '" + std::string(name) + "'");
}

ContractionOperator contraction_operator(std::string_view name) {
  if (name == "natural-con") return {"natural-con", natural_contraction};
  if (name == "drastic") return {"drastic", drastic_withdrawal};
  throw UnknownOperatorError("unknown contraction operator '" + std::string(name) + "'");
}

OperatorPair operator_pair(std::string_view revision, std::string_view contraction) {
  return {revision_operator(revision), contraction_operator(contraction)};
}

std::vector<Step> parse_steps(std::string_view text, const Signature& sig) {
  std::vector<Step> steps;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    const auto first = item.find_first_not_of(" \t\n");
    if (first == std::string_view::npos) continue;
    item = item.substr(first);
    StepKind kind;
    std::string_view body;
    if (item.starts_with("revise:")) {
      kind = StepKind::revise;
      body = item.substr(7);
    } else if (item.starts_with("contract:")) {
      kind = StepKind::contract;
      body = item.substr(9);
    } else {
      throw FormatError("step '" + std::string(item) + "' must start with 'revise:' or 'contract:'");
    }
    steps.push_back({kind, models(parse_formula(body, sig), sig)});
  }
  return steps;
}

std::vector<RevisionOutcome> apply_sequence(const OperatorPair& ops, const RankedState& s,
                                            std::span<const Step> steps) {
  std::vector<RevisionOutcome> trace;
  trace.reserve(steps.size() + 1);
  trace.emplace_back(s);
  for (const auto& step : steps) {
    const RevisionOutcome& current = trace.back();
    if (step.kind == StepKind::revise) {
      if (current.is_absurd()) {
        if (step.input.empty()) {
          trace.push_back(RevisionOutcome::absurd(current.signature()));
        } else {
          trace.push_back(ops.revision(RankedState::uniform(current.signature()), step.input));
        }
      } else {
        trace.push_back(ops.revision(current.state(), step.input));
      }
    } else {
      if (current.is_absurd()) {
        throw UnsupportedSequenceError("cannot contract the absurd outcome of revising by falsum");
      }
      trace.emplace_back(ops.contraction(current.state(), step.input));
    }
  }
  return trace;
}

}  // namespace beliefrev
