#include "beliefrev/postulates.hpp"

#include <array>
#include <exception>
#include <random>
#include <thread>

namespace beliefrev {

namespace {

constexpr std::array<PostulateId, 32> kAll{
    PostulateId::PC1, PostulateId::PC2, PostulateId::PC3, PostulateId::PC4, PostulateId::PC5, PostulateId::PC6,
    PostulateId::PC7, PostulateId::PC8, PostulateId::PR1, PostulateId::PR2, PostulateId::PR3, PostulateId::PR4,
    PostulateId::PR5, PostulateId::PR6, PostulateId::PR7, PostulateId::PR8, PostulateId::R1,  PostulateId::R2,
    PostulateId::R3,  PostulateId::R4,  PostulateId::R5,  PostulateId::R6,  PostulateId::R7,  PostulateId::R8,
    PostulateId::R9,  PostulateId::S1,  PostulateId::S2,  PostulateId::C1,  PostulateId::C2,  PostulateId::C3,
    PostulateId::C4,  PostulateId::CORE,
};

constexpr std::array<std::string_view, 32> kNames{
    "PC1", "PC2", "PC3", "PC4", "PC5", "PC6", "PC7", "PC8", "PR1", "PR2", "PR3",
    "PR4", "PR5", "PR6", "PR7", "PR8", "R1",  "R2",  "R3",  "R4",  "R5",  "R6",
    "R7",  "R8",  "R9",  "S1",  "S2",  "C1",  "C2",  "C3",  "C4",  "CORE",
};

}  // namespace

std::string_view to_string(PostulateId p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<PostulateId> parse_postulate(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  return std::nullopt;
}

std::span<const PostulateId> all_postulates() { return kAll; }

int arity(PostulateId p) {
  switch (p) {
    case PostulateId::PC7:
    case PostulateId::PC8:
    case PostulateId::PR7:
    case PostulateId::PR8:
    case PostulateId::C1:
    case PostulateId::C2:
    case PostulateId::C3:
    case PostulateId::C4: return 3;
    default: return 2;
  }
}

std::vector<PostulateId> contraction_postulates() { return {kAll.begin(), kAll.begin() + 8}; }
std::vector<PostulateId> revision_postulates() { return {kAll.begin() + 8, kAll.begin() + 16}; }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

std::string_view to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sample"; }

// ---------------------------------------------------------------------------
// Instance checks

namespace {

// Theory of mx is contained in theory of my (given as model sets).
bool theory_within(const WorldSet& mx, const WorldSet& my) { return my.subset_of(mx); }

// A fresh world set equal to a, rebuilt through its normal form where that is
// cheap, so that extensionality is checked against a distinct representation.
WorldSet equivalent_input(const WorldSet& a, const Signature& sig) {
  if (sig.size() <= 4) return models(dnf_of(a, sig), sig);
  WorldSet copy = WorldSet::empty(a.width());
  a.for_each([&](Valuation v) { copy.insert(v); });
  return copy;
}

bool well_formed(const RankedState& s) {
  std::vector<std::uint64_t> raw(s.ranks().begin(), s.ranks().end());
  return normalize(s.signature(), raw) == s && !belief_set(s).empty();
}

// Core-retainment, decided by enumerating candidate sentences (as model sets
// containing M(K)) and candidate subtheories K' ⊆ K (as model sets T ⊇ M(K)).
std::optional<WorldSet> core_retainment_violation(const WorldSet& k, const WorldSet& a, const WorldSet& contracted) {
  if (k.width() > kMaxEnumerationAtoms) {
    throw SignatureError("core-retainment is decided by enumeration and supports at most 3 atoms");
  }
  const std::size_t universe = k.universe_size();
  const WorldSet::Word all = universe == 64 ? ~WorldSet::Word{0} : (WorldSet::Word{1} << universe) - 1;
  const WorldSet::Word km = k.mask();
  const WorldSet::Word am = a.mask();
  const WorldSet::Word cm = contracted.mask();
  const WorldSet::Word free = all & ~km;
  // Iterate every subset of the free worlds, including the empty one.
  for (WorldSet::Word bs = free;; bs = (bs - 1) & free) {
    const WorldSet::Word beta = km | bs;
    const bool lost = (cm & ~beta) != 0;
    if (lost) {
      bool supported = false;
      for (WorldSet::Word ts = free;; ts = (ts - 1) & free) {
        const WorldSet::Word t = km | ts;
        // alpha not entailed by K', but entailed by K' plus beta.
        if ((t & ~am) != 0 && (t & beta & ~am) == 0) {
          supported = true;
          break;
        }
        if (ts == 0) break;
      }
      if (!supported) return WorldSet::from_mask(k.width(), beta);
    }
    if (bs == 0) break;
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const OperatorPair& ops, const Instance& inst)
      : ops_(ops), inst_(inst), s_(inst.state), a_(inst.a), k_(belief_set(inst.state)) {
    verdict_.witness.push_back({"Phi", s_});
  }

  Verdict run(PostulateId p);

 private:
  const WorldSet& b() const { return *inst_.b; }
  WorldSet not_a() const { return a_.complement(); }

  Verdict done(bool ok) {
    verdict_.status = ok ? Status::holds : Status::fails;
    return std::move(verdict_);
  }
  Verdict vacuous() {
    verdict_.status = Status::vacuous;
    return std::move(verdict_);
  }

  const RevisionOutcome& record(std::string label, RevisionOutcome outcome) {
    verdict_.witness.push_back({std::move(label), std::move(outcome)});
    return verdict_.witness.back().outcome;
  }

  // Belief models after a contraction of the initial state.
  WorldSet contracted(const std::string& label, const WorldSet& input) {
    return record(label, ops_.contraction(s_, input)).belief_models();
  }
  WorldSet revised(const std::string& label, const WorldSet& input) {
    return record(label, ops_.revision(s_, input)).belief_models();
  }

  // Runs a sequence from the initial state and records every step after the
  // first; returns the belief models of the final outcome.
  WorldSet sequence(std::initializer_list<std::pair<const char*, Step>> steps) {
    std::vector<Step> plain;
    for (const auto& [label, step] : steps) plain.push_back(step);
    auto trace = apply_sequence(ops_, s_, plain);
    std::size_t i = 1;
    for (const auto& [label, step] : steps) record(label, std::move(trace[i++]));
    return verdict_.witness.back().outcome.belief_models();
  }

  Step rev(const WorldSet& w) const { return {StepKind::revise, w}; }
  Step con(const WorldSet& w) const { return {StepKind::contract, w}; }

  bool believed(const WorldSet& w) const { return k_.subset_of(w); }

  const OperatorPair& ops_;
  const Instance& inst_;
  const RankedState& s_;
  const WorldSet& a_;
  const WorldSet k_;
  Verdict verdict_{Status::holds, {}, {}};
};

Verdict Checker::run(PostulateId p) {
  using P = PostulateId;
  const Signature& sig = s_.signature();
  switch (p) {
    // -- contraction ------------------------------------------------------
    case P::PC1: {
      const auto& out = record("Phi-a", ops_.contraction(s_, a_));
      return done(well_formed(out.state()));
    }
    case P::PC2: return done(theory_within(contracted("Phi-a", a_), k_));
    case P::PC3:
      if (believed(a_)) return vacuous();
      return done(contracted("Phi-a", a_) == k_);
    case P::PC4:
      if (a_.is_full()) return vacuous();
      return done(!contracted("Phi-a", a_).subset_of(a_));
    case P::PC5: {
      const RevisionOutcome first = record("Phi-a", ops_.contraction(s_, a_));
      const auto& second = record("Phi-a'", ops_.contraction(s_, equivalent_input(a_, sig)));
      return done(first.state() == second.state());
    }
    case P::PC6:
      if (!believed(a_)) return vacuous();
      return done(theory_within(k_, expand(contracted("Phi-a", a_), a_)));
    case P::PC7: {
      const WorldSet ka = contracted("Phi-a", a_);
      const WorldSet kb = contracted("Phi-b", b());
      const WorldSet kab = contracted("Phi-(a&b)", a_ & b());
      // K(Phi-a) ∩ K(Phi-b) has models M(K(Phi-a)) ∪ M(K(Phi-b)).
      return done(theory_within(ka | kb, kab));
    }
    case P::PC8: {
      const WorldSet kab = contracted("Phi-(a&b)", a_ & b());
      if (kab.subset_of(b())) return vacuous();
      return done(theory_within(kab, contracted("Phi-b", b())));
    }
    // -- revision ---------------------------------------------------------
    case P::PR1: {
      const auto& out = record("Phi*a", ops_.revision(s_, a_));
      return done(out.is_absurd() || well_formed(out.state()));
    }
    case P::PR2: return done(revised("Phi*a", a_).subset_of(a_));
    case P::PR3: return done(theory_within(revised("Phi*a", a_), expand(k_, a_)));
    case P::PR4:
      if (!k_.intersects(a_)) return vacuous();
      return done(theory_within(expand(k_, a_), revised("Phi*a", a_)));
    case P::PR5: {
      const RevisionOutcome first = record("Phi*a", ops_.revision(s_, a_));
      const auto& second = record("Phi*a'", ops_.revision(s_, equivalent_input(a_, sig)));
      return done(first == second);
    }
    case P::PR6: {
      const auto& out = record("Phi*a", ops_.revision(s_, a_));
      return done(out.is_absurd() == a_.empty());
    }
    case P::PR7: {
      const WorldSet kab = revised("Phi*(a&b)", a_ & b());
      const WorldSet ka = revised("Phi*a", a_);
      return done(theory_within(kab, expand(ka, b())));
    }
    case P::PR8: {
      const WorldSet ka = revised("Phi*a", a_);
      if (!ka.intersects(b())) return vacuous();
      return done(theory_within(expand(ka, b()), revised("Phi*(a&b)", a_ & b())));
    }
    // -- recovery-like postulates -----------------------------------------
    case P::R1: {
      const WorldSet lhs = sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}});
      const WorldSet rhs = sequence({{"Phi-a", con(a_)}});
      return done(theory_within(lhs, rhs));
    }
    case P::R2:
      if (believed(a_) || believed(not_a())) return vacuous();
      return done(theory_within(k_, sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}})));
    case P::R3:
      if (believed(a_)) return vacuous();
      return done(theory_within(k_, sequence({{"Phi*a", rev(a_)}, {"Phi*a*!a", rev(not_a())}})));
    case P::R4: {
      if (!believed(a_)) return vacuous();
      const WorldSet rhs = sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}});
      const WorldSet lhs = sequence({{"Phi-a", con(a_)}});
      return done(theory_within(lhs, rhs));
    }
    case P::R5: return done(theory_within(sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}}), k_));
    case P::R6:
      if (believed(a_)) return vacuous();
      return done(theory_within(
          k_, sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}, {"Phi*a-a*!a", rev(not_a())}})));
    case P::R7:
      if (!believed(not_a())) return vacuous();
      return done(theory_within(k_, sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}})));
    case P::R8:
      if (!believed(a_)) return vacuous();
      return done(
          theory_within(k_, sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}, {"Phi*a-a*a", rev(a_)}})));
    case P::R9: {
      if (believed(a_) || believed(not_a())) return vacuous();
      const WorldSet lhs = sequence({{"Phi-a", con(a_)}});
      const WorldSet rhs = sequence({{"Phi*a", rev(a_)}, {"Phi*a-a", con(a_)}});
      return done(theory_within(lhs, rhs));
    }
    // -- positional conditions --------------------------------------------
    case P::S1:
    case P::S2: {
      const auto& out = record("Phi*a", ops_.revision(s_, a_));
      const WorldSet before = min_worlds(s_, not_a());
      const WorldSet after = out.is_absurd() ? WorldSet::empty(a_.width()) : min_worlds(out.state(), not_a());
      return done(p == P::S1 ? before.subset_of(after) : after.subset_of(before));
    }
    // -- iterated revision ------------------------------------------------
    case P::C1:
    case P::C2:
    case P::C3:
    case P::C4: {
      const WorldSet& mu = a_;
      const WorldSet& alpha = b();
      if (p == P::C1 && !alpha.subset_of(mu)) return vacuous();
      if (p == P::C2 && alpha.intersects(mu)) return vacuous();
      const WorldSet once = sequence({{"Phi*alpha", rev(alpha)}});
      if (p == P::C3 && !once.subset_of(mu)) return vacuous();
      if (p == P::C4 && !once.intersects(mu)) return vacuous();
      const WorldSet twice = sequence({{"Phi*mu", rev(mu)}, {"Phi*mu*alpha", rev(alpha)}});
      if (p == P::C1 || p == P::C2) return done(twice == once);
      if (p == P::C3) return done(twice.subset_of(mu));
      return done(twice.intersects(mu));
    }
    case P::CORE: {
      const WorldSet kc = contracted("Phi-a", a_);
      const auto lost = core_retainment_violation(k_, a_, kc);
      if (lost) verdict_.detail = "sentence with models " + lost->to_string(sig) + " lost without support";
      return done(!lost);
    }
  }
  return done(true);
}

}  // namespace

Verdict check_instance(PostulateId p, const OperatorPair& ops, const Instance& inst) {
  const bool wants_b = arity(p) == 3;
  if (wants_b != inst.b.has_value()) {
    throw ArityError(std::string(to_string(p)) + " takes " + (wants_b ? "two inputs" : "one input"));
  }
  if (inst.a.width() != inst.state.width() || (inst.b && inst.b->width() != inst.state.width())) {
    throw SignatureError("signature mismatch between state and inputs");
  }
  return Checker(ops, inst).run(p);
}

// ---------------------------------------------------------------------------
// Instance spaces

namespace {

class InstanceSpace {
 public:
  InstanceSpace(const Signature& sig, int arity, bool include_empty, const SearchOptions& options)
      : sig_(sig), arity_(arity), include_empty_(include_empty), options_(options) {
    if (options.mode == SearchMode::exhaustive) {
      if (sig.size() > kMaxEnumerationAtoms) {
        throw SignatureError("exhaustive search supports at most 3 atoms, got " + std::to_string(sig.size()));
      }
      if (sig.size() == kMaxEnumerationAtoms && !options.allow_large) {
        throw SignatureError("exhaustive search over 3 atoms must be enabled explicitly");
      }
    }
    const bool enumerate_inputs =
        sig.size() <= 2 || (options.mode == SearchMode::exhaustive && sig.size() <= kMaxEnumerationAtoms);
    if (enumerate_inputs) {
      const WorldSet::Word count = WorldSet::Word{1} << sig.world_count();
      for (WorldSet::Word m = include_empty ? 0 : 1; m < count; ++m) {
        fixed_.push_back(WorldSet::from_mask(sig.size(), m));
      }
    }
  }

  StateStream stream() const {
    if (options_.mode == SearchMode::exhaustive) return enumerate_states(sig_);
    return sample_states(sig_, options_.samples, options_.seed);
  }

  // Visits the instances built on one state; false from fn stops early.
  template <typename Fn>
  bool visit_state(const RankedState& s, std::uint64_t index, Fn&& fn) const {
    if (!fixed_.empty()) {
      for (const auto& a : fixed_) {
        if (arity_ == 2) {
          if (!fn(Instance{s, a, std::nullopt})) return false;
          continue;
        }
        for (const auto& b : fixed_) {
          if (!fn(Instance{s, a, b})) return false;
        }
      }
      return true;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(options_.seed), static_cast<std::uint32_t>(options_.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x1b9u};
    std::mt19937_64 gen(seq);
    for (std::uint64_t i = 0; i < options_.inputs_per_state; ++i) {
      WorldSet a = random_input(gen);
      if (arity_ == 2) {
        if (!fn(Instance{s, std::move(a), std::nullopt})) return false;
      } else {
        WorldSet b = random_input(gen);
        if (!fn(Instance{s, std::move(a), std::move(b)})) return false;
      }
    }
    return true;
  }

 private:
  WorldSet random_input(std::mt19937_64& gen) const {
    for (;;) {
      WorldSet w = WorldSet::empty(sig_.size());
      for (std::uint32_t v = 0; v < sig_.world_count(); v += 64) {
        const auto bits = gen();
        for (std::uint32_t j = 0; j < 64 && v + j < sig_.world_count(); ++j) {
          if ((bits >> j) & 1u) w.insert(Valuation{v + j});
        }
      }
      if (include_empty_ || !w.empty()) return w;
    }
  }

  Signature sig_;
  int arity_;
  bool include_empty_;
  SearchOptions options_;
  std::vector<WorldSet> fixed_;
};

bool admits_falsum(PostulateId p) { return p == PostulateId::PR6; }

Counterexample make_counterexample(PostulateId p, const OperatorPair& ops, const Instance& inst, Verdict v) {
  return {p, ops.revision.name, ops.contraction.name, inst, std::move(v.witness), std::move(v.detail)};
}

struct ScanResult {
  std::uint64_t checked = 0, holds = 0, vacuous = 0, fails = 0;
  std::optional<Counterexample> first;
};

ScanResult scan_states(PostulateId p, const OperatorPair& ops, const InstanceSpace& space,
                       std::span<const RankedState> states, std::uint64_t first_index, bool stop_at_first) {
  ScanResult r;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const bool more = space.visit_state(states[i], first_index + i, [&](const Instance& inst) {
      Verdict v = check_instance(p, ops, inst);
      ++r.checked;
      switch (v.status) {
        case Status::holds: ++r.holds; break;
        case Status::vacuous: ++r.vacuous; break;
        case Status::fails:
          ++r.fails;
          if (!r.first) r.first = make_counterexample(p, ops, inst, std::move(v));
          if (stop_at_first) return false;
          break;
      }
      return true;
    });
    if (!more) break;
  }
  return r;
}

// Walks the state stream in chunks; each chunk is split into contiguous
// slices for the workers, and results are merged in slice order so the first
// counterexample is the first in iteration order whatever the job count.
ScanResult scan(PostulateId p, const OperatorPair& ops, const Signature& sig, const SearchOptions& options,
                bool stop_at_first) {
  const InstanceSpace space(sig, arity(p), admits_falsum(p), options);
  StateStream stream = space.stream();
  const unsigned jobs = std::max(1u, options.jobs);
  const std::size_t chunk_size = jobs == 1 ? 1024 : 256 * jobs;
  ScanResult total;
  std::vector<RankedState> chunk;
  for (;;) {
    chunk.clear();
    const std::uint64_t base = stream.position();
    if (stream.next_chunk(chunk_size, chunk) == 0) break;
    std::vector<ScanResult> parts;
    if (jobs == 1 || chunk.size() < 2) {
      parts.push_back(scan_states(p, ops, space, chunk, base, stop_at_first));
    } else {
      const std::size_t workers = std::min<std::size_t>(jobs, chunk.size());
      parts.resize(workers);
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> threads;
      const std::size_t per = (chunk.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(chunk.size(), w * per);
        const std::size_t hi = std::min(chunk.size(), lo + per);
        threads.emplace_back([&, w, lo, hi] {
          try {
            parts[w] = scan_states(p, ops, space, std::span<const RankedState>(chunk).subspan(lo, hi - lo),
                                   base + lo, stop_at_first);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& part : parts) {
      total.checked += part.checked;
      total.holds += part.holds;
      total.vacuous += part.vacuous;
      total.fails += part.fails;
      if (!total.first && part.first) total.first = std::move(part.first);
    }
    if (stop_at_first && total.first) break;
  }
  return total;
}

}  // namespace

void for_each_instance(const Signature& sig, int arity, bool include_empty, const SearchOptions& options,
                       const std::function<bool(const Instance&)>& visit) {
  const InstanceSpace space(sig, arity, include_empty, options);
  StateStream stream = space.stream();
  for (;;) {
    const std::uint64_t index = stream.position();
    auto s = stream.next();
    if (!s) return;
    if (!space.visit_state(*s, index, visit)) return;
  }
}

std::optional<Counterexample> search_counterexample(PostulateId p, const OperatorPair& ops, const Signature& sig,
                                                    const SearchOptions& options) {
  return scan(p, ops, sig, options, true).first;
}

PostulateSummary summarize(PostulateId p, const OperatorPair& ops, const Signature& sig,
                           const SearchOptions& options) {
  ScanResult r = scan(p, ops, sig, options, false);
  return {p, r.checked, r.holds, r.vacuous, r.fails, std::move(r.first)};
}

bool SuiteReport::has_counterexample() const {
  return std::any_of(results.begin(), results.end(), [](const auto& r) { return r.counterexample.has_value(); });
}

SuiteReport run_suite(const OperatorPair& ops, const Signature& sig, std::span<const PostulateId> postulates,
                      const SearchOptions& options) {
  SuiteReport report{ops.revision.name, ops.contraction.name, sig, options, {}};
  for (auto p : postulates) report.results.push_back(summarize(p, ops, sig, options));
  return report;
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

nlohmann::json report_header(std::string_view revision, std::string_view contraction, const Signature& sig,
                             const SearchOptions& options) {
  nlohmann::json j;
  j["operator_pair"] = {{"revision", revision}, {"contraction", contraction}};
  j["signature"] = sig.atoms();
  j["mode"] = to_string(options.mode);
  j["seed"] = options.seed;
  if (options.mode == SearchMode::sample) j["samples"] = options.samples;
  return j;
}

nlohmann::json to_json(const Counterexample& c) {
  const Signature& sig = c.instance.state.signature();
  nlohmann::json j;
  j["postulate"] = to_string(c.postulate);
  j["revision"] = c.revision;
  j["contraction"] = c.contraction;
  j["state"] = format_state(c.instance.state);
  j["a"] = c.instance.a.bitstrings(sig);
  if (c.instance.b) j["b"] = c.instance.b->bitstrings(sig);
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : c.trace) {
    nlohmann::json step;
    step["label"] = e.label;
    step["absurd"] = e.outcome.is_absurd();
    step["belief_set"] = e.outcome.belief_models().bitstrings(sig);
    if (!e.outcome.is_absurd()) step["ranks"] = ranks_json(e.outcome.state());
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::json to_json(const PostulateSummary& s) {
  nlohmann::json j;
  j["postulate"] = to_string(s.postulate);
  j["checked"] = s.checked;
  j["holds"] = s.holds;
  j["vacuous"] = s.vacuous;
  j["fails"] = s.fails;
  if (s.counterexample) j["counterexample"] = to_json(*s.counterexample);
  return j;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j = report_header(r.revision, r.contraction, r.signature, r.options);
  j["results"] = nlohmann::json::array();
  for (const auto& s : r.results) j["results"].push_back(to_json(s));
  return j;
}

Instance instance_from_json(const nlohmann::json& counterexample) {
  RankedState state = parse_state(counterexample.at("state").get<std::string>());
  const Signature& sig = state.signature();
  auto world_set = [&](const nlohmann::json& bits) {
    WorldSet w = WorldSet::empty(sig.size());
    for (const auto& b : bits) w.insert(sig.parse_valuation(b.get<std::string>()));
    return w;
  };
  Instance inst{state, world_set(counterexample.at("a")), std::nullopt};
  if (counterexample.contains("b")) inst.b = world_set(counterexample.at("b"));
  return inst;
}

}  // namespace beliefrev
