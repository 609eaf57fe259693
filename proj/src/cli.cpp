#include "beliefrev/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "beliefrev/theorem_lab.hpp"

namespace beliefrev::cli {

namespace {

struct Options {
  std::string atoms = "p,q";
  std::string state_file;
  std::string op = "natural";
  std::string cop = "natural-con";
  std::string postulate = "all";
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::string steps;
  std::string format = "text";
  unsigned jobs = 1;
  bool allow_large = false;
  bool list = false;
  std::vector<std::string> formulas;
};

// --- text rendering ---------------------------------------------------------

std::string ranks_line(const RankedState& s) {
  std::string out;
  for (std::uint32_t r = 0; r < s.level_count(); ++r) {
    if (r != 0) out += " < ";
    out += s.level(r).to_string(s.signature());
  }
  return out;
}

void print_counterexample(std::ostream& out, const Counterexample& c) {
  const Signature& sig = c.instance.state.signature();
  out << "  counterexample (" << to_string(c.postulate) << ", " << c.revision << " / " << c.contraction << ")\n";
  out << "    state: " << ranks_line(c.instance.state) << '\n';
  out << "    a: " << c.instance.a.to_string(sig) << '\n';
  if (c.instance.b) out << "    b: " << c.instance.b->to_string(sig) << '\n';
  for (const auto& e : c.trace) {
    out << "    K(" << e.label << ") = " << e.outcome.belief_models().to_string(sig);
    if (e.outcome.is_absurd()) out << " (absurd)";
    out << '\n';
  }
  if (!c.detail.empty()) out << "    " << c.detail << '\n';
}

void print_summary(std::ostream& out, const PostulateSummary& s) {
  out << std::left << std::setw(5) << to_string(s.postulate) << " checked=" << s.checked << " holds=" << s.holds
      << " vacuous=" << s.vacuous << " fails=" << s.fails << (s.counterexample ? "  COUNTEREXAMPLE" : "  ok")
      << '\n';
  if (s.counterexample) print_counterexample(out, *s.counterexample);
}

void print_header(std::ostream& out, std::string_view revision, std::string_view contraction, const Signature& sig,
                  const SearchOptions& options) {
  out << "operators: " << revision << " / " << contraction << "\nsignature:";
  for (const auto& a : sig.atoms()) out << ' ' << a;
  out << "\nmode: " << to_string(options.mode) << " (seed " << options.seed;
  if (options.mode == SearchMode::sample) out << ", " << options.samples << " samples";
  out << ")\n";
}

void print_report(std::ostream& out, const TheoremReport& r) {
  print_header(out, r.revision, r.contraction, r.signature, r.options);
  for (const auto& s : r.results) print_summary(out, s);
  for (const auto& c : r.claims) {
    out << c.claim << " [" << c.direction << "]: " << to_string(c.status);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << '\n';
    for (const auto& w : c.witnesses) print_counterexample(out, w);
  }
}

void print_trace(std::ostream& out, const std::vector<RevisionOutcome>& trace, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << "[" << i << "] " << labels[i] << '\n';
    if (trace[i].is_absurd()) {
      out << "absurd\n";
    } else {
      out << format_state(trace[i].state());
    }
    out << "belief set: " << trace[i].belief_models().to_string(trace[i].signature()) << "\n";
  }
}

nlohmann::json trace_json(const std::vector<RevisionOutcome>& trace, const std::vector<std::string>& labels) {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Signature& sig = trace[i].signature();
    nlohmann::json step{{"step", labels[i]}, {"absurd", trace[i].is_absurd()}};
    if (!trace[i].is_absurd()) {
      nlohmann::json ranks = nlohmann::json::object();
      for (std::uint32_t v = 0; v < sig.world_count(); ++v) ranks[sig.bitstring(Valuation{v})] = trace[i].state().rank(Valuation{v});
      step["ranks"] = std::move(ranks);
    }
    step["belief_set"] = trace[i].belief_models().bitstrings(sig);
    steps.push_back(std::move(step));
  }
  return steps;
}

// --- commands ---------------------------------------------------------------

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  if (o.mode == "exhaustive") {
    s.mode = SearchMode::exhaustive;
  } else if (o.mode == "sample") {
    s.mode = SearchMode::sample;
  } else {
    throw Error("--mode must be 'exhaustive' or 'sample'");
  }
  s.seed = o.seed;
  s.samples = o.samples;
  s.jobs = o.jobs;
  s.allow_large = o.allow_large;
  return s;
}

bool json_format(const Options& o) { return o.format == "json"; }

int cmd_models(const Options& o, std::ostream& out) {
  const Signature sig = Signature::parse(o.atoms);
  std::vector<WorldSet> sets;
  for (const auto& text : o.formulas) sets.push_back(models(parse_formula(text, sig), sig));
  nlohmann::json items = nlohmann::json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string& text = o.formulas[i];
    const WorldSet& m = sets[i];
    const std::string dnf = dnf_of(m, sig).to_string(sig);
    if (json_format(o)) {
      items.push_back({{"formula", text}, {"models", m.bitstrings(sig)}, {"dnf", dnf}});
    } else {
      out << text << "\n  models: " << m.to_string(sig) << "\n  dnf: " << dnf << '\n';
    }
  }
  if (json_format(o)) out << std::setw(2) << nlohmann::json{{"signature", sig.atoms()}, {"formulas", items}} << '\n';
  return kExitOk;
}

int emit_trace(const Options& o, std::ostream& out, const std::vector<RevisionOutcome>& trace,
               const std::vector<std::string>& labels) {
  if (json_format(o)) {
    nlohmann::json j;
    j["signature"] = trace.front().signature().atoms();
    j["trace"] = trace_json(trace, labels);
    j["final_belief_set"] = trace.back().belief_models().bitstrings(trace.back().signature());
    out << std::setw(2) << j << '\n';
  } else {
    print_trace(out, trace, labels);
  }
  return kExitOk;
}

int cmd_single(const Options& o, std::ostream& out, StepKind kind) {
  if (o.formulas.size() != 1) throw Error("expected exactly one formula");
  const RankedState s = load_state(o.state_file);
  const OperatorPair ops = operator_pair(o.op, o.cop);
  const std::vector<Step> steps{{kind, models(parse_formula(o.formulas[0], s.signature()), s.signature())}};
  const auto trace = apply_sequence(ops, s, steps);
  const std::string label = (kind == StepKind::revise ? "revise:" : "contract:") + o.formulas[0];
  return emit_trace(o, out, trace, {"initial", label});
}

int cmd_seq(const Options& o, std::ostream& out) {
  const RankedState s = load_state(o.state_file);
  const OperatorPair ops = operator_pair(o.op, o.cop);
  const auto steps = parse_steps(o.steps, s.signature());
  const auto trace = apply_sequence(ops, s, steps);
  std::vector<std::string> labels{"initial"};
  // Labels echo the step text as written.
  std::stringstream items(o.steps);
  for (std::string item; std::getline(items, item, ';');) {
    const auto first = item.find_first_not_of(" \t");
    if (first != std::string::npos) labels.push_back(item.substr(first));
  }
  labels.resize(trace.size(), "step");
  return emit_trace(o, out, trace, labels);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Signature sig = Signature::parse(o.atoms);
  const OperatorPair ops = operator_pair(o.op, o.cop);
  std::vector<PostulateId> ps;
  if (o.postulate == "all") {
    ps.assign(all_postulates().begin(), all_postulates().end());
  } else {
    std::stringstream items(o.postulate);
    for (std::string item; std::getline(items, item, ',');) {
      const auto p = parse_postulate(item);
      if (!p) throw Error("unknown postulate '" + item + "'");
      ps.push_back(*p);
    }
  }
  const SuiteReport report = run_suite(ops, sig, ps, search_options(o));
  if (json_format(o)) {
    out << std::setw(2) << to_json(report) << '\n';
  } else {
    print_header(out, report.revision, report.contraction, sig, report.options);
    for (const auto& s : report.results) print_summary(out, s);
  }
  return report.has_counterexample() ? kExitCounterexample : kExitOk;
}

int emit_theorem(const Options& o, std::ostream& out, const TheoremReport& r) {
  if (json_format(o)) {
    out << std::setw(2) << to_json(r) << '\n';
  } else {
    print_report(out, r);
  }
  return r.consistent() ? kExitOk : kExitCounterexample;
}

int cmd_george(const Options& o, std::ostream& out) {
  const GoldenTraceResult g = run_george(o.op);
  if (json_format(o)) {
    out << std::setw(2) << to_json(g) << '\n';
  } else {
    const Signature sig = george_signature();
    out << "revision: " << g.revision << "\nPhi1: " << ranks_line(george_initial()) << '\n';
    for (const auto& s : g.steps) {
      out << s.label << ": ";
      if (s.actual.is_absurd()) {
        out << "absurd";
      } else {
        out << ranks_line(s.actual.state());
      }
      out << (s.matches ? "  [matches]" : "  [MISMATCH]") << " S1=" << (s.s1 ? "yes" : "no")
          << " S2=" << (s.s2 ? "yes" : "no") << '\n';
      if (!s.matches) out << s.diff;
    }
    out << "g believed: " << (g.g_believed ? "yes" : "no") << " (expected " << (g.g_expected ? "yes" : "no")
        << ")\nC2: " << to_string(g.c2.status) << " (expected " << to_string(g.c2_expected) << ")\n";
    out << (g.passed() ? "golden trace: pass\n" : "golden trace: FAIL\n");
  }
  return g.passed() ? kExitOk : kExitCounterexample;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Signature sig = Signature::parse(o.atoms);
  const SearchOptions so = search_options(o);
  StateStream stream = so.mode == SearchMode::exhaustive ? enumerate_states(sig) : sample_states(sig, o.samples, o.seed);
  std::uint64_t count = 0;
  nlohmann::json states = nlohmann::json::array();
  while (auto s = stream.next()) {
    ++count;
    if (!o.list) continue;
    if (json_format(o)) {
      std::vector<std::uint32_t> ranks(s->ranks().begin(), s->ranks().end());
      states.push_back(ranks);
    } else {
      out << ranks_line(*s) << '\n';
    }
  }
  if (json_format(o)) {
    nlohmann::json j{{"signature", sig.atoms()}, {"mode", to_string(stream.mode())}, {"seed", stream.seed()},
                     {"count", count}};
    if (o.list) j["states"] = std::move(states);
    out << std::setw(2) << j << '\n';
  } else {
    out << "count: " << count << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Iterated belief revision laboratory"};
  app.require_subcommand(1, 1);

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--atoms", o.atoms, "Comma-separated atom names");
    c->add_option("--mode", o.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    c->add_option("--samples", o.samples, "Number of sampled states")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "Sampling seed");
    c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    c->add_flag("--allow-large", o.allow_large, "Permit exhaustive search over three atoms");
  };
  auto add_pair = [&](CLI::App* c) {
    c->add_option("--op", o.op, "Revision operator")->check(CLI::IsMember({"natural", "flatten", "lex", "reverse"}));
    c->add_option("--cop", o.cop, "Contraction operator")->check(CLI::IsMember({"natural-con", "drastic"}));
  };

  auto* models_cmd = app.add_subcommand("models", "Print the models and normal form of formulas");
  models_cmd->add_option("--atoms", o.atoms, "Comma-separated atom names");
  models_cmd->add_option("formula", o.formulas, "Formulas")->required();
  add_format(models_cmd);

  auto* revise_cmd = app.add_subcommand("revise", "Revise a state by a formula");
  auto* contract_cmd = app.add_subcommand("contract", "Contract a state by a formula");
  for (auto* c : {revise_cmd, contract_cmd}) {
    c->add_option("--state", o.state_file, "State file")->required();
    c->add_option("formula", o.formulas, "Input formula")->required()->expected(1);
    add_pair(c);
    add_format(c);
  }

  auto* seq_cmd = app.add_subcommand("seq", "Apply a sequence of revisions and contractions");
  seq_cmd->add_option("--state", o.state_file, "State file")->required();
  seq_cmd->add_option("--steps", o.steps, "Steps such as \"revise:p; contract:q\"")->required();
  add_pair(seq_cmd);
  add_format(seq_cmd);

  auto* check_cmd = app.add_subcommand("check", "Search postulates for counterexamples");
  check_cmd->add_option("--postulate", o.postulate, "Postulate id, comma list, or 'all'");
  add_pair(check_cmd);
  add_search(check_cmd);
  add_format(check_cmd);

  std::vector<CLI::App*> theorem_cmds;
  for (const char* name : {"theorem1", "corollary1", "observation1"}) {
    auto* c = app.add_subcommand(name, std::string("Verify ") + name);
    add_pair(c);
    add_search(c);
    add_format(c);
    theorem_cmds.push_back(c);
  }
  auto* hansson_cmd = app.add_subcommand("hansson", "Check that PC1-PC5 and core-retainment imply recovery");
  hansson_cmd->add_option("--cop", o.cop, "Contraction operator")->check(CLI::IsMember({"natural-con", "drastic"}));
  add_search(hansson_cmd);
  add_format(hansson_cmd);

  auto* george_cmd = app.add_subcommand("george", "Reproduce the George example");
  george_cmd->add_option("--op", o.op, "natural or flatten")->check(CLI::IsMember({"natural", "flatten"}));
  add_format(george_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate or sample epistemic states");
  add_search(enumerate_cmd);
  enumerate_cmd->add_flag("--list", o.list, "Print every state");
  add_format(enumerate_cmd);

  std::vector<const char*> argv{"beliefrev"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (models_cmd->parsed()) return cmd_models(o, out);
    if (revise_cmd->parsed()) return cmd_single(o, out, StepKind::revise);
    if (contract_cmd->parsed()) return cmd_single(o, out, StepKind::contract);
    if (seq_cmd->parsed()) return cmd_seq(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (george_cmd->parsed()) return cmd_george(o, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    const Signature sig = Signature::parse(o.atoms);
    const SearchOptions so = search_options(o);
    if (hansson_cmd->parsed()) return emit_theorem(o, out, verify_hansson(contraction_operator(o.cop), sig, so));
    const OperatorPair ops = operator_pair(o.op, o.cop);
    if (theorem_cmds[0]->parsed()) return emit_theorem(o, out, verify_theorem1(ops, sig, so));
    if (theorem_cmds[1]->parsed()) return emit_theorem(o, out, verify_corollary1(ops, sig, so));
    return emit_theorem(o, out, verify_observation1(ops, sig, so));
  } catch (const std::exception& e) {
    err << "beliefrev: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace beliefrev::cli
