#include "beliefrev/epistemic_state.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace beliefrev {

RankedState normalize(const Signature& sig, std::span<const std::uint64_t> raw) {
  if (raw.size() != sig.world_count()) {
    throw FormatError("rank table has " + std::to_string(raw.size()) + " entries, expected " +
                      std::to_string(sig.world_count()));
  }
  std::vector<std::uint64_t> distinct(raw.begin(), raw.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<RankedState::Rank> ranks(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    ranks[v] = static_cast<RankedState::Rank>(std::lower_bound(distinct.begin(), distinct.end(), raw[v]) -
                                              distinct.begin());
  }
  return RankedState(sig, std::move(ranks), distinct.size());
}

RankedState normalize(const Signature& sig, const std::map<Valuation, std::uint64_t>& raw) {
  std::vector<std::uint64_t> table(sig.world_count());
  for (std::uint32_t v = 0; v < sig.world_count(); ++v) {
    const auto it = raw.find(Valuation{v});
    if (it == raw.end()) throw FormatError("missing rank for valuation " + sig.bitstring(Valuation{v}));
    table[v] = it->second;
  }
  if (raw.size() != table.size()) throw FormatError("rank table contains valuations outside the signature");
  return normalize(sig, table);
}

RankedState RankedState::uniform(const Signature& sig) {
  const std::vector<std::uint64_t> zeros(sig.world_count(), 0);
  return normalize(sig, zeros);
}

WorldSet RankedState::level(Rank r) const {
  WorldSet out = WorldSet::empty(width());
  for (std::uint32_t v = 0; v < ranks_.size(); ++v) {
    if (ranks_[v] == r) out.insert(Valuation{v});
  }
  return out;
}

WorldSet min_worlds(const RankedState& s, const WorldSet& a) {
  if (a.width() != s.width()) throw SignatureError("signature mismatch between state and world set");
  auto best = std::numeric_limits<RankedState::Rank>::max();
  a.for_each([&](Valuation v) { best = std::min(best, s.rank(v)); });
  WorldSet out = WorldSet::empty(s.width());
  a.for_each([&](Valuation v) {
    if (s.rank(v) == best) out.insert(v);
  });
  return out;
}

WorldSet belief_set(const RankedState& s) { return s.level(0); }

bool believes(const RankedState& s, const Formula& f) {
  return entails(belief_set(s), models(f, s.signature()));
}

bool state_equal(const RankedState& a, const RankedState& b) {
  if (!(a.signature() == b.signature())) throw SignatureError("signature mismatch between states");
  return a == b;
}

// ---------------------------------------------------------------------------
// State files

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw FormatError("state file line " + std::to_string(line) + ": " + what);
}

}  // namespace

RankedState parse_state(std::string_view text) {
  std::optional<Signature> sig;
  std::map<Valuation, std::uint64_t> raw;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) bad_line(line_no, "expected ':'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (!sig) {
      if (key != "atoms") bad_line(line_no, "first entry must be 'atoms: ...'");
      try {
        sig = Signature::parse(value);
      } catch (const SignatureError& e) {
        bad_line(line_no, e.what());
      }
      continue;
    }
    Valuation v;
    try {
      v = sig->parse_valuation(key);
    } catch (const FormatError& e) {
      bad_line(line_no, e.what());
    }
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      bad_line(line_no, "rank must be a natural number");
    }
    std::uint64_t rank = 0;
    std::istringstream(std::string(value)) >> rank;
    if (!raw.emplace(v, rank).second) bad_line(line_no, "duplicate valuation " + std::string(key));
    if (start > text.size()) break;
  }
  if (!sig) throw FormatError("state file has no 'atoms:' line");
  return normalize(*sig, raw);
}

RankedState load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read state file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string format_state(const RankedState& s) {
  std::string out = "atoms:";
  for (const auto& a : s.signature().atoms()) out += " " + a;
  out += '\n';
  for (std::uint32_t v = 0; v < s.ranks().size(); ++v) {
    out += s.signature().bitstring(Valuation{v}) + ": " + std::to_string(s.ranks()[v]) + '\n';
  }
  return out;
}

std::string rank_table_diff(const RankedState& expected, const RankedState& actual) {
  std::string out;
  const auto& sig = expected.signature();
  for (std::uint32_t v = 0; v < expected.ranks().size(); ++v) {
    const auto e = expected.ranks()[v];
    const auto a = v < actual.ranks().size() ? actual.ranks()[v] : std::numeric_limits<RankedState::Rank>::max();
    if (e == a) continue;
    out += "- " + sig.bitstring(Valuation{v}) + ": " + std::to_string(e) + '\n';
    out += "+ " + sig.bitstring(Valuation{v}) + ": " + std::to_string(a) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Streams

std::string_view to_string(StreamMode mode) { return mode == StreamMode::exhaustive ? "exhaustive" : "sampled"; }

std::uint64_t weak_order_count(std::size_t m) {
  std::vector<std::uint64_t> fubini(m + 1, 0);
  fubini[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    std::uint64_t binom = 1;  // C(i, k)
    for (std::size_t k = 1; k <= i; ++k) {
      binom = binom * (i - k + 1) / k;
      fubini[i] += binom * fubini[i - k];
    }
  }
  return fubini[m];
}

StateStream::StateStream(Signature sig, StreamMode mode, std::uint64_t seed, std::uint64_t count)
    : sig_(std::move(sig)), mode_(mode), seed_(seed), count_(count) {}

StateStream enumerate_states(const Signature& sig) {
  if (sig.size() > kMaxEnumerationAtoms) {
    throw SignatureError("exhaustive enumeration supports at most " + std::to_string(kMaxEnumerationAtoms) +
                         " atoms, got " + std::to_string(sig.size()));
  }
  return StateStream(sig, StreamMode::exhaustive, 0, weak_order_count(sig.world_count()));
}

StateStream sample_states(const Signature& sig, std::uint64_t count, std::uint64_t seed) {
  if (count == 0) throw Error("sample count must be at least 1");
  return StateStream(sig, StreamMode::sampled, seed, count);
}

RankedState sample_state(const Signature& sig, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  // Ranks are drawn from 0..2^n-1; the shift keeps the draw exact.
  const unsigned shift = 64 - static_cast<unsigned>(sig.size());
  std::vector<std::uint64_t> raw(sig.world_count());
  for (auto& r : raw) r = gen() >> shift;
  return normalize(sig, raw);
}

// Moves cursor_ to the lexicographically next surjection onto 0..levels_-1,
// or to the first surjection with one more level.
bool StateStream::advance_exhaustive() {
  const std::size_t n = sig_.world_count();
  auto complete_from = [&](std::size_t pos) {
    // Smallest completion of cursor_[0..pos) that uses every level.
    std::vector<bool> used(levels_, false);
    for (std::size_t i = 0; i < pos; ++i) used[cursor_[i]] = true;
    std::vector<std::uint32_t> missing;
    for (std::uint32_t l = 1; l < levels_; ++l) {
      if (!used[l]) missing.push_back(l);
    }
    const std::size_t zeros = n - pos - missing.size();
    for (std::size_t i = 0; i < zeros; ++i) cursor_[pos + i] = 0;
    std::copy(missing.begin(), missing.end(), cursor_.begin() + static_cast<std::ptrdiff_t>(pos + zeros));
  };
  auto missing_after = [&](std::size_t pos) {
    std::vector<bool> used(levels_, false);
    for (std::size_t i = 0; i <= pos; ++i) used[cursor_[i]] = true;
    return static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
  };

  if (!started_) {
    started_ = true;
    cursor_.assign(n, 0);
    levels_ = 1;
    return true;
  }
  for (std::size_t i = n; i-- > 0;) {
    const std::uint32_t old = cursor_[i];
    for (std::uint32_t value = old + 1; value < levels_; ++value) {
      cursor_[i] = value;
      if (missing_after(i) <= n - 1 - i) {
        complete_from(i + 1);
        return true;
      }
    }
    cursor_[i] = old;
  }
  if (levels_ == n) return false;
  ++levels_;
  complete_from(0);
  return true;
}

std::optional<RankedState> StateStream::next() {
  if (position_ >= count_) return std::nullopt;
  if (mode_ == StreamMode::sampled) return sample_state(sig_, seed_, position_++);
  if (!advance_exhaustive()) {
    position_ = count_;
    return std::nullopt;
  }
  ++position_;
  const std::vector<std::uint64_t> raw(cursor_.begin(), cursor_.end());
  return normalize(sig_, raw);
}

std::size_t StateStream::next_chunk(std::size_t max, std::vector<RankedState>& out) {
  std::size_t produced = 0;
  while (produced < max) {
    auto s = next();
    if (!s) break;
    out.push_back(std::move(*s));
    ++produced;
  }
  return produced;
}

}  // namespace beliefrev
