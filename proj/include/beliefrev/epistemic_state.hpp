#pragma once

// Epistemic states as ranked total preorders over valuations. A state is
// always held in normalized form: ranks occupy 0..k with no empty level, so
// two states encode the same preorder iff their rank vectors are equal.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefrev/prop_logic.hpp"

namespace beliefrev {

class RankedState {
 public:
  using Rank = std::uint32_t;

  // Total ignorance: every valuation at rank 0.
  static RankedState uniform(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t width() const noexcept { return sig_.size(); }
  Rank rank(Valuation v) const noexcept { return ranks_[v.index]; }
  std::span<const Rank> ranks() const noexcept { return ranks_; }
  std::size_t level_count() const noexcept { return levels_; }
  WorldSet level(Rank r) const;

  friend bool operator==(const RankedState& a, const RankedState& b) {
    return a.ranks_ == b.ranks_ && a.sig_ == b.sig_;
  }

 private:
  friend RankedState normalize(const Signature& sig, std::span<const std::uint64_t> raw);
  RankedState(Signature sig, std::vector<Rank> ranks, std::size_t levels)
      : sig_(std::move(sig)), ranks_(std::move(ranks)), levels_(levels) {}

  Signature sig_;
  std::vector<Rank> ranks_;
  std::size_t levels_;
};

// raw[v] is the rank of valuation v; any naturals are accepted and compacted
// order-preservingly to 0..k.
RankedState normalize(const Signature& sig, std::span<const std::uint64_t> raw);
RankedState normalize(const Signature& sig, const std::map<Valuation, std::uint64_t>& raw);

WorldSet min_worlds(const RankedState& s, const WorldSet& a);
WorldSet belief_set(const RankedState& s);
bool believes(const RankedState& s, const Formula& f);
bool state_equal(const RankedState& a, const RankedState& b);

// State files:
//   atoms: r g s
//   100: 0
//   ...
// One line per valuation in any order; '#' starts a comment.
RankedState parse_state(std::string_view text);
RankedState load_state(const std::filesystem::path& path);
std::string format_state(const RankedState& s);

// Per-valuation "-"/"+" lines for every valuation whose rank differs; empty
// when the states are equal.
std::string rank_table_diff(const RankedState& expected, const RankedState& actual);

enum class StreamMode { exhaustive, sampled };

std::string_view to_string(StreamMode mode);

// A deterministic sequence of states. Exhaustive streams visit every weak
// order once, ordered by number of levels and then lexicographically by rank
// vector; sampled streams are a pure function of (seed, position).
class StateStream {
 public:
  StreamMode mode() const noexcept { return mode_; }
  std::uint64_t seed() const noexcept { return seed_; }
  // Number of states the stream yields in total.
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t position() const noexcept { return position_; }

  std::optional<RankedState> next();
  // Appends up to max states; returns how many were produced.
  std::size_t next_chunk(std::size_t max, std::vector<RankedState>& out);

 private:
  friend StateStream enumerate_states(const Signature& sig);
  friend StateStream sample_states(const Signature& sig, std::uint64_t count, std::uint64_t seed);
  StateStream(Signature sig, StreamMode mode, std::uint64_t seed, std::uint64_t count);

  bool advance_exhaustive();

  Signature sig_;
  StreamMode mode_;
  std::uint64_t seed_;
  std::uint64_t count_;
  std::uint64_t position_ = 0;
  // Exhaustive cursor: current rank vector and its level count.
  std::vector<std::uint32_t> cursor_;
  std::uint32_t levels_ = 0;
  bool started_ = false;
};

inline constexpr std::size_t kMaxEnumerationAtoms = 3;

// Ordered Bell (Fubini) number: the count of weak orders on m elements.
std::uint64_t weak_order_count(std::size_t m);

StateStream enumerate_states(const Signature& sig);
StateStream sample_states(const Signature& sig, std::uint64_t count, std::uint64_t seed);

// The state at a given index of a sampled stream.
RankedState sample_state(const Signature& sig, std::uint64_t seed, std::uint64_t index);

}  // namespace beliefrev
