#pragma once

// Small builders shared by the test binaries.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "beliefrev/epistemic_state.hpp"
#include "beliefrev/prop_logic.hpp"

namespace testing {

inline beliefrev::Signature sig_of(const char* atoms) { return beliefrev::Signature::parse(atoms); }

inline beliefrev::WorldSet worlds(const beliefrev::Signature& sig, std::initializer_list<const char*> bits) {
  beliefrev::WorldSet w = beliefrev::WorldSet::empty(sig.size());
  for (const char* b : bits) w.insert(sig.parse_valuation(b));
  return w;
}

inline beliefrev::WorldSet formula_models(const beliefrev::Signature& sig, const char* text) {
  return beliefrev::models(beliefrev::parse_formula(text, sig), sig);
}

// Ranks listed in valuation order.
inline beliefrev::RankedState state_of(const beliefrev::Signature& sig, std::vector<std::uint64_t> ranks) {
  return beliefrev::normalize(sig, ranks);
}

inline std::vector<beliefrev::RankedState> all_states(const beliefrev::Signature& sig) {
  std::vector<beliefrev::RankedState> out;
  auto stream = beliefrev::enumerate_states(sig);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

inline std::vector<beliefrev::WorldSet> all_inputs(const beliefrev::Signature& sig, bool include_empty = false) {
  std::vector<beliefrev::WorldSet> out;
  const std::uint64_t count = std::uint64_t{1} << sig.world_count();
  for (std::uint64_t m = include_empty ? 0 : 1; m < count; ++m) {
    out.push_back(beliefrev::WorldSet::from_mask(sig.size(), m));
  }
  return out;
}

// George example tables over (r, g, s), in valuation order 000..111.
inline const std::vector<std::uint64_t> kPhi1{2, 2, 1, 1, 0, 0, 0, 0};
inline const std::vector<std::uint64_t> kPhi2{0, 3, 2, 2, 1, 1, 1, 1};
inline const std::vector<std::uint64_t> kPhi3{1, 3, 0, 0, 2, 2, 2, 2};
inline const std::vector<std::uint64_t> kPhi2p{0, 2, 2, 2, 1, 1, 1, 1};
inline const std::vector<std::uint64_t> kPhi3p{1, 0, 0, 0, 2, 2, 2, 2};

}  // namespace testing
