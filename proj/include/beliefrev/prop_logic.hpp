#pragma once

// Propositional language over a small ordered signature. Knowledge bases are
// handled semantically: a theory is identified with its set of models.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "beliefrev/errors.hpp"

namespace beliefrev {

// A truth assignment, identified by its index in [0, 2^n). The first atom of
// the signature is the most significant bit, so numeric order coincides with
// the lexicographic order of the printed bit strings ("000" < "001" < ...).
struct Valuation {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Valuation, Valuation) = default;
};

class Signature {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  explicit Signature(std::vector<std::string> atoms);

  // Accepts atoms separated by commas and/or whitespace: "r,g,s" or "r g s".
  static Signature parse(std::string_view list);

  std::size_t size() const noexcept { return atoms_->size(); }
  std::size_t world_count() const noexcept { return std::size_t{1} << size(); }
  const std::vector<std::string>& atoms() const noexcept { return *atoms_; }

  std::optional<std::size_t> index_of(std::string_view atom) const;

  bool truth(Valuation v, std::size_t atom) const noexcept {
    return ((v.index >> (size() - 1 - atom)) & 1u) != 0;
  }

  std::string bitstring(Valuation v) const;
  Valuation parse_valuation(std::string_view bits) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

bool is_atom_name(std::string_view name);

// A subset of the 2^width valuations of a signature.
class WorldSet {
 public:
  using Word = std::uint64_t;

  WorldSet() : WorldSet(0) {}

  static WorldSet empty(std::size_t width) { return WorldSet(width); }
  static WorldSet full(std::size_t width);
  static WorldSet of(std::size_t width, std::initializer_list<Valuation> members);
  // Bit i of mask is valuation i. Only for universes of at most 64 worlds.
  static WorldSet from_mask(std::size_t width, Word mask);

  std::size_t width() const noexcept { return width_; }
  std::size_t universe_size() const noexcept { return std::size_t{1} << width_; }

  bool contains(Valuation v) const noexcept {
    return ((words_[v.index / 64] >> (v.index % 64)) & 1u) != 0;
  }
  void insert(Valuation v) noexcept { words_[v.index / 64] |= Word{1} << (v.index % 64); }
  void erase(Valuation v) noexcept { words_[v.index / 64] &= ~(Word{1} << (v.index % 64)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_size(); }

  WorldSet complement() const;
  bool subset_of(const WorldSet& other) const;
  bool intersects(const WorldSet& other) const;

  WorldSet& operator&=(const WorldSet& other);
  WorldSet& operator|=(const WorldSet& other);
  WorldSet& operator-=(const WorldSet& other);
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

  std::vector<Valuation> members() const;
  std::vector<std::string> bitstrings(const Signature& sig) const;
  // "{010, 011}"
  std::string to_string(const Signature& sig) const;

  // Low 64 bits of the membership vector; the full mask when the universe
  // has at most 64 worlds.
  Word mask() const noexcept { return words_[0]; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::uint32_t>(__builtin_ctzll(bits));
        fn(Valuation{static_cast<std::uint32_t>(w * 64 + bit)});
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const WorldSet& a, const WorldSet& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

 private:
  explicit WorldSet(std::size_t width);
  void check_width(const WorldSet& other) const;
  void trim() noexcept;

  std::uint8_t width_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

class Formula {
 public:
  enum class Kind { atom, top, bottom, negation, conjunction, disjunction, implication, biconditional };

  static Formula atom(std::size_t index);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  // Only for atoms.
  std::size_t atom_index() const noexcept;
  // Only for negations (lhs) and binary connectives.
  const Formula& lhs() const noexcept;
  const Formula& rhs() const noexcept;

  // Prints in the ASCII input grammar with minimal parentheses.
  std::string to_string(const Signature& sig) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar, loosest to tightest binding:
//   iff := imp ("<->" imp)*      left-associative
//   imp := or ("->" imp)?        right-associative
//   or  := and ("|" and)*
//   and := not ("&" not)*
//   not := "!" not | atom | "true" | "false" | "(" iff ")"
Formula parse_formula(std::string_view text, const Signature& sig);

WorldSet models(const Formula& f, const Signature& sig);

// a |= b on model sets; also theory inclusion read right to left.
bool entails(const WorldSet& a, const WorldSet& b);

// Expansion K + alpha: intersection of model sets.
WorldSet expand(const WorldSet& k, const WorldSet& a);

// Full disjunctive normal form, one minterm per member in valuation order;
// falsum for the empty set.
Formula dnf_of(const WorldSet& w, const Signature& sig);

}  // namespace beliefrev
