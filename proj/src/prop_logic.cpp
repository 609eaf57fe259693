#include "beliefrev/prop_logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace beliefrev {

// ---------------------------------------------------------------------------
// Signature

bool is_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Signature::Signature(std::vector<std::string> atoms) {
  if (atoms.empty()) throw SignatureError("signature must contain at least one atom");
  if (atoms.size() > kMaxAtoms) {
    throw SignatureError("signature has " + std::to_string(atoms.size()) + " atoms; at most " +
                         std::to_string(kMaxAtoms) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& a : atoms) {
    if (!is_atom_name(a)) throw SignatureError("invalid atom name '" + a + "'");
    if (a == "true" || a == "false") throw SignatureError("'" + a + "' is reserved");
    if (!seen.insert(a).second) throw SignatureError("duplicate atom '" + a + "'");
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

Signature Signature::parse(std::string_view list) {
  std::vector<std::string> atoms;
  std::string current;
  for (char c : list) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) atoms.push_back(std::exchange(current, {}));
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) atoms.push_back(std::move(current));
  return Signature(std::move(atoms));
}

std::optional<std::size_t> Signature::index_of(std::string_view atom) const {
  const auto& names = *atoms_;
  const auto it = std::find(names.begin(), names.end(), atom);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::string Signature::bitstring(Valuation v) const {
  std::string out(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) {
    if (truth(v, i)) out[i] = '1';
  }
  return out;
}

Valuation Signature::parse_valuation(std::string_view bits) const {
  if (bits.size() != size()) {
    throw FormatError("valuation '" + std::string(bits) + "' has width " + std::to_string(bits.size()) +
                      ", expected " + std::to_string(size()));
  }
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw FormatError("valuation '" + std::string(bits) + "' is not a bit string");
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Valuation{index};
}

// ---------------------------------------------------------------------------
// WorldSet

WorldSet::WorldSet(std::size_t width) : width_(static_cast<std::uint8_t>(width)) {
  if (width > Signature::kMaxAtoms) throw SignatureError("world set width exceeds the atom limit");
  const std::size_t bits = std::size_t{1} << width;
  words_.assign(std::max<std::size_t>(1, bits / 64), 0);
}

WorldSet WorldSet::full(std::size_t width) {
  WorldSet w(width);
  std::fill(w.words_.begin(), w.words_.end(), ~Word{0});
  w.trim();
  return w;
}

WorldSet WorldSet::of(std::size_t width, std::initializer_list<Valuation> members) {
  WorldSet w(width);
  for (auto v : members) {
    if (v.index >= w.universe_size()) throw SignatureError("valuation out of range for world set");
    w.insert(v);
  }
  return w;
}

WorldSet WorldSet::from_mask(std::size_t width, Word mask) {
  if (width > 6) throw SignatureError("from_mask needs a universe of at most 64 worlds");
  WorldSet w(width);
  w.words_[0] = mask;
  w.trim();
  return w;
}

void WorldSet::trim() noexcept {
  if (universe_size() < 64) words_[0] &= (Word{1} << universe_size()) - 1;
}

void WorldSet::check_width(const WorldSet& other) const {
  if (width_ != other.width_) {
    throw SignatureError("signature mismatch: world sets of width " + std::to_string(width_) + " and " +
                         std::to_string(other.width_));
  }
}

std::size_t WorldSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool WorldSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

WorldSet WorldSet::complement() const {
  WorldSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool WorldSet::subset_of(const WorldSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool WorldSet::intersects(const WorldSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

WorldSet& WorldSet::operator&=(const WorldSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

WorldSet& WorldSet::operator-=(const WorldSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Valuation> WorldSet::members() const {
  std::vector<Valuation> out;
  out.reserve(size());
  for_each([&](Valuation v) { out.push_back(v); });
  return out;
}

std::vector<std::string> WorldSet::bitstrings(const Signature& sig) const {
  std::vector<std::string> out;
  for_each([&](Valuation v) { out.push_back(sig.bitstring(v)); });
  return out;
}

std::string WorldSet::to_string(const Signature& sig) const {
  std::string out = "{";
  bool first = true;
  for_each([&](Valuation v) {
    if (!first) out += ", ";
    out += sig.bitstring(v);
    first = false;
  });
  return out + "}";
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  std::size_t atom = 0;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

Formula Formula::atom(std::size_t index) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, index, std::nullopt, std::nullopt}));
}
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::top, 0, {}, {}})); }
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::bottom, 0, {}, {}})); }
Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, 0, std::move(operand), std::nullopt}));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::conjunction, 0, std::move(lhs), std::move(rhs)}));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::disjunction, 0, std::move(lhs), std::move(rhs)}));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::implication, 0, std::move(lhs), std::move(rhs)}));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::biconditional, 0, std::move(lhs), std::move(rhs)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
std::size_t Formula::atom_index() const noexcept { return node_->atom; }
const Formula& Formula::lhs() const noexcept { return *node_->lhs; }
const Formula& Formula::rhs() const noexcept { return *node_->rhs; }

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::biconditional: return 1;
    case Formula::Kind::implication: return 2;
    case Formula::Kind::disjunction: return 3;
    case Formula::Kind::conjunction: return 4;
    case Formula::Kind::negation: return 5;
    default: return 6;
  }
}

void print(const Formula& f, const Signature& sig, std::string& out);

void print_child(const Formula& child, const Signature& sig, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, sig, out);
  if (parens) out += ')';
}

void print(const Formula& f, const Signature& sig, std::string& out) {
  using K = Formula::Kind;
  const int prec = precedence(f.kind());
  switch (f.kind()) {
    case K::atom:
      out += f.atom_index() < sig.size() ? sig.atoms()[f.atom_index()] : "?" + std::to_string(f.atom_index());
      return;
    case K::top: out += "true"; return;
    case K::bottom: out += "false"; return;
    case K::negation:
      out += '!';
      print_child(f.lhs(), sig, precedence(f.lhs().kind()) < prec, out);
      return;
    default: break;
  }
  const char* op = f.kind() == K::conjunction   ? " & "
                   : f.kind() == K::disjunction ? " | "
                   : f.kind() == K::implication ? " -> "
                                                : " <-> ";
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  bool lparen = lp < prec;
  bool rparen = rp < prec;
  // -> groups to the right, <-> to the left; & and | are associative.
  if (f.kind() == K::implication) lparen = lp <= prec;
  if (f.kind() == K::biconditional) rparen = rp <= prec;
  print_child(f.lhs(), sig, lparen, out);
  out += op;
  print_child(f.rhs(), sig, rparen, out);
}

// Recursive descent over the grammar documented in the header.
class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected " + describe_here());
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string describe_here() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept("<->")) f = Formula::biconditional(std::move(f), parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept("->")) return Formula::implication(std::move(f), parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = Formula::disjunction(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (accept("&")) f = Formula::conjunction(std::move(f), parse_not());
    return f;
  }

  Formula parse_not() {
    skip_space();
    if (accept("!")) return Formula::negation(parse_not());
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')', found " + describe_here());
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                     std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::top();
      if (name == "false") return Formula::bottom();
      const auto index = sig_.index_of(name);
      if (!index) throw UnknownAtomError(name);
      return Formula::atom(*index);
    }
    fail("expected formula, found " + describe_here());
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

WorldSet atom_models(std::size_t atom, const Signature& sig) {
  WorldSet w = WorldSet::empty(sig.size());
  for (std::uint32_t v = 0; v < sig.world_count(); ++v) {
    if (sig.truth(Valuation{v}, atom)) w.insert(Valuation{v});
  }
  return w;
}

Formula minterm(Valuation v, const Signature& sig) {
  std::optional<Formula> term;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    Formula literal = sig.truth(v, i) ? Formula::atom(i) : Formula::negation(Formula::atom(i));
    term = term ? Formula::conjunction(std::move(*term), std::move(literal)) : std::move(literal);
  }
  return *term;
}

// Balanced so that depth stays logarithmic for large sets.
Formula disjoin(const std::vector<Formula>& terms, std::size_t begin, std::size_t end) {
  if (end - begin == 1) return terms[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  return Formula::disjunction(disjoin(terms, begin, mid), disjoin(terms, mid, end));
}

}  // namespace

std::string Formula::to_string(const Signature& sig) const {
  std::string out;
  print(*this, sig, out);
  return out;
}

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

WorldSet models(const Formula& f, const Signature& sig) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::atom:
      if (f.atom_index() >= sig.size()) throw SignatureError("atom index outside the signature");
      return atom_models(f.atom_index(), sig);
    case K::top: return WorldSet::full(sig.size());
    case K::bottom: return WorldSet::empty(sig.size());
    case K::negation: return models(f.lhs(), sig).complement();
    case K::conjunction: return models(f.lhs(), sig) & models(f.rhs(), sig);
    case K::disjunction: return models(f.lhs(), sig) | models(f.rhs(), sig);
    case K::implication: return models(f.lhs(), sig).complement() | models(f.rhs(), sig);
    case K::biconditional: {
      const WorldSet l = models(f.lhs(), sig);
      const WorldSet r = models(f.rhs(), sig);
      return (l & r) | (l.complement() & r.complement());
    }
  }
  return WorldSet::empty(sig.size());
}

bool entails(const WorldSet& a, const WorldSet& b) { return a.subset_of(b); }

WorldSet expand(const WorldSet& k, const WorldSet& a) { return k & a; }

Formula dnf_of(const WorldSet& w, const Signature& sig) {
  if (w.width() != sig.size()) throw SignatureError("world set does not match the signature");
  std::vector<Formula> terms;
  w.for_each([&](Valuation v) { terms.push_back(minterm(v, sig)); });
  if (terms.empty()) return Formula::bottom();
  return disjoin(terms, 0, terms.size());
}

}  // namespace beliefrev
