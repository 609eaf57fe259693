#include <doctest.h>

#include <random>

#include "beliefrev/prop_logic.hpp"
#include "support.hpp"

using namespace beliefrev;
using testing::formula_models;
using testing::sig_of;
using testing::worlds;

namespace {

// Reference evaluator: walks the AST once per valuation.
bool eval(const Formula& f, const Signature& sig, Valuation v) {
  switch (f.kind()) {
    case Formula::Kind::atom: return sig.truth(v, f.atom_index());
    case Formula::Kind::top: return true;
    case Formula::Kind::bottom: return false;
    case Formula::Kind::negation: return !eval(f.lhs(), sig, v);
    case Formula::Kind::conjunction: return eval(f.lhs(), sig, v) && eval(f.rhs(), sig, v);
    case Formula::Kind::disjunction: return eval(f.lhs(), sig, v) || eval(f.rhs(), sig, v);
    case Formula::Kind::implication: return !eval(f.lhs(), sig, v) || eval(f.rhs(), sig, v);
    case Formula::Kind::biconditional: return eval(f.lhs(), sig, v) == eval(f.rhs(), sig, v);
  }
  return false;
}

WorldSet truth_table(const Formula& f, const Signature& sig) {
  WorldSet w = WorldSet::empty(sig.size());
  for (std::uint32_t i = 0; i < sig.world_count(); ++i) {
    if (eval(f, sig, Valuation{i})) w.insert(Valuation{i});
  }
  return w;
}

Formula random_formula(std::mt19937_64& gen, const Signature& sig, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  switch (pick(gen)) {
    case 0:
    case 1: return Formula::atom(std::uniform_int_distribution<std::size_t>(0, sig.size() - 1)(gen));
    case 2: return std::bernoulli_distribution(0.5)(gen) ? Formula::top() : Formula::bottom();
    case 3: return Formula::negation(random_formula(gen, sig, depth - 1));
    case 4: return Formula::conjunction(random_formula(gen, sig, depth - 1), random_formula(gen, sig, depth - 1));
    case 5: return Formula::disjunction(random_formula(gen, sig, depth - 1), random_formula(gen, sig, depth - 1));
    case 6: return Formula::implication(random_formula(gen, sig, depth - 1), random_formula(gen, sig, depth - 1));
    default:
      return Formula::biconditional(random_formula(gen, sig, depth - 1), random_formula(gen, sig, depth - 1));
  }
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK(sig_of("r, g, s").size() == 3);
  CHECK(sig_of("p q").atoms() == std::vector<std::string>{"p", "q"});
  CHECK_THROWS_AS(sig_of("p,p"), SignatureError);
  CHECK_THROWS_AS(sig_of(""), SignatureError);
  CHECK_THROWS_AS(sig_of("P"), SignatureError);
  CHECK_THROWS_AS(sig_of("true"), SignatureError);
  CHECK_THROWS_AS(sig_of("a,b,c,d,e,f,g,h,i,j,k,l,m,n,o,p,q"), SignatureError);
  CHECK(sig_of("a,b,c,d,e,f,g,h,i,j,k,l,m,n,o,p").world_count() == 65536);
}

TEST_CASE("valuations print in signature order") {
  const Signature sig = sig_of("r,g,s");
  const Valuation v = sig.parse_valuation("100");
  CHECK(sig.truth(v, 0));
  CHECK_FALSE(sig.truth(v, 1));
  CHECK_FALSE(sig.truth(v, 2));
  CHECK(sig.bitstring(v) == "100");
  CHECK_THROWS_AS(sig.parse_valuation("10"), FormatError);
  CHECK_THROWS_AS(sig.parse_valuation("10x"), FormatError);
}

TEST_CASE("parse and model examples") {
  const Signature sig = sig_of("r,g,s");
  const Formula c = parse_formula("r | g | s", sig);
  CHECK(c.kind() == Formula::Kind::disjunction);
  CHECK(models(c, sig) == WorldSet::full(3) - worlds(sig, {"000"}));
  CHECK(formula_models(sig, "!r & (g | s)") == worlds(sig, {"010", "011", "001"}));
  CHECK(formula_models(sig, "!(r | g | s)") == worlds(sig, {"000"}));
  CHECK(formula_models(sig, "true") == WorldSet::full(3));
  const Signature pq = sig_of("p,q");
  CHECK(formula_models(pq, "p <-> q") == worlds(pq, {"00", "11"}));
}

TEST_CASE("syntax errors carry positions") {
  const Signature sig = sig_of("r,g,s");
  try {
    parse_formula("r & & g", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_formula("", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("(r", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("r g", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("r # g", sig), ParseError);
  try {
    parse_formula("r & x", sig);
    FAIL("expected an unknown atom");
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom() == "x");
  }
}

TEST_CASE("precedence and associativity") {
  const Signature sig = sig_of("p,q,r");
  CHECK(formula_models(sig, "p | q & r") == formula_models(sig, "p | (q & r)"));
  CHECK(formula_models(sig, "!p & q") == formula_models(sig, "(!p) & q"));
  CHECK(formula_models(sig, "p -> q -> r") == formula_models(sig, "p -> (q -> r)"));
  CHECK(formula_models(sig, "p -> q -> r") != formula_models(sig, "(p -> q) -> r"));
  CHECK(formula_models(sig, "p & q -> r") == formula_models(sig, "(p & q) -> r"));
  CHECK(formula_models(sig, "p -> q <-> r") == formula_models(sig, "(p -> q) <-> r"));
  CHECK(formula_models(sig, "p <-> q <-> r") == formula_models(sig, "(p <-> q) <-> r"));
  CHECK(formula_models(sig, "!!p") == formula_models(sig, "p"));
}

TEST_CASE("models agrees with a per-valuation evaluator") {
  std::mt19937_64 gen(20240611);
  for (const char* atoms : {"p", "p,q", "p,q,r", "a,b,c,d,e"}) {
    const Signature sig = sig_of(atoms);
    for (int i = 0; i < 300; ++i) {
      const Formula f = random_formula(gen, sig, 5);
      const WorldSet expected = truth_table(f, sig);
      REQUIRE(models(f, sig) == expected);
      // Printing and reparsing preserves meaning.
      REQUIRE(models(parse_formula(f.to_string(sig), sig), sig) == expected);
    }
  }
}

TEST_CASE("models works at the atom limit") {
  const Signature sig = sig_of("a,b,c,d,e,f,g,h,i,j,k,l,m,n,o,p");
  const WorldSet w = formula_models(sig, "a & !p");
  CHECK(w.size() == 16384);
  CHECK(w.contains(sig.parse_valuation("1000000000000000")));
  CHECK_FALSE(w.contains(sig.parse_valuation("1000000000000001")));
  CHECK((w | formula_models(sig, "!(a & !p)")).is_full());
}

TEST_CASE("entails examples and order properties") {
  const Signature sig = sig_of("r,g,s");
  CHECK(entails(worlds(sig, {"010", "011"}), formula_models(sig, "g")));
  CHECK(entails(WorldSet::empty(3), worlds(sig, {"111"})));
  CHECK_FALSE(entails(worlds(sig, {"000"}), worlds(sig, {"111"})));
  CHECK_THROWS_AS(entails(WorldSet::empty(2), WorldSet::empty(3)), SignatureError);

  const Signature pq = sig_of("p,q");
  const auto sets = testing::all_inputs(pq, true);
  for (const auto& a : sets) {
    CHECK(entails(a, a));
    for (const auto& b : sets) {
      if (entails(a, b) && entails(b, a)) CHECK(a == b);
      for (const auto& c : sets) {
        if (entails(a, b) && entails(b, c)) CHECK(entails(a, c));
      }
    }
  }
}

TEST_CASE("expand is intersection") {
  const Signature pq = sig_of("p,q");
  const auto sets = testing::all_inputs(pq, true);
  for (const auto& k : sets) {
    CHECK(expand(k, WorldSet::full(2)) == k);
    CHECK(expand(k, k.complement()).empty());
    for (const auto& a : sets) {
      const WorldSet e = expand(k, a);
      CHECK(e.subset_of(k));
      CHECK(e.subset_of(a));
    }
  }
}

TEST_CASE("dnf_of examples") {
  const Signature sig = sig_of("r,g,s");
  CHECK(dnf_of(worlds(sig, {"010", "011"}), sig).to_string(sig) == "!r & g & !s | !r & g & s");
  CHECK(dnf_of(WorldSet::empty(3), sig).kind() == Formula::Kind::bottom);
  CHECK(models(dnf_of(WorldSet::full(3), sig), sig).is_full());
}

TEST_CASE("dnf_of roundtrips every world set up to three atoms") {
  for (const char* atoms : {"p", "p,q", "p,q,r"}) {
    const Signature sig = sig_of(atoms);
    for (const auto& w : testing::all_inputs(sig, true)) {
      REQUIRE(models(dnf_of(w, sig), sig) == w);
    }
  }
}

TEST_CASE("world set algebra") {
  const Signature sig = sig_of("p,q");
  const WorldSet a = worlds(sig, {"00", "01"});
  const WorldSet b = worlds(sig, {"01", "11"});
  CHECK((a & b) == worlds(sig, {"01"}));
  CHECK((a | b) == worlds(sig, {"00", "01", "11"}));
  CHECK((a - b) == worlds(sig, {"00"}));
  CHECK(a.complement() == worlds(sig, {"10", "11"}));
  CHECK(a.to_string(sig) == "{00, 01}");
  CHECK(WorldSet::from_mask(2, 0b0011) == a);
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(a.complement()));
  CHECK_THROWS_AS(a & WorldSet::full(3), SignatureError);
}
