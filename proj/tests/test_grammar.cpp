#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "vfree/automata.hpp"
#include "vfree/grammar.hpp"
#include "vfree/rewrite.hpp"

using namespace vf;

TEST_CASE("CNF conversion is slice-equal to the original") {
  SUBCASE("a^n b^n") {
    Cfg g = fixtures::anbn_grammar();
    Cfg cnf = to_cnf(g);
    CHECK(is_cnf(cnf));
    CfgMembership member(g);
    for (auto& w : all_words(2, 8)) {
      bool anbn = w.size() % 2 == 0;
      for (std::size_t i = 0; anbn && i < w.size(); ++i)
        anbn = w[i] == (i < w.size() / 2 ? 0 : 1);
      CHECK(member.contains(w) == anbn);
      CHECK(cyk(cnf, w) == anbn);
    }
  }

  SUBCASE("already-CNF grammar keeps its language") {
    Cfg g;
    Letter a = g.terminals.add("a");
    int s = g.add_variable("S");
    int x = g.add_variable("X");
    g.axiom = s;
    g.productions = {{s, {V(x), V(x)}}, {x, {T(a)}}};
    Cfg cnf = to_cnf(g);
    CHECK(is_cnf(cnf));
    for (auto& w : all_words(1, 6))
      CHECK(cyk(cnf, w) == (w.size() == 2));
  }

  SUBCASE("free-group word problem grammar") {
    Cfg g = fixtures::free_wp_grammar(2);
    CfgMembership member(g);
    auto sys = fixtures::free_group_system(2);
    for (auto& w : all_words(4, 6))
      CHECK(member.contains(w) == normalize(sys, w).word.empty());
  }
}

TEST_CASE("reduce_grammar drops useless variables") {
  Cfg g;
  Letter a = g.terminals.add("a");
  int s = g.add_variable("S");
  int x = g.add_variable("X");  // unproductive
  int u = g.add_variable("U");  // unreachable
  g.axiom = s;
  g.productions = {{s, {T(a)}}, {s, {V(x)}}, {x, {V(x)}}, {u, {T(a)}}};
  Cfg r = reduce_grammar(g);
  CHECK(r.variables.size() == 1);
  CHECK(r.productions.size() == 1);
  (void)u;
}

TEST_CASE("pumping constant is exactly 2^|V|") {
  Cfg cnf = to_cnf(fixtures::anbn_grammar());
  CHECK(pumping_constant(cnf) ==
        (std::uint64_t{1} << cnf.variables.size()));
  Cfg cnf2 = to_cnf(fixtures::free_wp_grammar(1));
  CHECK(pumping_constant(cnf2) ==
        (std::uint64_t{1} << cnf2.variables.size()));
}

TEST_CASE("language_slice matches CYK") {
  Cfg g = fixtures::free_wp_grammar(1);
  auto slice = language_slice(g, 6);
  std::set<Word> inslice(slice.begin(), slice.end());
  CfgMembership member(g);
  for (auto& w : all_words(2, 6))
    CHECK(member.contains(w) == (inslice.count(w) > 0));
}

TEST_CASE("hotz presentation") {
  SUBCASE("free-group grammar relators freely reduce to 1") {
    Cfg g = reduce_grammar(fixtures::free_wp_grammar(2));
    auto h = hotz_presentation(g);
    CHECK(h.relations.size() == g.productions.size());
    // The terminal alphabet carries its own inverses (a~ = a^-1), so a
    // signed letter x^-1 is the plain letter inv(x).
    auto sys = fixtures::free_group_system(2);
    for (auto& rel : h.relators) {
      Word w;
      for (auto& s : rel)
        w.push_back(s.positive ? s.letter : sys.alphabet().involution(s.letter));
      CHECK(normalize(sys, w).word.empty());
    }
  }

  SUBCASE("S -> eps alone presents the trivial quotient") {
    Cfg g;
    g.axiom = g.add_variable("S");
    g.productions.push_back({g.axiom, {}});
    auto h = hotz_presentation(g);
    CHECK(h.generators.size() == 0);
    REQUIRE(h.witnesses.size() == 1);
    CHECK(h.witnesses[0].empty());
    for (auto& rel : h.relators) CHECK(free_reduce(rel).empty());
  }

  SUBCASE("WP(Z/2) relators normalize to 1 under aa -> eps") {
    Cfg g = reduce_grammar(fixtures::z2_wp_grammar());
    auto h = hotz_presentation(g);
    Alphabet sig({"a"});
    SemiThueSystem aa(sig, {{Word{0, 0}, Word{}}});
    for (auto& rel : h.relators) {
      // In Z/2 the generator is its own inverse: drop the signs.
      Word w;
      for (auto& s : rel) w.push_back(s.letter);
      CHECK(normalize(aa, w).word.empty());
    }
  }

  SUBCASE("requires the empty word in L") {
    Cfg g;
    Letter a = g.terminals.add("a");
    g.axiom = g.add_variable("S");
    g.productions.push_back({g.axiom, {T(a)}});
    CHECK_THROWS_AS(hotz_presentation(g), input_error);
  }
}

TEST_CASE("hotz witnesses substitute to language-equivalent words") {
  // For every production l -> r of the reduced grammar, psi(l) psi(r)^-1
  // normalizes to 1 under the fixture's convergent system.
  Cfg g = reduce_grammar(fixtures::free_wp_grammar(2));
  auto h = hotz_presentation(g);
  auto sys = fixtures::free_group_system(2);
  for (auto& rel : h.relators) {
    Word w;
    for (auto& s : rel)
      w.push_back(s.positive ? s.letter : sys.alphabet().involution(s.letter));
    CHECK(normalize(sys, w).word.empty());
  }
}

TEST_CASE("normal closure grammar") {
  auto sys = fixtures::free_group_system(1);
  const Alphabet& sig = sys.alphabet();

  SUBCASE("R = {a a~} generates only trivial words") {
    auto g = normal_closure_grammar(sig, {sig.parse_word("a a~")});
    for (auto& w : language_slice(g, 8))
      CHECK(normalize(sys, w).word.empty());
  }

  SUBCASE("R empty: everything freely reduces to 1") {
    auto g = normal_closure_grammar(sig, {});
    auto slice = language_slice(g, 8);
    CHECK(!slice.empty());
    for (auto& w : slice) CHECK(normalize(sys, w).word.empty());
  }

  SUBCASE("R = {a}: the relator itself is generated") {
    auto g = normal_closure_grammar(sig, {sig.parse_word("a")});
    auto slice = language_slice(g, 3);
    bool has_a = false;
    for (auto& w : slice) has_a = has_a || w == sig.parse_word("a");
    CHECK(has_a);
    // Every generated word maps into <<a>> = everything with zero b-weight;
    // over rank 1 that is the whole group, so check instead membership in
    // the normal closure via exponent sums mod nothing: w reduces to a^k.
    for (auto& w : slice) {
      Word r = normalize(sys, w).word;
      for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i] == r[i + 1]);
    }
  }
}
