#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "vfree/automata.hpp"

using namespace vf;

namespace {

bool slice_equal(const std::function<bool(const Word&)>& f,
                 const std::function<bool(const Word&)>& g, int alphabet_size,
                 int maxlen) {
  for (auto& w : all_words(alphabet_size, maxlen))
    if (f(w) != g(w)) return false;
  return true;
}

}  // namespace

TEST_CASE("subset construction") {
  SUBCASE("the two-state machine for {a,b}*a") {
    Nfa n = fixtures::ends_in_a_nfa();
    Dfa d = nfa_to_dfa(n);
    CHECK(d.n_states == 2);
    CHECK(slice_equal([&](const Word& w) { return n.accepts(w); },
                      [&](const Word& w) { return d.accepts(w); }, 2, 8));
  }

  SUBCASE("a DFA input yields the same language") {
    Nfa n = fixtures::ends_in_a_nfa();
    Dfa d = nfa_to_dfa(n);
    Dfa d2 = nfa_to_dfa(d.as_nfa());
    CHECK(d2.n_states == d.n_states);
    CHECK(slice_equal([&](const Word& w) { return d.accepts(w); },
                      [&](const Word& w) { return d2.accepts(w); }, 2, 8));
  }

  SUBCASE("no final states rejects everything") {
    Nfa n = fixtures::ends_in_a_nfa();
    n.final.clear();
    Dfa d = nfa_to_dfa(n);
    for (auto& w : all_words(2, 6)) CHECK(!d.accepts(w));
  }
}

TEST_CASE("boolean matrices of the three-state example") {
  Nfa n = fixtures::even_a_nfa();
  BoolMatrixMonoid m = nfa_to_matrices(n);
  using Row = std::vector<bool>;
  std::vector<Row> ma{{0, 1, 0}, {1, 0, 1}, {1, 0, 0}};
  std::vector<Row> mb{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}};
  CHECK(m.per_letter[0] == ma);
  CHECK(m.per_letter[1] == mb);

  // M(eps) is the identity.
  auto id = m.matrix(Word{});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j));

  // "aa" is accepted: entry (1,3) of M(a)M(a).
  auto maa = m.matrix(Word{0, 0});
  CHECK(maa[0][2]);
  CHECK(matrix_accepts(m, n.initial, n.final, Word{0, 0}));

  // M(uv) = M(u) M(v), spot-checked.
  for (auto& u : all_words(2, 3))
    for (auto& v : all_words(2, 2)) {
      auto lhs = m.matrix(u + v);
      auto mu = m.matrix(u);
      auto mv = m.matrix(v);
      std::vector<Row> prod(3, Row(3, false));
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
          if (mu[i][k])
            for (int j = 0; j < 3; ++j)
              if (mv[k][j]) prod[i][j] = true;
      CHECK(lhs == prod);
    }
}

TEST_CASE("rational expressions") {
  SUBCASE("single state with a self-loop denotes a*") {
    Nfa n;
    n.n_states = 1;
    n.alphabet.add("a");
    n.transitions = {{0, 0, 0}};
    n.initial = {0};
    n.final = {0};
    auto e = nfa_to_rational(n);
    CHECK(format_rational(e, n.alphabet) == "a*");
  }

  SUBCASE("no initial state denotes the empty set") {
    Nfa n;
    n.n_states = 1;
    n.alphabet.add("a");
    n.final = {0};
    auto e = nfa_to_rational(n);
    CHECK(e->kind == RatExpr::Kind::Empty);
  }

  SUBCASE("round trip for {a,b}*a") {
    Nfa n = fixtures::ends_in_a_nfa();
    auto e = nfa_to_rational(n);
    Nfa back = rational_to_nfa(e, n.alphabet);
    CHECK(slice_equal([&](const Word& w) { return n.accepts(w); },
                      [&](const Word& w) { return back.accepts(w); }, 2, 6));
  }

  SUBCASE("structural constructors") {
    Alphabet sig({"a", "b"});
    auto a = RatExpr::lit(0);
    auto b = RatExpr::lit(1);
    Nfa u = rational_to_nfa(RatExpr::alt(a, b), sig);
    CHECK(u.accepts(Word{0}));
    CHECK(u.accepts(Word{1}));
    CHECK(!u.accepts(Word{0, 1}));
    CHECK(!u.accepts(Word{}));

    Nfa star_empty = rational_to_nfa(RatExpr::star(RatExpr::empty()), sig);
    CHECK(star_empty.accepts(Word{}));
    CHECK(!star_empty.accepts(Word{0}));

    auto abstar = RatExpr::star(RatExpr::cat(a, b));
    Nfa m = rational_to_nfa(abstar, sig);
    auto round = nfa_to_rational(m);
    Nfa m2 = rational_to_nfa(round, sig);
    CHECK(slice_equal([&](const Word& w) { return m.accepts(w); },
                      [&](const Word& w) { return m2.accepts(w); }, 2, 6));
  }
}

TEST_CASE("kleene closure loop on fixture automata") {
  std::vector<Nfa> fleet{fixtures::ends_in_a_nfa(), fixtures::even_a_nfa()};
  for (auto& n : fleet) {
    Dfa d = nfa_to_dfa(n);
    BoolMatrixMonoid m = nfa_to_matrices(n);
    Nfa back = rational_to_nfa(nfa_to_rational(n), n.alphabet);
    for (auto& w : all_words(n.alphabet.size(), 8)) {
      bool expect = n.accepts(w);
      CHECK(d.accepts(w) == expect);
      CHECK(matrix_accepts(m, n.initial, n.final, w) == expect);
      CHECK(back.accepts(w) == expect);
    }
  }
}

TEST_CASE("finite group word-problem DFA") {
  SUBCASE("Z/2 accepts even powers") {
    auto z2 = FiniteGroup::cyclic(2);
    Dfa d = finite_group_wp_dfa(z2, {1});
    CHECK(d.n_states == 2);
    for (auto& w : all_words(1, 8))
      CHECK(d.accepts(w) == (w.size() % 2 == 0));
  }

  SUBCASE("trivial group accepts the empty word over no letters") {
    auto t = FiniteGroup::trivial();
    Dfa d = finite_group_wp_dfa(t, {});
    CHECK(d.n_states == 1);
    CHECK(d.accepts(Word{}));
  }

  SUBCASE("Z/3 table walk") {
    auto z3 = FiniteGroup::cyclic(3);
    Dfa d = finite_group_wp_dfa(z3, {1});
    CHECK(d.accepts(Word{0, 0, 0}));
    CHECK(!d.accepts(Word{0, 0}));
  }

  SUBCASE("non-generating set is rejected") {
    auto z4 = FiniteGroup::cyclic(4);
    CHECK_THROWS_AS(finite_group_wp_dfa(z4, {2}), input_error);
  }
}

TEST_CASE("rational subgroup generators") {
  SUBCASE("(aa)* in the free group generates <a^2>") {
    Nfa n;
    n.n_states = 2;
    Letter a = n.alphabet.add("a");
    Letter ai = n.alphabet.add("a~");
    n.alphabet.set_involution(a, ai);
    n.transitions = {{0, a, 1}, {1, a, 0}};
    n.initial = {0};
    n.final = {0};

    auto sys = fixtures::free_group_system(1);
    auto reduce = [&](const Word& w) { return normalize(sys, w).word; };
    auto membership = [&](const Word& w) {
      // pi(w) in <a^2>: freely reduced to an even power of a.
      Word r = reduce(w);
      return r.size() % 2 == 0 &&
             std::adjacent_find(r.begin(), r.end(),
                                [](Letter x, Letter y) { return x != y; }) ==
                 r.end();
    };
    auto delta = rational_subgroup_generators(
        n, [&](Letter x) { return n.alphabet.involution(x); }, membership);
    CHECK(!delta.empty());
    for (auto& d : delta) CHECK(membership(d));
    // a^2 is generated: search words over delta/its inverses of length <= 8.
    Word a2{a, a};
    bool found_a2 = false, found_a1 = false;
    std::set<Word> closure{Word{}};
    for (int round = 0; round < 4; ++round) {
      std::set<Word> next = closure;
      for (auto& u : closure)
        for (auto& d : delta) {
          Word inv;
          for (auto it = d.letters.rbegin(); it != d.letters.rend(); ++it)
            inv.push_back(n.alphabet.involution(*it));
          if (u.size() <= 8) {
            next.insert(reduce(u + d));
            next.insert(reduce(u + inv));
          }
        }
      closure = std::move(next);
    }
    for (auto& u : closure) {
      if (u == a2) found_a2 = true;
      if (u == Word{a}) found_a1 = true;
    }
    CHECK(found_a2);
    CHECK(!found_a1);
  }

  SUBCASE("epsilon-only language yields trivial generators") {
    Nfa n;
    n.n_states = 1;
    Letter a = n.alphabet.add("a");
    Letter ai = n.alphabet.add("a~");
    n.alphabet.set_involution(a, ai);
    n.initial = {0};
    n.final = {0};
    auto sys = fixtures::free_group_system(1);
    auto membership = [&](const Word& w) { return normalize(sys, w).word.empty(); };
    auto delta = rational_subgroup_generators(
        n, [&](Letter x) { return n.alphabet.involution(x); }, membership);
    for (auto& d : delta) CHECK(membership(d));
  }

  SUBCASE("full language over a finite group generates the group") {
    // Sigma* over Z/3 with the inverse-closed generating set {a, a^2}.
    Nfa n;
    n.n_states = 1;
    Letter a = n.alphabet.add("a");
    Letter b = n.alphabet.add("b");  // b = a^-1
    n.alphabet.set_involution(a, b);
    n.transitions = {{0, a, 0}, {0, b, 0}};
    n.initial = {0};
    n.final = {0};
    auto z3 = FiniteGroup::cyclic(3);
    auto eval = [&](const Word& w) {
      int g = 0;
      for (Letter x : w) g = z3.mul(g, x == a ? 1 : 2);
      return g;
    };
    auto delta = rational_subgroup_generators(
        n, [&](Letter x) { return n.alphabet.involution(x); },
        [&](const Word&) { return true; });
    std::vector<int> gens;
    for (auto& d : delta) gens.push_back(eval(d));
    CHECK(z3.subgroup_closure(gens).size() == 3);
  }
}
