#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "vfree/rewrite.hpp"

using namespace vf;

TEST_CASE("apply_once enumerates all redexes in order") {
  auto s = fixtures::free_group_system(2);
  const Alphabet& sig = s.alphabet();

  SUBCASE("unique redex") {
    Word w = sig.parse_word("a a~ b");
    auto steps = apply_once(s, w);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].pos == 0);
    CHECK(steps[0].rule == 0);
    CHECK(sig.format_word(steps[0].result) == "b");
  }

  SUBCASE("empty word is irreducible") {
    CHECK(apply_once(s, Word{}).empty());
    CHECK(is_irreducible(s, Word{}));
  }

  SUBCASE("overlapping Dyck redexes") {
    auto d = fixtures::dyck_system();
    Word w = d.alphabet().parse_word("a b c a b");
    auto steps = apply_once(d, w);
    // abc at 0, bca at 1, cab at 2; all three collapse to "ab".
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].pos == 0);
    CHECK(steps[0].rule == 0);
    CHECK(steps[1].pos == 1);
    CHECK(steps[1].rule == 1);
    CHECK(steps[2].pos == 2);
    CHECK(steps[2].rule == 2);
    for (auto& st : steps) CHECK(d.alphabet().format_word(st.result) == "a b");
  }
}

TEST_CASE("apply_once emptiness matches a naive substring scan") {
  auto d = fixtures::dyck_system();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Word w;
    int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % 3));
    bool has_factor = false;
    for (auto& [lhs, rhs] : d.rules())
      for (std::size_t p = 0; p + lhs.size() <= w.size(); ++p)
        if (w.subword(p, lhs.size()) == lhs) has_factor = true;
    CHECK(apply_once(d, w).empty() == !has_factor);
  }
}

TEST_CASE("normalize") {
  SUBCASE("free group cancellation") {
    auto s = fixtures::free_group_system(2);
    auto r = normalize(s, s.alphabet().parse_word("a a~ b"));
    CHECK(s.alphabet().format_word(r.word) == "b");
    CHECK(!r.fuel_exhausted);
  }

  SUBCASE("Dyck word reduces to the empty word") {
    auto d = fixtures::dyck_system();
    auto r = normalize(d, d.alphabet().parse_word("a b c a b c"));
    CHECK(r.word.empty());
    // Cross-check in the free group with c = (ab)^-1, i.e. c -> b~ a~.
    auto f = fixtures::free_group_system(2);
    Word translated = f.alphabet().parse_word("a b b~ a~ a b b~ a~");
    CHECK(normalize(f, translated).word.empty());
  }

  SUBCASE("single rule") {
    Alphabet sig({"a", "b"});
    SemiThueSystem s(sig, {{sig.parse_word("a b"), sig.parse_word("b a")}});
    auto r = normalize(s, sig.parse_word("a b"), 1000);
    CHECK(sig.format_word(r.word) == "b a");
    CHECK(is_irreducible(s, r.word));
  }

  SUBCASE("fuel exhaustion is reported") {
    Alphabet sig({"a"});
    SemiThueSystem s(sig, {{sig.parse_word("a"), sig.parse_word("a")}});
    auto r = normalize(s, sig.parse_word("a"), 10);
    CHECK(r.fuel_exhausted);
  }
}

TEST_CASE("empty lhs is rejected at construction") {
  Alphabet sig({"a"});
  CHECK_THROWS_AS(SemiThueSystem(sig, {{Word{}, sig.parse_word("a")}}),
                  input_error);
}

TEST_CASE("letters outside the alphabet are an input error") {
  auto s = fixtures::free_group_system(1);
  Word bad{static_cast<Letter>(99)};
  CHECK_THROWS_AS(apply_once(s, bad), input_error);
  CHECK_THROWS_AS(normalize(s, bad), input_error);
}

TEST_CASE("critical pairs") {
  SUBCASE("free group overlap a a~ a") {
    auto s = fixtures::free_group_system(1);
    auto cps = critical_pairs(s);
    const Alphabet& sig = s.alphabet();
    bool found = false;
    for (auto& cp : cps)
      if (sig.format_word(cp.peak) == "a a~ a" &&
          sig.format_word(cp.left) == "a" && sig.format_word(cp.right) == "a")
        found = true;
    CHECK(found);
  }

  SUBCASE("empty system") {
    Alphabet sig({"a"});
    SemiThueSystem s(sig, {});
    CHECK(critical_pairs(s).empty());
  }

  SUBCASE("Dyck peak abcab") {
    auto d = fixtures::dyck_system();
    bool found = false;
    for (auto& cp : critical_pairs(d))
      if (d.alphabet().format_word(cp.peak) == "a b c a b" &&
          d.alphabet().format_word(cp.left) == "a b" &&
          d.alphabet().format_word(cp.right) == "a b")
        found = true;
    CHECK(found);
  }
}

TEST_CASE("local confluence verdicts") {
  CHECK(check_local_confluence(fixtures::dyck_system()).locally_confluent());
  CHECK(check_local_confluence(fixtures::free_group_system(2)).locally_confluent());
  CHECK(check_local_confluence(fixtures::modular_gog().sg()).locally_confluent());

  SUBCASE("two irreducible distinct descendants") {
    Alphabet sig({"a", "b"});
    SemiThueSystem s(sig, {{sig.parse_word("a b"), sig.parse_word("a")},
                           {sig.parse_word("a b"), sig.parse_word("b")}});
    auto v = check_local_confluence(s);
    REQUIRE(v.status == ConfluenceStatus::Counterexample);
    CHECK(sig.format_word(v.peak) == "a b");
  }
}

TEST_CASE("is_length_reducing and equivalent") {
  auto d = fixtures::dyck_system();
  CHECK(d.is_length_reducing());
  auto s = fixtures::free_group_system(2);
  CHECK(s.is_length_reducing());
  CHECK(!fixtures::modular_gog().sg().is_length_reducing());

  CHECK(equivalent(s, s.alphabet().parse_word("a b b~"),
                   s.alphabet().parse_word("a")) == Ternary::True);
  CHECK(equivalent(d, d.alphabet().parse_word("a b"),
                   d.alphabet().parse_word("a b")) == Ternary::True);
  CHECK(equivalent(s, s.alphabet().parse_word("a"),
                   s.alphabet().parse_word("b")) == Ternary::False);
}

TEST_CASE("convergent fixtures are strategy independent") {
  std::mt19937_64 rng(20240817);
  std::vector<SemiThueSystem> systems;
  systems.push_back(fixtures::free_group_system(2));
  systems.push_back(fixtures::dyck_system());
  systems.push_back(fixtures::modular_gog().sg());
  for (auto& s : systems) {
    const int n_letters = s.alphabet().size();
    for (int trial = 0; trial < 25; ++trial) {
      Word w;
      int len = static_cast<int>(rng() % 11);
      for (int i = 0; i < len; ++i)
        w.push_back(static_cast<Letter>(rng() % n_letters));
      Word expect = normalize(s, w).word;
      for (int run = 0; run < 100; ++run) {
        auto r = normalize_random(s, w, rng);
        REQUIRE(!r.fuel_exhausted);
        CHECK(r.word == expect);
      }
    }
  }
}

TEST_CASE("length-reducing normalization finishes within the step bound") {
  auto d = fixtures::dyck_system();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % 3));
    auto r = normalize(d, w);
    CHECK(r.steps <= w.size() * d.rules().size());
  }
}

TEST_CASE("local confluence agrees with brute-force joinability") {
  // Random small systems: <= 4 rules over <= 3 letters, lhs length <= 3.
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    int n_letters = 1 + static_cast<int>(rng() % 3);
    Alphabet sig;
    for (int i = 0; i < n_letters; ++i) sig.add(std::string(1, 'a' + i));
    int n_rules = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<Word, Word>> rules;
    for (int r = 0; r < n_rules; ++r) {
      Word lhs, rhs;
      int ll = 1 + static_cast<int>(rng() % 3);
      int rl = static_cast<int>(rng() % 3);
      for (int i = 0; i < ll; ++i) lhs.push_back(static_cast<Letter>(rng() % n_letters));
      for (int i = 0; i < rl; ++i) rhs.push_back(static_cast<Letter>(rng() % n_letters));
      rules.emplace_back(lhs, rhs);
    }
    SemiThueSystem s(sig, rules);
    auto verdict = check_local_confluence(s, 2000);
    if (verdict.status == ConfluenceStatus::Unknown) continue;
    bool all_join = true;
    for (auto& cp : critical_pairs(s))
      if (!bfs_joinable(s, cp.left, cp.right, 6)) all_join = false;
    if (verdict.locally_confluent()) {
      CHECK(all_join);
    } else {
      CHECK(!all_join);
    }
  }
}
