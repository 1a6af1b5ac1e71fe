#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "vfree/automata.hpp"
#include "vfree/gog.hpp"
#include "vfree/pda.hpp"
#include "vfree/vf_lang.hpp"

using namespace vf;

TEST_CASE("cfg_to_pda agrees with CYK") {
  SUBCASE("a^n b^n") {
    Cfg g = fixtures::anbn_grammar();
    Pda m = cfg_to_pda(g);
    CHECK(m.n_states == 2);
    CfgMembership member(g);
    for (auto& w : all_words(2, 8)) {
      auto r = pda_run(m, w);
      REQUIRE(r.verdict != PdaVerdict::FuelExhausted);
      CHECK((r.verdict == PdaVerdict::Accept) == member.contains(w));
    }
    CHECK(pda_run(m, Word{0, 0, 1, 1}).verdict == PdaVerdict::Accept);
    CHECK(pda_run(m, Word{0, 0, 1}).verdict == PdaVerdict::Reject);
    CHECK(pda_run(m, Word{}).verdict == PdaVerdict::Accept);
  }

  SUBCASE("free-group word problem") {
    Cfg g = fixtures::free_wp_grammar(1);
    Pda m = cfg_to_pda(g);
    CfgMembership member(g);
    for (auto& w : all_words(2, 8)) {
      auto r = pda_run(m, w);
      REQUIRE(r.verdict != PdaVerdict::FuelExhausted);
      CHECK((r.verdict == PdaVerdict::Accept) == member.contains(w));
    }
  }
}

TEST_CASE("pda_to_cfg") {
  SUBCASE("round trip for a^n b^n") {
    Cfg g = fixtures::anbn_grammar();
    Cfg back = pda_to_cfg(cfg_to_pda(g));
    CfgMembership orig(g), round(back);
    for (auto& w : all_words(2, 8))
      CHECK(orig.contains(w) == round.contains(w));
  }

  SUBCASE("machine accepting nothing") {
    Pda m;
    m.input.add("a");
    m.stack.add("z");
    m.n_states = 1;
    m.initial = 0;  // no finals
    Cfg g = pda_to_cfg(m);
    CHECK(language_slice(g, 5).empty());
  }

  SUBCASE("round trip for the free-group grammar") {
    Cfg g = fixtures::free_wp_grammar(1);
    Cfg back = pda_to_cfg(cfg_to_pda(g));
    CfgMembership orig(g), round(back);
    for (auto& w : all_words(2, 8))
      CHECK(orig.contains(w) == round.contains(w));
  }

  SUBCASE("hand-written pda with multi-pop rules") {
    // Accepts a^n b^n by stacking a's and popping pairs two at a time.
    Pda m;
    Letter a = m.input.add("a");
    Letter b = m.input.add("b");
    Letter z = m.stack.add("z");
    m.n_states = 2;
    m.state_names = {"push", "pop"};
    m.initial = 0;
    m.final = {1};
    m.rules.push_back({Word{}, 0, Word{a}, Word{z}, 0});
    m.rules.push_back({Word{z}, 0, Word{b}, Word{}, 1});
    m.rules.push_back({Word{z}, 1, Word{b}, Word{}, 1});
    m.rules.push_back({Word{}, 0, Word{}, Word{}, 1});  // accept eps
    Cfg g = pda_to_cfg(m);
    CfgMembership member(g);
    for (auto& w : all_words(2, 8)) {
      auto direct = pda_run(m, w);
      REQUIRE(direct.verdict != PdaVerdict::FuelExhausted);
      CHECK(member.contains(w) == (direct.verdict == PdaVerdict::Accept));
    }
  }
}

TEST_CASE("vf system of the infinite dihedral group") {
  VFStructure vf = fixtures::dihedral_vf();
  SemiThueSystem s = build_vf_system(vf);

  SUBCASE("passes local confluence") {
    CHECK(check_local_confluence(s).locally_confluent());
  }

  SUBCASE("abab = t^2 in normal form") {
    // b = a t, so abab = a (a t) a (a t) = t a a t after one cancellation.
    Word abab = vf.delta.parse_word("a a t a a t");
    CHECK(vf.delta.format_word(normalize(s, abab).word) == "t t");
  }

  SUBCASE("a a reduces to the empty word") {
    CHECK(normalize(s, vf.delta.parse_word("a a")).word.empty());
  }

  SUBCASE("inconsistent tables raise a construction error naming a triple") {
    VFStructure bad = fixtures::dihedral_vf();
    bad.w_table[bad.delta.letter("a")][bad.delta.letter("t")] =
        bad.delta.parse_word("t");  // should be t~
    CHECK_THROWS_WITH_AS(build_vf_system(bad),
                         doctest::Contains("triple"), input_error);
  }
}

TEST_CASE("vf system with all products in R reduces words to one letter") {
  // Trivial free part: the group itself is finite (Z/2 with rep letter r).
  VFStructure vf;
  Letter r = vf.delta.add("r");
  vf.n_free = 0;
  vf.w_table.assign(1, std::vector<Word>(1));
  vf.r_table.assign(1, std::vector<int>(1, -1));
  vf.w_table[0][0] = Word{};
  vf.r_table[0][0] = -1;  // r r = 1
  SemiThueSystem s = build_vf_system(vf);
  CHECK(normalize(s, Word{r, r}).word.empty());
  CHECK(normalize(s, Word{r, r, r}).word == Word{r});
}

TEST_CASE("deterministic pda of the dihedral structure") {
  VFStructure vf = fixtures::dihedral_vf();
  SemiThueSystem s = build_vf_system(vf);
  Pda m = vf_det_pda(vf);
  CHECK(vf_window_constant(vf) == 2);

  GraphOfGroups gog = fixtures::dihedral_gog();
  // Delta letters as words over the gog generators: t = ab, a = a.
  Word ga{gog.vertex_letter(0, 1)};
  Word gb{gog.vertex_letter(1, 1)};
  auto embed = [&](const Word& w) {
    Word out;
    for (Letter x : w) {
      if (x == vf.delta.letter("t")) {
        out.append(ga);
        out.append(gb);
      } else if (x == vf.delta.letter("t~")) {
        out.append(gb);
        out.append(ga);
      } else {
        out.append(ga);
      }
    }
    return out;
  };

  int checked = 0;
  for (auto& w : all_words(3, 8)) {
    auto run = pda_run(m, w);
    REQUIRE(run.verdict != PdaVerdict::FuelExhausted);
    CHECK(run.max_branching <= 1);
    bool accepted = run.verdict == PdaVerdict::Accept;
    bool trivial_sys = normalize(s, w).word.empty();
    bool trivial_britton = gog.word_problem(embed(w));
    CHECK(accepted == trivial_sys);
    CHECK(accepted == trivial_britton);
    ++checked;
  }
  CHECK(checked == 3 + 9 + 27 + 81 + 243 + 729 + 2187 + 6561 + 1);
}
