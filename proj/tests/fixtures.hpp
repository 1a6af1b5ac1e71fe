#ifndef VFREE_TESTS_FIXTURES_HPP
#define VFREE_TESTS_FIXTURES_HPP

#include "vfree/automata.hpp"
#include "vfree/gog.hpp"
#include "vfree/grammar.hpp"
#include "vfree/rewrite.hpp"
#include "vfree/word.hpp"

namespace fixtures {

using namespace vf;

/// Free-group cancellation system over a a~ b b~.
inline SemiThueSystem free_group_system(int rank = 2) {
  Alphabet sigma;
  for (int i = 0; i < rank; ++i) {
    std::string base(1, static_cast<char>('a' + i));
    Letter p = sigma.add(base);
    Letter m = sigma.add(base + "~");
    sigma.set_involution(p, m);
  }
  std::vector<std::pair<Word, Word>> rules;
  for (Letter a = 0; a < sigma.size(); ++a)
    rules.emplace_back(Word{a, sigma.involution(a)}, Word{});
  return SemiThueSystem(std::move(sigma), std::move(rules));
}

/// Dyck system abc -> 1, bca -> 1, cab -> 1 over {a,b,c}.
inline SemiThueSystem dyck_system() {
  Alphabet sigma({"a", "b", "c"});
  Letter a = 0, b = 1, c = 2;
  std::vector<std::pair<Word, Word>> rules;
  rules.emplace_back(Word{a, b, c}, Word{});
  rules.emplace_back(Word{b, c, a}, Word{});
  rules.emplace_back(Word{c, a, b}, Word{});
  return SemiThueSystem(std::move(sigma), std::move(rules));
}

/// Z/2 * Z/3 (the modular group PSL(2,Z)) as an amalgam over the trivial
/// group: two vertices, one edge.
inline GraphOfGroups modular_gog() {
  GogBuilder b;
  int p = b.add_vertex("P", FiniteGroup::cyclic(2));
  int q = b.add_vertex("Q", FiniteGroup::cyclic(3));
  b.add_edge("y", p, q, FiniteGroup::trivial(), {0}, {0});
  b.set_base(p);
  return b.build();
}

/// HNN extension of Z/2 over Z/2 (identity inclusions): Z x Z/2.
inline GraphOfGroups zxz2_gog() {
  GogBuilder b;
  int p = b.add_vertex("P", FiniteGroup::cyclic(2));
  b.add_edge("y", p, p, FiniteGroup::cyclic(2), {0, 1}, {0, 1});
  b.set_base(p);
  return b.build();
}

/// Infinite dihedral group Z/2 * Z/2.
inline GraphOfGroups dihedral_gog() {
  GogBuilder b;
  int p = b.add_vertex("P", FiniteGroup::cyclic(2));
  int q = b.add_vertex("Q", FiniteGroup::cyclic(2));
  b.add_edge("y", p, q, FiniteGroup::trivial(), {0}, {0});
  b.set_base(p);
  return b.build();
}

/// One vertex with trivial group and m loops: free group of rank m.
inline GraphOfGroups free_gog(int loops) {
  GogBuilder b;
  int p = b.add_vertex("P", FiniteGroup::trivial());
  for (int i = 0; i < loops; ++i)
    b.add_edge("y" + std::to_string(i + 1), p, p, FiniteGroup::trivial(), {0}, {0});
  b.set_base(p);
  return b.build();
}

/// Virtually free structure of the infinite dihedral group: free part <t>
/// with t = ab of index 2, representatives {1, a}.
inline VFStructure dihedral_vf() {
  VFStructure vf;
  Letter t = vf.delta.add("t");
  Letter ti = vf.delta.add("t~");
  vf.delta.set_involution(t, ti);
  Letter a = vf.delta.add("a");
  vf.n_free = 2;
  const int n = 3;
  vf.w_table.assign(n, std::vector<Word>(n));
  vf.r_table.assign(n, std::vector<int>(n, -1));
  auto set = [&](Letter x, Letter y, Word w, int r) {
    vf.w_table[x][y] = std::move(w);
    vf.r_table[x][y] = r;
  };
  set(t, t, Word{t, t}, -1);
  set(t, ti, Word{}, -1);
  set(ti, t, Word{}, -1);
  set(ti, ti, Word{ti, ti}, -1);
  set(t, a, Word{t}, a);
  set(ti, a, Word{ti}, a);
  set(a, t, Word{ti}, a);   // a t = t~ a
  set(a, ti, Word{t}, a);   // a t~ = t a
  set(a, a, Word{}, -1);    // a a = 1
  return vf;
}

/// S -> a S a^-1 S | eps over a rank-`rank` inverse-closed alphabet: the
/// word problem of the free group.
inline Cfg free_wp_grammar(int rank = 2) {
  Alphabet sigma;
  for (int i = 0; i < rank; ++i) {
    std::string base(1, static_cast<char>('a' + i));
    Letter p = sigma.add(base);
    Letter m = sigma.add(base + "~");
    sigma.set_involution(p, m);
  }
  Cfg g;
  g.terminals = sigma;
  g.axiom = g.add_variable("S");
  for (Letter a = 0; a < sigma.size(); ++a)
    g.productions.push_back(
        {g.axiom, {T(a), V(g.axiom), T(sigma.involution(a)), V(g.axiom)}});
  g.productions.push_back({g.axiom, {}});
  return g;
}

/// S -> a S b | eps.
inline Cfg anbn_grammar() {
  Cfg g;
  Letter a = g.terminals.add("a");
  Letter b = g.terminals.add("b");
  g.axiom = g.add_variable("S");
  g.productions.push_back({g.axiom, {T(a), V(g.axiom), T(b)}});
  g.productions.push_back({g.axiom, {}});
  return g;
}

/// S -> a S a S | eps over {a}: the word problem of Z/2.
inline Cfg z2_wp_grammar() {
  Cfg g;
  Letter a = g.terminals.add("a");
  g.axiom = g.add_variable("S");
  g.productions.push_back({g.axiom, {T(a), V(g.axiom), T(a), V(g.axiom)}});
  g.productions.push_back({g.axiom, {}});
  return g;
}

/// The three-state automaton for words ending in a positive even number of
/// a's: transitions a: 1->2, 2->1, 2->3, 3->1; b: all -> 1.
inline Nfa even_a_nfa() {
  Nfa n;
  n.n_states = 3;
  Letter a = n.alphabet.add("a");
  Letter b = n.alphabet.add("b");
  n.transitions = {{0, a, 1}, {1, a, 0}, {1, a, 2}, {2, a, 0},
                   {0, b, 0}, {1, b, 0}, {2, b, 0}};
  n.initial = {0};
  n.final = {2};
  return n;
}

/// Two-state automaton for {a,b}* a.
inline Nfa ends_in_a_nfa() {
  Nfa n;
  n.n_states = 2;
  Letter a = n.alphabet.add("a");
  Letter b = n.alphabet.add("b");
  n.transitions = {{0, a, 0}, {0, b, 0}, {0, a, 1}, {1, b, 0}};
  n.initial = {0};
  n.final = {1};
  return n;
}

}  // namespace fixtures

#endif
