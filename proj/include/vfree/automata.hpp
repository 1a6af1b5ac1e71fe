#ifndef VFREE_AUTOMATA_HPP
#define VFREE_AUTOMATA_HPP

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "vfree/finite_group.hpp"
#include "vfree/word.hpp"

namespace vf {

struct Transition {
  int from;
  Letter label;
  int to;
  bool operator==(const Transition&) const = default;
  auto operator<=>(const Transition&) const = default;
};

/// Non-deterministic finite automaton (Q, Sigma, delta, I, F).
struct Nfa {
  int n_states = 0;
  Alphabet alphabet;
  std::vector<Transition> transitions;
  std::set<int> initial;
  std::set<int> final;

  void validate() const;
  bool accepts(const Word& w) const;
};

/// Deterministic automaton: at most one initial state, at most one
/// transition per (state, letter). -1 marks a missing transition.
struct Dfa {
  int n_states = 0;
  Alphabet alphabet;
  std::vector<std::vector<int>> delta;  // [state][letter]
  int initial = -1;
  std::set<int> final;

  bool accepts(const Word& w) const;
  Nfa as_nfa() const;
};

/// Subset construction restricted to reachable subsets.
Dfa nfa_to_dfa(const Nfa& n);

/// One Boolean matrix per letter; M(w) multiplies out in B^{n x n}.
struct BoolMatrixMonoid {
  int n = 0;
  std::vector<std::vector<std::vector<bool>>> per_letter;  // [letter][i][j]

  std::vector<std::vector<bool>> matrix(const Word& w) const;
};

BoolMatrixMonoid nfa_to_matrices(const Nfa& n);
bool matrix_accepts(const BoolMatrixMonoid& m, const std::set<int>& initial,
                    const std::set<int>& final, const Word& w);

/// Rational expressions: empty, epsilon, letter, union, concatenation, star.
struct RatExpr;
using RatExprPtr = std::shared_ptr<const RatExpr>;

struct RatExpr {
  enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star };
  Kind kind;
  Letter letter = -1;
  RatExprPtr lhs, rhs;

  static RatExprPtr empty();
  static RatExprPtr epsilon();
  static RatExprPtr lit(Letter a);
  // Smart constructors apply only the empty/epsilon identities.
  static RatExprPtr alt(RatExprPtr l, RatExprPtr r);
  static RatExprPtr cat(RatExprPtr l, RatExprPtr r);
  static RatExprPtr star(RatExprPtr e);
};

std::string format_rational(const RatExprPtr& e, const Alphabet& sigma);

/// State-elimination by dynamic programming over allowed intermediate states.
RatExprPtr nfa_to_rational(const Nfa& n);

/// Structural induction; the produced automaton has no epsilon transitions.
Nfa rational_to_nfa(const RatExprPtr& e, const Alphabet& sigma);

/// Subgroup generators for a rational subgroup: all words u v inv(u) with
/// |uv| <= n_states whose image lies in the subgroup. `letter_inverse` gives
/// the formal inverse letter, `membership` decides the subgroup.
std::vector<Word> rational_subgroup_generators(
    const Nfa& n, const std::function<Letter(Letter)>& letter_inverse,
    const std::function<bool(const Word&)>& membership);

/// The word-problem DFA of a finite group: states are the elements,
/// transitions multiply by the generator, initial = final = {1}.
/// The generators must generate the whole group.
Dfa finite_group_wp_dfa(const FiniteGroup& g, const std::vector<int>& generators,
                        const std::vector<std::string>& generator_names = {});

/// All words over the alphabet with length <= maxlen, in length-lex order.
std::vector<Word> all_words(int alphabet_size, int maxlen);

}  // namespace vf

#endif
