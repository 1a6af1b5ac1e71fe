#ifndef VFREE_GRAMMAR_HPP
#define VFREE_GRAMMAR_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vfree/word.hpp"

namespace vf {

/// A grammar symbol: either a variable or a terminal, by index.
struct GSym {
  bool is_var;
  int idx;
  bool operator==(const GSym&) const = default;
  auto operator<=>(const GSym&) const = default;
};

inline GSym V(int i) { return {true, i}; }
inline GSym T(int i) { return {false, i}; }

using GWord = std::vector<GSym>;

struct Production {
  int lhs;  // variable index
  GWord rhs;
  bool operator==(const Production&) const = default;
  auto operator<=>(const Production&) const = default;
};

/// A context-free (Type-2) grammar. Terminals are the letters of an
/// Alphabet; variables carry their own names.
struct Cfg {
  Alphabet terminals;
  std::vector<std::string> variables;
  std::vector<Production> productions;
  int axiom = 0;

  void validate() const;
  int add_variable(const std::string& name);
  std::string format() const;
};

/// Removes unproductive and unreachable variables (in that order).
Cfg reduce_grammar(const Cfg& g);

/// True iff every production has the shape S -> eps, A -> BC, or A -> a,
/// and when S -> eps exists, S occurs on no right-hand side.
bool is_cnf(const Cfg& g);

/// Chomsky normal form via the textbook pipeline: fresh axiom, terminal
/// wrappers, binarization, epsilon elimination, unit elimination, reduction.
Cfg to_cnf(const Cfg& g);

/// 2^{|V|} for a CNF grammar.
std::uint64_t pumping_constant(const Cfg& cnf);

/// CYK membership for a CNF grammar.
bool cyk(const Cfg& cnf, const Word& w);

/// Membership oracle caching the CNF conversion.
class CfgMembership {
 public:
  explicit CfgMembership(const Cfg& g) : cnf_(to_cnf(g)) {}
  bool contains(const Word& w) const { return cyk(cnf_, w); }
  const Cfg& cnf() const { return cnf_; }

 private:
  Cfg cnf_;
};

/// All words of length <= maxlen in L(g), lexicographically sorted.
std::vector<Word> language_slice(const Cfg& g, int maxlen);

/// Letters with formal signs; `positive` false means the inverse letter.
struct SignedLetter {
  Letter letter;
  bool positive;
  bool operator==(const SignedLetter&) const = default;
};
using SignedWord = std::vector<SignedLetter>;

SignedWord free_reduce(const SignedWord& w);
std::string format_signed(const SignedWord& w, const Alphabet& sigma);

/// The presentation extracted from a reduced grammar with eps in L:
/// relations l = r for every production, plus a shortest terminal witness
/// per variable, and the relators psi(l) psi(r)^-1 over the terminals.
struct HotzPresentation {
  Alphabet generators;                 // the grammar's terminals
  std::vector<Production> relations;   // the productions, as equalities
  std::vector<Word> witnesses;         // per variable: some w_A with A ->* w_A
  std::vector<SignedWord> relators;    // psi(l) psi(r)^-1 per production
};

HotzPresentation hotz_presentation(const Cfg& g);

/// Grammar S -> a S a^-1 S | r | eps over an inverse-closed alphabet;
/// generates a context-free enumeration of the normal closure of R.
Cfg normal_closure_grammar(const Alphabet& sigma, const std::vector<Word>& relators);

}  // namespace vf

#endif
