#ifndef VFREE_PDA_HPP
#define VFREE_PDA_HPP

#include <set>
#include <string>
#include <vector>

#include "vfree/grammar.hpp"
#include "vfree/rewrite.hpp"
#include "vfree/word.hpp"

namespace vf {

/// One transition of a push-down automaton: in state `from`, with `pop` a
/// suffix of the stack and `read` a prefix of the remaining input, replace
/// the suffix by `push` and switch to state `to`.
struct PdaRule {
  Word pop;
  int from;
  Word read;
  Word push;
  int to;
  bool operator==(const PdaRule&) const = default;
};

/// Push-down automaton accepting on empty stack AND final state after the
/// whole input is consumed. The stack top is the right end of the stack word.
struct Pda {
  Alphabet input;
  Alphabet stack;
  int n_states = 0;
  std::vector<std::string> state_names;
  std::vector<PdaRule> rules;
  int initial = 0;
  std::set<int> final;

  void validate() const;
  std::string state_name(int q) const {
    return state_names.empty() ? "q" + std::to_string(q) : state_names[q];
  }
};

enum class PdaVerdict { Accept, Reject, FuelExhausted };

struct PdaRunResult {
  PdaVerdict verdict;
  /// Largest number of successor configurations seen at any reachable
  /// configuration; 1 or 0 everywhere for deterministic machines.
  int max_branching = 0;
  std::uint64_t expanded = 0;
};

/// Breadth-first search over configurations with a visited set; fuel bounds
/// the number of expanded configurations.
PdaRunResult pda_run(const Pda& m, const Word& w,
                     std::uint64_t fuel = kDefaultFuel);

/// Two-state PDA accepting L(g): input symbols are shifted to the stack and
/// backward derivation steps are performed. The grammar is brought into CNF
/// internally so that runs terminate; the accepted language is L(g).
Pda cfg_to_pda(const Cfg& g);

/// Grammar with variables {S} + Q x Z x Q for the language of m. The machine
/// is normalized internally (bottom marker, single-symbol pops, pushes of
/// length at most two) before the production families are emitted.
Cfg pda_to_cfg(const Pda& m);

}  // namespace vf

#endif
