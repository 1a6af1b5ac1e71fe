#ifndef VFREE_PREGROUP_HPP
#define VFREE_PREGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "vfree/gog.hpp"
#include "vfree/grammar.hpp"
#include "vfree/rewrite.hpp"
#include "vfree/word.hpp"

namespace vf {

struct PregroupViolation {
  std::string axiom;  // "P1".."P4", "involution", "shape"
  int w = -1, x = -1, y = -1, z = -1;
  std::string describe() const;
};

/// A finite pregroup: carrier with identity at index 0, involution, and a
/// partial product table (-1 undefined) satisfying (P1)-(P4).
class Pregroup {
 public:
  /// Verifies all axioms exhaustively; throws with the violated axiom and
  /// witnesses.
  static Pregroup from_table(Alphabet carrier, std::vector<int> involution,
                             std::vector<std::vector<int>> table);
  static std::optional<PregroupViolation> check(
      const Alphabet& carrier, const std::vector<int>& involution,
      const std::vector<std::vector<int>>& table);

  /// {1} with trivial product; universal group trivial.
  static Pregroup trivial();
  /// {1, a_i, a_i~}: products defined only with 1 and the inverse partner.
  static Pregroup free_pregroup(int rank);

  int size() const { return carrier_.size(); }
  const Alphabet& carrier() const { return carrier_; }
  int identity() const { return 0; }
  int inv(int x) const { return involution_[x]; }
  bool defined(int x, int y) const { return table_[x][y] >= 0; }
  int mul(int x, int y) const { return table_[x][y]; }

 private:
  Pregroup() = default;
  Alphabet carrier_;
  std::vector<int> involution_;
  std::vector<std::vector<int>> table_;
};

struct SpSystems {
  SemiThueSystem full;              // includes the symmetric rules
  SemiThueSystem length_reducing;   // 1 -> eps and ab -> [ab] only
};

/// The rewriting system of the pregroup; the full system is checked to be
/// strongly confluent on critical pairs.
SpSystems sp_system(const Pregroup& p);

/// Applies only length-reducing rules, leftmost; the result is a geodesic
/// representative of the universal-group class.
Word geodesic_reduce(const Pregroup& p, const Word& w);

/// w = 1 in U(P).
bool universal_wp(const Pregroup& p, const Word& w);

/// Grammar with variables and terminals the carrier, axiom 1, productions
/// 1 -> eps and [ab] -> a b; generates the word problem of U(P).
Cfg wp_grammar(const Pregroup& p);

/// Shortest word w_a with a w_a reducing to the empty word by
/// length-reducing rules (breadth-first search).
Word shortest_right_annihilator(const Pregroup& p, int a);

/// Streaming geodesic reducer: letters are fed one at a time, the stack is
/// kept geodesic by a bounded cascade of length-reducing combines.
class StreamingReducer {
 public:
  explicit StreamingReducer(const Pregroup& p);

  void feed(int letter);
  const std::vector<int>& stack() const { return stack_; }
  Word finish() const { return Word(std::vector<Letter>(stack_.begin(), stack_.end())); }
  bool at_identity() const { return stack_.empty(); }

  /// max_a |w_a|; the runtime cascade assertion uses cascade_cap().
  int window_bound() const { return window_bound_; }
  /// Proven cascade bound: one more than the window bound (a combine may
  /// first absorb the new letter and once more merge into the old top).
  int cascade_cap() const { return window_bound_ + 1; }
  int max_cascade_observed() const { return max_cascade_; }

 private:
  const Pregroup* p_;
  std::vector<int> stack_;
  int window_bound_;
  int max_cascade_ = 0;
};

/// Rimlinger's pregroup of a graph of groups: Britton-reduced loop words
/// whose path is a tree geodesic to a single non-tree edge (or no edge) and
/// back, with the partial product inherited from pi1.
struct GogPregroup {
  Pregroup p;
  /// Per carrier element its S_G normal form; index 0 is the empty word.
  /// These words (over Sigma) realize the embedding U(P) -> pi1(G, T).
  std::vector<Word> carrier_words;
};

GogPregroup pregroup_from_gog(const GraphOfGroups& g);

/// Shape test from the defining condition: the Britton reduction of w has a
/// y-sequence of the form T[P0,s(y)] y T[t(y),P0] with y a non-tree edge, or
/// T[P0,Q] T[Q,P0]. Used as the independent membership route.
bool gog_carrier_shape(const GraphOfGroups& g, const Word& w);

}  // namespace vf

#endif
