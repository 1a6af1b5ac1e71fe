#ifndef VFREE_REWRITE_HPP
#define VFREE_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vfree/word.hpp"

namespace vf {

constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// A finite semi-Thue system over one alphabet. Rule order is the
/// deterministic tie-break order everywhere. Empty left-hand sides are
/// rejected at construction.
class SemiThueSystem {
 public:
  SemiThueSystem(Alphabet alphabet, std::vector<std::pair<Word, Word>> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::pair<Word, Word>>& rules() const { return rules_; }
  int rule_count() const { return static_cast<int>(rules_.size()); }

  /// True iff every rule strictly shortens.
  bool is_length_reducing() const;

 private:
  Alphabet alphabet_;
  std::vector<std::pair<Word, Word>> rules_;
};

struct RewriteStep {
  std::size_t pos;
  int rule;
  Word result;
  bool operator==(const RewriteStep&) const = default;
};

/// All one-step successors of w, ordered by (position, rule index).
/// Empty iff w is irreducible.
std::vector<RewriteStep> apply_once(const SemiThueSystem& s, const Word& w);

bool is_irreducible(const SemiThueSystem& s, const Word& w);

struct NormalizeResult {
  Word word;
  bool fuel_exhausted = false;
  std::uint64_t steps = 0;
};

/// Deterministic normalization: repeatedly applies the rewrite at the lowest
/// position (lowest rule index on ties) until irreducible or out of fuel.
NormalizeResult normalize(const SemiThueSystem& s, const Word& w,
                          std::uint64_t fuel = kDefaultFuel);

/// Normalization under a uniformly random redex choice; used to test
/// strategy independence of convergent systems.
NormalizeResult normalize_random(const SemiThueSystem& s, const Word& w,
                                 std::mt19937_64& rng,
                                 std::uint64_t fuel = kDefaultFuel);

struct CriticalPair {
  Word peak;
  Word left;
  Word right;
};

/// All overlaps between left-hand sides (proper overlap or containment),
/// each with its two one-step descendants, in a fixed order.
std::vector<CriticalPair> critical_pairs(const SemiThueSystem& s);

enum class ConfluenceStatus { LocallyConfluent, Counterexample, Unknown };

struct ConfluenceVerdict {
  ConfluenceStatus status;
  Word peak;  // set for Counterexample
  bool locally_confluent() const {
    return status == ConfluenceStatus::LocallyConfluent;
  }
};

/// Checks that every critical pair joins. Descendants are normalized and
/// compared; on mismatch a bounded breadth-first joinability search decides
/// (the deterministic normal forms of a joinable pair may differ when the
/// system is not confluent).
ConfluenceVerdict check_local_confluence(const SemiThueSystem& s,
                                         std::uint64_t fuel = kDefaultFuel);

/// Strong confluence on critical pairs: the two descendants of every peak
/// must meet within one step on each side.
bool check_strong_confluence(const SemiThueSystem& s);

enum class Ternary { True, False, Unknown };

/// normalize(u) == normalize(v); Unknown on fuel exhaustion. Meaningful for
/// convergent systems.
Ternary equivalent(const SemiThueSystem& s, const Word& u, const Word& v,
                   std::uint64_t fuel = kDefaultFuel);

/// Joinability of u and v under at most `depth` rewrite steps from each side.
bool bfs_joinable(const SemiThueSystem& s, const Word& u, const Word& v,
                  int depth);

}  // namespace vf

#endif
