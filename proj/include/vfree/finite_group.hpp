#ifndef VFREE_FINITE_GROUP_HPP
#define VFREE_FINITE_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "vfree/word.hpp"

namespace vf {

/// A finite group as a multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity, inverses, associativity; the
  /// associativity check is exhaustive up to order 64, sampled above).
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // n <= 5
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  int element(const std::string& name) const;

  int element_order(int a) const;

  /// Smallest subgroup containing the given elements, as a sorted list.
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;

  bool operator==(const FiniteGroup& o) const {
    return table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

/// Reason a candidate table is not a group, with witnesses.
struct GroupViolation {
  std::string kind;  // "shape", "closure", "identity", "inverse", "associativity"
  int a = -1, b = -1, c = -1;
  std::string describe() const;
};

/// Checks the group axioms; returns a violation report instead of throwing.
std::optional<GroupViolation> check_group(
    const std::vector<std::vector<int>>& table);

/// A permutation of {0..m-1}.
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int m);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

/// Function composition: (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

bool is_permutation(const std::vector<int>& img);

/// Order of the subgroup of Sym(m) generated by the given permutations.
std::uint64_t permutation_group_order(const std::vector<Permutation>& gens);

/// A left action of a finite group on {0..m-1}, stored per element.
/// Construction verifies the homomorphism law exhaustively.
class GroupAction {
 public:
  GroupAction(const FiniteGroup* group, std::vector<Permutation> per_element);

  const FiniteGroup& group() const { return *group_; }
  int degree() const { return degree_; }
  const Permutation& act(int g) const { return per_element_[g]; }
  bool is_free() const;

 private:
  const FiniteGroup* group_;
  int degree_;
  std::vector<Permutation> per_element_;
};

/// The regular action on |G| blocks repeated m/|G| times (block-major).
/// Requires |G| to divide m; free by construction.
GroupAction free_action(const FiniteGroup& g, int degree);

/// Given two free actions of the same group on the same set, a permutation
/// phi with alpha(g) = phi^-1 * beta(g) * phi for all g. The identity is
/// verified exhaustively before returning.
Permutation conjugator(const GroupAction& alpha, const GroupAction& beta);

}  // namespace vf

#endif
