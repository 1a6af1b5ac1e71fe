#ifndef VFREE_CUTS_HPP
#define VFREE_CUTS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vfree/graph.hpp"

namespace vf {

/// Fixed-size bitset over the vertices of one host graph.
struct VertexSet {
  int n = 0;
  std::vector<std::uint64_t> bits;

  explicit VertexSet(int n_ = 0) : n(n_), bits((n_ + 63) / 64, 0) {}
  void set(int v) { bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool test(int v) const { return bits[v >> 6] >> (v & 63) & 1; }
  bool empty() const;
  int count() const;
  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;
  VertexSet complement() const;
  std::vector<int> to_vector() const;
  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;
};

/// One side of a finite edge boundary in a ball. The complement side is a
/// separate Cut value; complementation flips the two.
struct Cut {
  VertexSet side;
  std::vector<std::pair<int, int>> boundary;  // sorted (min,max) edges
  bool side_infinite = false;                 // side touches the sphere
  bool comp_infinite = false;

  int weight() const { return static_cast<int>(boundary.size()); }
  bool operator==(const Cut& o) const { return side == o.side; }
};

/// Builds the cut with the given side; throws if side or complement is empty
/// or disconnected.
Cut make_cut(const SimpleGraph& g, const VertexSet& side);
Cut complement_cut(const SimpleGraph& g, const Cut& c);

/// All cuts of weight <= k whose vertex boundary meets S, by the recursive
/// boundary-set search (bridge base case, detour-path branching), in a
/// deterministic order.
std::vector<Cut> enumerate_kcuts(const SimpleGraph& g, const std::vector<int>& S,
                                 int k);

/// Corners in the order C&D, C&~D, ~C&D, ~C&~D.
std::array<VertexSet, 4> corners(const Cut& c, const Cut& d);
bool is_nested(const Cut& c, const Cut& d);

/// The visible window of a periodic bi-infinite path: the vertices u p^j
/// inside the ball for a contiguous range of j, plus the margin used to
/// classify the tails.
struct PathWindow {
  std::vector<int> vertices;  // in j order
  int margin = 1;
};

/// Resolves u p^j through a key-level multiplication oracle. Verifies that p
/// has infinite order (p^1..p^16 != 1) and that the window vertices are
/// pairwise distinct.
PathWindow make_periodic_path(
    const SimpleGraph& ball, const std::string& identity_key,
    const std::string& base_key,
    const std::function<std::string(const std::string&, bool)>& step_period,
    int margin);

/// Window built directly from vertex keys (for fixture graphs).
PathWindow window_from_keys(const SimpleGraph& g,
                            const std::vector<std::string>& keys, int margin);

/// True iff the two tails (beyond the margin) lie in different sides and
/// both sides are flagged infinite.
bool cut_splits(const Cut& c, const PathWindow& w);

/// C(alpha) approximation: the cuts of weight <= maxk splitting the window.
std::vector<Cut> cuts_splitting_path(const SimpleGraph& ball,
                                     const PathWindow& alpha, int maxk);
std::vector<Cut> minimal_cuts(const std::vector<Cut>& splitting);

/// Number of universe cuts not nested with c.
int m_value(const Cut& c, const std::vector<Cut>& universe);

struct OptimalCuts {
  std::vector<Cut> cuts;       // pairwise nested, closed under complement
  std::vector<Cut> universe;   // the k-cut universe used for m
  int k = 0;
};

/// Union over the path family of the argmin-m members of C_min(alpha).
/// k <= 0 selects the maximum over the family of the minimal splitting
/// weight. Pairwise nestedness of the result is asserted.
OptimalCuts optimal_cuts(const SimpleGraph& ball,
                         const std::vector<PathWindow>& paths, int k = 0);

struct TildeClasses {
  std::vector<int> class_of;  // per cut index
  int n_classes = 0;
};

/// The ~ relation: C ~ D iff C = D, or ~C is properly contained in D with
/// nothing of the family strictly between. Verifies that the computed
/// relation is an equivalence.
TildeClasses tilde_classes(const std::vector<Cut>& cuts);

struct StructureTree {
  TildeClasses classes;
  /// One entry per unordered pair {C, ~C}: cut index, reverse index, and the
  /// two class endpoints.
  struct Edge {
    int cut, reverse_cut;
    int from_class, to_class;
    int weight;
  };
  std::vector<Edge> edges;
};

/// Vertices are the ~ classes, edges the complement pairs; tree-ness is
/// verified and a violation is a hard error.
StructureTree structure_tree(const std::vector<Cut>& cuts);

/// Least lambda >= 1 with N^lambda(C) & ~C connected for every cut.
int choose_lambda(const SimpleGraph& g, const std::vector<Cut>& cuts);

/// Block of a class: the intersection of the lambda-neighborhoods of its
/// cuts. Also computed by the union formula; disagreement is a hard error.
std::vector<int> block(const SimpleGraph& g, const std::vector<Cut>& cuts,
                       const std::vector<int>& class_members, int lambda);

VertexSet neighborhood_set(const SimpleGraph& g, const VertexSet& s, int l);

}  // namespace vf

#endif
