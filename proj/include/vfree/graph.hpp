#ifndef VFREE_GRAPH_HPP
#define VFREE_GRAPH_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vfree/gog.hpp"
#include "vfree/word.hpp"

namespace vf {

/// A finite simple graph over opaque string keys, with optional
/// distance-from-origin annotations and sphere flags for ball approximations.
class SimpleGraph {
 public:
  int add_vertex(const std::string& key);
  int ensure_vertex(const std::string& key);
  bool has_vertex(const std::string& key) const { return index_.count(key) > 0; }
  int vertex(const std::string& key) const;
  const std::string& key(int v) const { return keys_[v]; }
  int n() const { return static_cast<int>(keys_.size()); }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> edges() const;
  std::size_t n_edges() const;

  bool connected() const;
  /// Connectivity of the subgraph induced by `verts` (empty set counts as
  /// connected).
  bool connected_subset(const std::vector<int>& verts) const;
  std::vector<std::vector<int>> components(const std::vector<bool>& allowed) const;
  std::vector<int> bfs_distances(int from) const;
  int distance(int u, int v) const;

  void set_distance(int v, int d);
  int dist(int v) const { return dist_.empty() ? -1 : dist_[v]; }
  void set_sphere(int v, bool f);
  bool sphere(int v) const { return !sphere_.empty() && sphere_[v]; }
  /// Vertices with distance annotation < r (the ball interior).
  std::vector<int> interior(int r) const;

  SimpleGraph induced(const std::vector<int>& verts,
                      std::vector<int>* old_to_new = nullptr) const;

 private:
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;
  std::vector<bool> sphere_;
};

/// One generator step of a group: maps a canonical vertex key to the key of
/// the product. Step lists are expected to be closed under inverses.
using GeneratorStep = std::function<std::string(const std::string&)>;

/// Breadth-first ball of the given radius around `identity_key`; vertices
/// carry distances, radius-R vertices carry the sphere flag, and the edge
/// set is the induced one.
SimpleGraph cayley_ball(const std::string& identity_key,
                        const std::vector<GeneratorStep>& steps, int radius);

struct TreeDecomposition {
  std::vector<std::vector<int>> tree_adj;
  std::vector<std::vector<int>> bags;  // sorted vertex ids

  int n_bags() const { return static_cast<int>(bags.size()); }
  std::size_t bag_size() const;
  void add_tree_edge(int a, int b);
};

struct TdViolation {
  std::string axiom;  // "tree", "T1", "T2", "T3"
  std::string detail;
};

std::optional<TdViolation> validate_td(const SimpleGraph& g,
                                       const TreeDecomposition& td);

/// Drops empty bags and contracts comparable adjacent bags; the bag size
/// does not increase and the result has pairwise incomparable bags.
TreeDecomposition normalize_td(const SimpleGraph& g, const TreeDecomposition& td);

/// Replaces each bag by its l-th neighborhood.
TreeDecomposition neighborhood_td(const SimpleGraph& g,
                                  const TreeDecomposition& td, int l);

/// Perfect elimination ordering by repeated simplicial-vertex removal
/// (smallest key first); nullopt iff the graph is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const SimpleGraph& g);

bool is_chordal(const SimpleGraph& g);

/// Clique tree of a chordal graph: bags are maximal cliques, adjacent bags
/// intersect non-trivially.
TreeDecomposition clique_tree(const SimpleGraph& g);

struct MullerSchuppTd {
  TreeDecomposition td;
  std::vector<bool> sphere_bag;  // bag touches the sphere of the ball
  int levels = 0;
};

/// Level-structure decomposition of a ball: the root bag is the radius-1
/// ball, level-n bags are the vertex boundaries of the components of
/// ball - B_n. Construction stops at level radius-1; bags touching the
/// sphere are flagged rather than trusted.
MullerSchuppTd muller_schupp_td(const SimpleGraph& ball, int radius);

/// Restriction of a decomposition to an induced subgraph (old_to_new as
/// produced by SimpleGraph::induced); drops bags that become empty.
TreeDecomposition restrict_td(const TreeDecomposition& td,
                              const std::vector<int>& old_to_new);

/// Maximum over the bags of the pairwise distance (measured in g) of the
/// selected bags.
int max_bag_diameter(const SimpleGraph& g, const TreeDecomposition& td,
                     const std::vector<bool>& select);

/// Exact treewidth by elimination-ordering dynamic programming over vertex
/// subsets. Graphs above the cap (20 vertices) are a usage error.
int treewidth_exact(const SimpleGraph& g);

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

struct ChordalExtension {
  std::vector<Word> generators;  // words over the gog alphabet
  SimpleGraph ball;
};

/// Extends a generating set of pi1(G,T) so the Cayley ball becomes chordal:
/// for one representative vertex-group bag and edge bag per orbit type, the
/// missing pairwise products are added as generators.
ChordalExtension extend_generators_for_chordality(
    const GraphOfGroups& g, const std::vector<Word>& base_generators,
    int radius);

/// Ball of a gog-backed group for a list of generator words (inverses are
/// added automatically); keys are S_G normal forms.
SimpleGraph gog_cayley_ball(const GraphOfGroups& g,
                            const std::vector<Word>& generators, int radius);

}  // namespace vf

#endif
