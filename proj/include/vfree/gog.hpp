#ifndef VFREE_GOG_HPP
#define VFREE_GOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "vfree/finite_group.hpp"
#include "vfree/rewrite.hpp"
#include "vfree/word.hpp"

namespace vf {

/// What a letter of the graph-of-groups alphabet denotes.
struct GogLetter {
  enum class Kind { VertexElement, Edge } kind;
  int vertex = -1;   // for VertexElement
  int element = -1;  // nonidentity element index
  int edge = -1;     // directed edge id
};

struct GogEdge {
  std::string name;
  int src, dst;
  int inverse;             // directed edge id of the reverse
  int group;               // index into edge_groups, shared with inverse
  std::vector<int> embed;  // a -> a^y in the source vertex group
};

class GraphOfGroups;

/// Incremental construction; build() validates and freezes.
class GogBuilder {
 public:
  int add_vertex(const std::string& name, FiniteGroup group);
  /// Adds the pair {y, y~}; embed_src maps the edge group into the source
  /// vertex group, embed_dst into the target. Returns the id of y.
  int add_edge(const std::string& name, int src, int dst, FiniteGroup group,
               std::vector<int> embed_src, std::vector<int> embed_dst);
  void set_base(int vertex) { base_ = vertex; }
  GraphOfGroups build() const;

 private:
  friend class GraphOfGroups;
  std::vector<std::string> vertex_names_;
  std::vector<FiniteGroup> vertex_groups_;
  std::vector<FiniteGroup> edge_groups_;
  std::vector<GogEdge> edges_;
  int base_ = 0;
};

/// A node of the Bass-Serre tree: an S_G-irreducible word c0 y1 ... c_{k-1} y_k
/// together with the terminal vertex of its path.
struct BstNode {
  Word word;
  int vertex;
};

struct BstBallNode {
  Word word;
  int vertex;
  int parent;       // index into the ball, -1 for the root
  Word edge_label;  // c y
  int stabilizer_size;
};

struct SymHom {
  int degree = 0;
  /// Image of every alphabet letter; flevel leaves tree edges free,
  /// pi1level maps them to the identity.
  std::vector<Permutation> flevel;
  std::vector<Permutation> pi1level;

  Permutation evaluate(const std::vector<Permutation>& images, const Word& w) const;
};

struct FreeSubgroupData {
  std::uint64_t index;  // order of the image of pi1 in Sym(X)
  std::int64_t rank;
};

/// A finite connected graph of finite groups with a fixed base vertex and
/// spanning tree. The generating alphabet Sigma is the disjoint union of the
/// nonidentity vertex-group elements and the directed edges.
class GraphOfGroups {
 public:
  explicit GraphOfGroups(const GogBuilder& b);

  int n_vertices() const { return static_cast<int>(vertex_groups_.size()); }
  int n_edges() const { return static_cast<int>(edges_.size()); }  // directed
  const FiniteGroup& vertex_group(int v) const { return vertex_groups_[v]; }
  const FiniteGroup& edge_group(int e) const { return edge_groups_[edges_[e].group]; }
  const GogEdge& edge(int e) const { return edges_[e]; }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  int base() const { return base_; }

  const Alphabet& sigma() const { return sigma_; }
  const GogLetter& letter_info(Letter a) const { return letter_info_[a]; }
  Letter vertex_letter(int v, int element) const;
  Letter edge_letter(int e) const { return edge_letter_[e]; }
  /// Inverse of a letter inside F(G): inverse group element or reverse edge.
  Letter inverse_letter(Letter a) const;
  Word inverse_word(const Word& w) const;

  /// BFS spanning tree from the base vertex; closed under involution.
  const std::vector<int>& spanning_tree() const { return tree_edges_; }
  bool in_tree(int e) const;
  /// Edge sequence of the tree geodesic from P to Q, as edge ids.
  std::vector<int> tree_geodesic(int p, int q) const;
  /// The same path as a word of edge letters.
  Word tree_path_word(int p, int q) const;

  /// Left-coset representatives of the edge-group image, identity first.
  const std::vector<int>& coset_reps(int e) const { return coset_reps_[e]; }
  /// g = c * a^y with c a representative and a in the edge group.
  std::pair<int, int> factorize(int e, int g) const;

  const SemiThueSystem& sg() const { return sg_; }
  const SemiThueSystem& britton_system() const { return bg_; }

  Word britton_reduce(const Word& w) const;
  /// Embeds a word over Sigma into pi(G, base, base).
  Word psi_embed(const Word& w) const;
  /// True iff w = 1 in pi1(G, T).
  bool word_problem(const Word& w) const;
  /// Canonical S_G normal form of the psi-embedded word; the group-element key.
  Word normal_form(const Word& w) const;

  struct Presentation {
    std::vector<Word> relators;  // over Sigma
  };
  Presentation pi1_presentation() const;

  /// Edge-letter subsequence of a word.
  Word edge_sequence(const Word& w) const;
  /// End vertex if w is path-typed starting at `start`, nullopt otherwise.
  std::optional<int> path_type(const Word& w, int start) const;

  BstNode bst_root() const { return {Word{}, base_}; }
  std::vector<std::pair<Word, BstNode>> bst_children(const BstNode& node) const;
  std::vector<BstBallNode> bst_ball(int depth) const;

  SymHom sym_homomorphism() const;
  FreeSubgroupData free_subgroup_data() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<FiniteGroup> vertex_groups_;
  std::vector<FiniteGroup> edge_groups_;
  std::vector<GogEdge> edges_;
  int base_;

  Alphabet sigma_;
  std::vector<GogLetter> letter_info_;
  std::vector<std::vector<Letter>> vertex_letter_;  // [v][element], -1 for id
  std::vector<Letter> edge_letter_;
  std::vector<int> tree_edges_;
  std::vector<int> tree_parent_edge_;  // per vertex, edge id toward base, -1 at base
  std::vector<std::vector<int>> coset_reps_;
  SemiThueSystem sg_;
  SemiThueSystem bg_;

  SemiThueSystem build_sg() const;
  SemiThueSystem build_britton() const;
};

/// A virtually free structure: a free part with basis letters, coset
/// representatives R (1 excluded from the letter set), and the tables
/// w(a,b), r(a,b) with ab = w(a,b) r(a,b) in the group.
struct VFStructure {
  Alphabet delta;  // free letters with involution first, then representatives
  int n_free = 0;  // the first n_free letters are the free part
  std::vector<std::vector<Word>> w_table;  // over the free letters
  std::vector<std::vector<int>> r_table;   // representative letter or -1 for 1

  bool is_free_letter(Letter a) const { return a < n_free; }
  /// w(r,a) and r(r,a) with r = -1 meaning the representative 1.
  std::pair<Word, int> product(int rep, Letter a) const;
};

}  // namespace vf

#endif
