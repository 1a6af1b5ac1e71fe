#include "vfree/gog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace vf {

int GogBuilder::add_vertex(const std::string& name, FiniteGroup group) {
  vertex_names_.push_back(name);
  vertex_groups_.push_back(std::move(group));
  return static_cast<int>(vertex_names_.size()) - 1;
}

int GogBuilder::add_edge(const std::string& name, int src, int dst,
                         FiniteGroup group, std::vector<int> embed_src,
                         std::vector<int> embed_dst) {
  int gid = static_cast<int>(edge_groups_.size());
  edge_groups_.push_back(std::move(group));
  int y = static_cast<int>(edges_.size());
  edges_.push_back({name, src, dst, y + 1, gid, std::move(embed_src)});
  edges_.push_back({name + "~", dst, src, y, gid, std::move(embed_dst)});
  return y;
}

GraphOfGroups GogBuilder::build() const { return GraphOfGroups(*this); }

static void check_embedding(const FiniteGroup& sub, const FiniteGroup& big,
                            const std::vector<int>& embed,
                            const std::string& where) {
  if (static_cast<int>(embed.size()) != sub.order())
    throw input_error(where + ": embedding has wrong domain size");
  for (int x : embed)
    if (x < 0 || x >= big.order())
      throw input_error(where + ": embedding image out of range");
  std::set<int> image(embed.begin(), embed.end());
  if (static_cast<int>(image.size()) != sub.order())
    throw input_error(where + ": embedding not injective");
  if (embed[0] != 0) throw input_error(where + ": embedding does not fix 1");
  for (int a = 0; a < sub.order(); ++a)
    for (int b = 0; b < sub.order(); ++b)
      if (embed[sub.mul(a, b)] != big.mul(embed[a], embed[b]))
        throw input_error(where + ": embedding is not a homomorphism");
}

GraphOfGroups::GraphOfGroups(const GogBuilder& b)
    : vertex_names_(b.vertex_names_),
      vertex_groups_(b.vertex_groups_),
      edge_groups_(b.edge_groups_),
      edges_(b.edges_),
      base_(b.base_),
      sg_(Alphabet{}, {}),
      bg_(Alphabet{}, {}) {
  if (vertex_groups_.empty()) throw input_error("graph of groups needs a vertex");
  if (base_ < 0 || base_ >= n_vertices()) throw input_error("bad base vertex");
  for (auto& e : edges_) {
    if (e.src < 0 || e.src >= n_vertices() || e.dst < 0 || e.dst >= n_vertices())
      throw input_error("edge endpoint out of range");
    check_embedding(edge_groups_[e.group], vertex_groups_[e.src], e.embed,
                    "edge " + e.name);
  }

  // Connectivity.
  {
    std::vector<bool> seen(n_vertices(), false);
    std::queue<int> q;
    seen[base_] = true;
    q.push(base_);
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto& e : edges_)
        if (e.src == v && !seen[e.dst]) {
          seen[e.dst] = true;
          ++count;
          q.push(e.dst);
        }
    }
    if (count != n_vertices()) throw input_error("graph of groups not connected");
  }

  // Alphabet: vertex-group elements (without 1), then directed edges.
  vertex_letter_.resize(n_vertices());
  for (int v = 0; v < n_vertices(); ++v) {
    vertex_letter_[v].assign(vertex_groups_[v].order(), -1);
    for (int g = 1; g < vertex_groups_[v].order(); ++g) {
      Letter a = sigma_.add(vertex_names_[v] + "." + vertex_groups_[v].name(g));
      vertex_letter_[v][g] = a;
      letter_info_.push_back({GogLetter::Kind::VertexElement, v, g, -1});
    }
  }
  for (int e = 0; e < n_edges(); ++e) {
    Letter a = sigma_.add(edges_[e].name);
    edge_letter_.push_back(a);
    letter_info_.push_back({GogLetter::Kind::Edge, -1, -1, e});
  }
  for (int v = 0; v < n_vertices(); ++v)
    for (int g = 1; g < vertex_groups_[v].order(); ++g)
      sigma_.set_involution(vertex_letter_[v][g],
                            vertex_letter_[v][vertex_groups_[v].inv(g)]);
  for (int e = 0; e < n_edges(); ++e)
    sigma_.set_involution(edge_letter_[e], edge_letter_[edges_[e].inverse]);

  // BFS spanning tree from the base, edges scanned in declaration order.
  tree_parent_edge_.assign(n_vertices(), -1);
  {
    std::vector<bool> seen(n_vertices(), false);
    std::queue<int> q;
    seen[base_] = true;
    q.push(base_);
    std::set<int> tree;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = 0; e < n_edges(); ++e)
        if (edges_[e].src == v && !seen[edges_[e].dst]) {
          seen[edges_[e].dst] = true;
          tree.insert(e);
          tree.insert(edges_[e].inverse);
          tree_parent_edge_[edges_[e].dst] = edges_[e].inverse;
          q.push(edges_[e].dst);
        }
    }
    tree_edges_.assign(tree.begin(), tree.end());
  }

  // Coset representatives C_y of G_{s(y)} / G_y^y, identity first.
  for (int e = 0; e < n_edges(); ++e) {
    const FiniteGroup& gp = vertex_groups_[edges_[e].src];
    std::set<int> image(edges_[e].embed.begin(), edges_[e].embed.end());
    std::vector<int> reps;
    std::vector<bool> covered(gp.order(), false);
    for (int g = 0; g < gp.order(); ++g) {
      if (covered[g]) continue;
      reps.push_back(g);
      for (int h : image) covered[gp.mul(g, h)] = true;
    }
    coset_reps_.push_back(std::move(reps));
  }

  sg_ = build_sg();
  bg_ = build_britton();
}

Letter GraphOfGroups::vertex_letter(int v, int element) const {
  if (element == 0) throw input_error("the identity has no letter");
  return vertex_letter_[v][element];
}

Letter GraphOfGroups::inverse_letter(Letter a) const { return sigma_.involution(a); }

Word GraphOfGroups::inverse_word(const Word& w) const {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return out;
}

bool GraphOfGroups::in_tree(int e) const {
  return std::binary_search(tree_edges_.begin(), tree_edges_.end(), e);
}

std::vector<int> GraphOfGroups::tree_geodesic(int p, int q) const {
  // Paths to the base along parent edges; strip the common suffix.
  auto to_base = [&](int v) {
    std::vector<int> path;  // edge ids from v toward base
    while (v != base_) {
      int e = tree_parent_edge_[v];
      path.push_back(e);
      v = edges_[e].dst;
    }
    return path;
  };
  std::vector<int> pb = to_base(p), qb = to_base(q);
  while (!pb.empty() && !qb.empty() &&
         pb.back() == qb.back())
    pb.pop_back(), qb.pop_back();
  std::vector<int> out = pb;  // p down toward the meeting point
  for (auto it = qb.rbegin(); it != qb.rend(); ++it)
    out.push_back(edges_[*it].inverse);
  return out;
}

Word GraphOfGroups::tree_path_word(int p, int q) const {
  Word w;
  for (int e : tree_geodesic(p, q)) w.push_back(edge_letter_[e]);
  return w;
}

SemiThueSystem GraphOfGroups::build_sg() const {
  std::vector<std::pair<Word, Word>> rules;
  // gh -> [gh]
  for (int v = 0; v < n_vertices(); ++v) {
    const FiniteGroup& gp = vertex_groups_[v];
    for (int g = 1; g < gp.order(); ++g)
      for (int h = 1; h < gp.order(); ++h) {
        Word lhs{vertex_letter_[v][g], vertex_letter_[v][h]};
        Word rhs;
        int gh = gp.mul(g, h);
        if (gh != 0) rhs.push_back(vertex_letter_[v][gh]);
        rules.emplace_back(lhs, rhs);
      }
  }
  // [c a^y] y -> c y a^{y~}
  for (int e = 0; e < n_edges(); ++e) {
    const GogEdge& ed = edges_[e];
    const GogEdge& rev = edges_[ed.inverse];
    const FiniteGroup& gp = vertex_groups_[ed.src];
    const FiniteGroup& ge = edge_groups_[ed.group];
    for (int c : coset_reps_[e])
      for (int a = 1; a < ge.order(); ++a) {
        int ca = gp.mul(c, ed.embed[a]);
        Word lhs{vertex_letter_[ed.src][ca], edge_letter_[e]};
        Word rhs;
        if (c != 0) rhs.push_back(vertex_letter_[ed.src][c]);
        rhs.push_back(edge_letter_[e]);
        rhs.push_back(vertex_letter_[ed.dst][rev.embed[a]]);
        rules.emplace_back(lhs, rhs);
      }
  }
  // y~ y -> 1
  for (int e = 0; e < n_edges(); ++e)
    rules.emplace_back(Word{edge_letter_[edges_[e].inverse], edge_letter_[e]},
                       Word{});
  return SemiThueSystem(sigma_, std::move(rules));
}

SemiThueSystem GraphOfGroups::build_britton() const {
  std::vector<std::pair<Word, Word>> rules;
  for (int v = 0; v < n_vertices(); ++v) {
    const FiniteGroup& gp = vertex_groups_[v];
    for (int g = 1; g < gp.order(); ++g)
      for (int h = 1; h < gp.order(); ++h) {
        Word lhs{vertex_letter_[v][g], vertex_letter_[v][h]};
        Word rhs;
        int gh = gp.mul(g, h);
        if (gh != 0) rhs.push_back(vertex_letter_[v][gh]);
        rules.emplace_back(lhs, rhs);
      }
  }
  // y~ a^y y -> a^{y~} for every a in the edge group (a = 1 included).
  for (int e = 0; e < n_edges(); ++e) {
    const GogEdge& ed = edges_[e];
    const GogEdge& rev = edges_[ed.inverse];
    const FiniteGroup& ge = edge_groups_[ed.group];
    for (int a = 0; a < ge.order(); ++a) {
      Word lhs;
      lhs.push_back(edge_letter_[ed.inverse]);
      if (ed.embed[a] != 0) lhs.push_back(vertex_letter_[ed.src][ed.embed[a]]);
      lhs.push_back(edge_letter_[e]);
      Word rhs;
      if (rev.embed[a] != 0) rhs.push_back(vertex_letter_[ed.dst][rev.embed[a]]);
      rules.emplace_back(lhs, rhs);
    }
  }
  return SemiThueSystem(sigma_, std::move(rules));
}

std::pair<int, int> GraphOfGroups::factorize(int e, int g) const {
  const GogEdge& ed = edges_[e];
  const FiniteGroup& gp = vertex_groups_[ed.src];
  const FiniteGroup& ge = edge_groups_[ed.group];
  for (int c : coset_reps_[e]) {
    int rest = gp.mul(gp.inv(c), g);
    for (int a = 0; a < ge.order(); ++a)
      if (ed.embed[a] == rest) return {c, a};
  }
  throw std::logic_error("factorize: no coset representative found");
}

Word GraphOfGroups::britton_reduce(const Word& w) const {
  auto r = normalize(bg_, w);
  if (r.fuel_exhausted) throw std::logic_error("britton reduction ran out of fuel");
  return r.word;
}

Word GraphOfGroups::psi_embed(const Word& w) const {
  Word out;
  for (Letter a : w) {
    const GogLetter& info = letter_info_[a];
    if (info.kind == GogLetter::Kind::VertexElement) {
      out.append(tree_path_word(base_, info.vertex));
      out.push_back(a);
      out.append(tree_path_word(info.vertex, base_));
    } else {
      const GogEdge& ed = edges_[info.edge];
      out.append(tree_path_word(base_, ed.src));
      out.push_back(a);
      out.append(tree_path_word(ed.dst, base_));
    }
  }
  return out;
}

bool GraphOfGroups::word_problem(const Word& w) const {
  Word r = britton_reduce(psi_embed(w));
  for (Letter a : r)
    if (letter_info_[a].kind == GogLetter::Kind::Edge) return false;
  // A Britton-reduced path-typed word without edge letters is a single
  // vertex-group letter or empty.
  if (r.size() > 1)
    throw std::logic_error("britton-reduced loop word with several vertex letters");
  return r.empty();
}

Word GraphOfGroups::normal_form(const Word& w) const {
  auto r = normalize(sg_, psi_embed(w));
  if (r.fuel_exhausted) throw std::logic_error("S_G normalization ran out of fuel");
  return r.word;
}

GraphOfGroups::Presentation GraphOfGroups::pi1_presentation() const {
  Presentation pres;
  for (int v = 0; v < n_vertices(); ++v) {
    const FiniteGroup& gp = vertex_groups_[v];
    for (int g = 1; g < gp.order(); ++g)
      for (int h = 1; h < gp.order(); ++h) {
        Word rel{vertex_letter_[v][g], vertex_letter_[v][h]};
        int gh = gp.mul(g, h);
        if (gh != 0) rel.push_back(vertex_letter_[v][gp.inv(gh)]);
        pres.relators.push_back(rel);
      }
  }
  for (int e = 0; e < n_edges(); ++e) {
    const GogEdge& ed = edges_[e];
    const GogEdge& rev = edges_[ed.inverse];
    const FiniteGroup& ge = edge_groups_[ed.group];
    const FiniteGroup& gq = vertex_groups_[ed.dst];
    for (int a = 0; a < ge.order(); ++a) {
      Word rel;
      rel.push_back(edge_letter_[ed.inverse]);
      if (ed.embed[a] != 0) rel.push_back(vertex_letter_[ed.src][ed.embed[a]]);
      rel.push_back(edge_letter_[e]);
      if (rev.embed[a] != 0)
        rel.push_back(vertex_letter_[ed.dst][gq.inv(rev.embed[a])]);
      pres.relators.push_back(rel);
    }
  }
  for (int e : tree_edges_) pres.relators.push_back(Word{edge_letter_[e]});
  return pres;
}

Word GraphOfGroups::edge_sequence(const Word& w) const {
  Word out;
  for (Letter a : w)
    if (letter_info_[a].kind == GogLetter::Kind::Edge) out.push_back(a);
  return out;
}

std::optional<int> GraphOfGroups::path_type(const Word& w, int start) const {
  int cur = start;
  for (Letter a : w) {
    const GogLetter& info = letter_info_[a];
    if (info.kind == GogLetter::Kind::VertexElement) {
      if (info.vertex != cur) return std::nullopt;
    } else {
      if (edges_[info.edge].src != cur) return std::nullopt;
      cur = edges_[info.edge].dst;
    }
  }
  return cur;
}

std::vector<std::pair<Word, BstNode>> GraphOfGroups::bst_children(
    const BstNode& node) const {
  std::vector<std::pair<Word, BstNode>> out;
  int last_edge = -1;
  for (auto it = node.word.letters.rbegin(); it != node.word.letters.rend(); ++it)
    if (letter_info_[*it].kind == GogLetter::Kind::Edge) {
      last_edge = letter_info_[*it].edge;
      break;
    }
  for (int e = 0; e < n_edges(); ++e) {
    if (edges_[e].src != node.vertex) continue;
    for (int c : coset_reps_[e]) {
      if (c == 0 && last_edge >= 0 && e == edges_[last_edge].inverse)
        continue;  // would backtrack in the tree
      Word label;
      if (c != 0) label.push_back(vertex_letter_[node.vertex][c]);
      label.push_back(edge_letter_[e]);
      out.push_back({label, BstNode{node.word + label, edges_[e].dst}});
    }
  }
  return out;
}

std::vector<BstBallNode> GraphOfGroups::bst_ball(int depth) const {
  std::vector<BstBallNode> out;
  out.push_back({Word{}, base_, -1, Word{}, vertex_groups_[base_].order()});
  std::size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      BstNode node{out[i].word, out[i].vertex};
      for (auto& [label, child] : bst_children(node))
        out.push_back({child.word, child.vertex, static_cast<int>(i), label,
                       vertex_groups_[child.vertex].order()});
    }
    level_begin = level_end;
  }
  return out;
}

Permutation SymHom::evaluate(const std::vector<Permutation>& images,
                             const Word& w) const {
  Permutation p = Permutation::identity(degree);
  for (Letter a : w) p = p * images[a];
  return p;
}

SymHom GraphOfGroups::sym_homomorphism() const {
  int degree = 1;
  for (auto& g : vertex_groups_) degree = std::lcm(degree, g.order());

  // Edge-group action through a vertex embedding.
  auto edge_action = [&](const FiniteGroup& ge, const std::vector<int>& embed,
                         const std::vector<Permutation>& vertex_act) {
    std::vector<Permutation> per;
    per.reserve(ge.order());
    for (int a = 0; a < ge.order(); ++a) per.push_back(vertex_act[embed[a]]);
    return GroupAction(&ge, std::move(per));
  };

  auto initial_actions = [&]() {
    std::vector<std::vector<Permutation>> acts;
    for (auto& g : vertex_groups_) {
      GroupAction act = free_action(g, degree);
      std::vector<Permutation> per;
      for (int e = 0; e < g.order(); ++e) per.push_back(act.act(e));
      acts.push_back(std::move(per));
    }
    return acts;
  };

  SymHom hom;
  hom.degree = degree;

  // F(G)-level: untouched vertex actions, one conjugator per edge pair.
  {
    auto acts = initial_actions();
    std::vector<Permutation> images(sigma_.size(), Permutation::identity(degree));
    for (int v = 0; v < n_vertices(); ++v)
      for (int g = 1; g < vertex_groups_[v].order(); ++g)
        images[vertex_letter_[v][g]] = acts[v][g];
    for (int e = 0; e < n_edges(); ++e) {
      if (edges_[e].inverse < e) continue;
      const GogEdge& ed = edges_[e];
      const GogEdge& rev = edges_[ed.inverse];
      const FiniteGroup& ge = edge_groups_[ed.group];
      GroupAction alpha = edge_action(ge, rev.embed, acts[ed.dst]);
      GroupAction beta = edge_action(ge, ed.embed, acts[ed.src]);
      Permutation phi = conjugator(alpha, beta);
      images[edge_letter_[e]] = phi;
      images[edge_letter_[ed.inverse]] = phi.inverse();
    }
    hom.flevel = std::move(images);
  }

  // pi1-level: conjugate vertex actions along the spanning tree so that tree
  // letters act trivially.
  {
    auto acts = initial_actions();
    std::vector<bool> fixed(n_vertices(), false);
    fixed[base_] = true;
    std::queue<int> q;
    q.push(base_);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : tree_edges_) {
        const GogEdge& ed = edges_[e];
        if (ed.src != v || fixed[ed.dst]) continue;
        const GogEdge& rev = edges_[ed.inverse];
        const FiniteGroup& ge = edge_groups_[ed.group];
        GroupAction alpha = edge_action(ge, ed.embed, acts[ed.src]);
        GroupAction beta = edge_action(ge, rev.embed, acts[ed.dst]);
        // act_dst := phi^-1 act_dst phi makes the two edge actions agree.
        Permutation phi = conjugator(alpha, beta);
        Permutation phi_inv = phi.inverse();
        for (auto& p : acts[ed.dst]) p = phi_inv * (p * phi);
        fixed[ed.dst] = true;
        q.push(ed.dst);
      }
    }
    std::vector<Permutation> images(sigma_.size(), Permutation::identity(degree));
    for (int v = 0; v < n_vertices(); ++v)
      for (int g = 1; g < vertex_groups_[v].order(); ++g)
        images[vertex_letter_[v][g]] = acts[v][g];
    for (int e = 0; e < n_edges(); ++e) {
      if (edges_[e].inverse < e) continue;
      if (in_tree(e)) continue;  // identity
      const GogEdge& ed = edges_[e];
      const GogEdge& rev = edges_[ed.inverse];
      const FiniteGroup& ge = edge_groups_[ed.group];
      GroupAction alpha = edge_action(ge, rev.embed, acts[ed.dst]);
      GroupAction beta = edge_action(ge, ed.embed, acts[ed.src]);
      Permutation phi = conjugator(alpha, beta);
      images[edge_letter_[e]] = phi;
      images[edge_letter_[ed.inverse]] = phi.inverse();
    }
    hom.pi1level = std::move(images);
  }

  // Every defining relator must map to the identity.
  auto pres = pi1_presentation();
  for (auto& rel : pres.relators) {
    bool tree_letter = rel.size() == 1 &&
                       letter_info_[rel[0]].kind == GogLetter::Kind::Edge;
    if (!hom.evaluate(hom.pi1level, rel).is_identity())
      throw std::logic_error("sym_homomorphism: relation check failed");
    if (!tree_letter && !hom.evaluate(hom.flevel, rel).is_identity())
      throw std::logic_error("sym_homomorphism: F(G) relation check failed");
  }
  return hom;
}

FreeSubgroupData GraphOfGroups::free_subgroup_data() const {
  SymHom hom = sym_homomorphism();
  std::uint64_t n = permutation_group_order(hom.pi1level);

  // r = 1 + N (sum_y 1/(2|G_y|) - sum_P 1/|G_P|), as an exact fraction.
  std::int64_t num = 0, den = 1;
  auto add = [&](std::int64_t n2, std::int64_t d2) {
    num = num * d2 + n2 * den;
    den *= d2;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  };
  for (int e = 0; e < n_edges(); ++e) add(1, 2 * edge_group(e).order());
  for (int v = 0; v < n_vertices(); ++v) add(-1, vertex_groups_[v].order());
  std::int64_t rnum = static_cast<std::int64_t>(n) * num;
  if (rnum % den != 0)
    throw std::logic_error("free subgroup rank formula is not integral");
  std::int64_t rank = 1 + rnum / den;
  if (rank < 0) throw std::logic_error("negative free subgroup rank");
  return {n, rank};
}

std::pair<Word, int> VFStructure::product(int rep, Letter a) const {
  if (rep < 0) {
    // 1 * a
    if (is_free_letter(a)) return {Word{a}, -1};
    return {Word{}, a};
  }
  return {w_table[rep][a], r_table[rep][a]};
}

}  // namespace vf
