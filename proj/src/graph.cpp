#include "vfree/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace vf {

int SimpleGraph::add_vertex(const std::string& key) {
  if (index_.count(key)) throw input_error("duplicate vertex key '" + key + "'");
  int v = n();
  keys_.push_back(key);
  index_.emplace(key, v);
  adj_.emplace_back();
  if (!dist_.empty()) dist_.push_back(-1);
  if (!sphere_.empty()) sphere_.push_back(false);
  return v;
}

int SimpleGraph::ensure_vertex(const std::string& key) {
  auto it = index_.find(key);
  return it != index_.end() ? it->second : add_vertex(key);
}

int SimpleGraph::vertex(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw input_error("unknown vertex key '" + key + "'");
  return it->second;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) return;  // no loops
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw input_error("edge endpoint out of range");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // no multi-edges
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t SimpleGraph::n_edges() const {
  std::size_t total = 0;
  for (auto& a : adj_) total += a.size();
  return total / 2;
}

bool SimpleGraph::connected() const {
  if (n() == 0) return true;
  std::vector<int> all(n());
  std::iota(all.begin(), all.end(), 0);
  return connected_subset(all);
}

bool SimpleGraph::connected_subset(const std::vector<int>& verts) const {
  if (verts.empty()) return true;
  std::vector<bool> in(n(), false);
  for (int v : verts) in[v] = true;
  std::vector<bool> seen(n(), false);
  std::deque<int> q{verts[0]};
  seen[verts[0]] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj_[v])
      if (in[u] && !seen[u]) {
        seen[u] = true;
        ++count;
        q.push_back(u);
      }
  }
  return count == verts.size();
}

std::vector<std::vector<int>> SimpleGraph::components(
    const std::vector<bool>& allowed) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n(), false);
  for (int s = 0; s < n(); ++s) {
    if (!allowed[s] || seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int u : adj_[v])
        if (allowed[u] && !seen[u]) {
          seen[u] = true;
          q.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> SimpleGraph::bfs_distances(int from) const {
  std::vector<int> d(n(), -1);
  std::deque<int> q{from};
  d[from] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj_[v])
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
  }
  return d;
}

int SimpleGraph::distance(int u, int v) const { return bfs_distances(u)[v]; }

void SimpleGraph::set_distance(int v, int d) {
  if (dist_.empty()) dist_.assign(n(), -1);
  dist_[v] = d;
}

void SimpleGraph::set_sphere(int v, bool f) {
  if (sphere_.empty()) sphere_.assign(n(), false);
  sphere_[v] = f;
}

std::vector<int> SimpleGraph::interior(int r) const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (dist(v) >= 0 && dist(v) < r) out.push_back(v);
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts,
                                 std::vector<int>* old_to_new) const {
  SimpleGraph out;
  std::vector<int> map(n(), -1);
  for (int v : verts) {
    int nv = out.add_vertex(keys_[v]);
    map[v] = nv;
    if (!dist_.empty()) out.set_distance(nv, dist_[v]);
    if (!sphere_.empty()) out.set_sphere(nv, sphere_[v]);
  }
  for (int v : verts)
    for (int u : adj_[v])
      if (map[u] >= 0 && map[v] < map[u]) out.add_edge(map[v], map[u]);
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

SimpleGraph cayley_ball(const std::string& identity_key,
                        const std::vector<GeneratorStep>& steps, int radius) {
  SimpleGraph g;
  int origin = g.add_vertex(identity_key);
  g.set_distance(origin, 0);
  g.set_sphere(origin, radius == 0);
  std::deque<int> frontier{origin};
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop_front();
    if (g.dist(v) >= radius) continue;
    for (auto& step : steps) {
      std::string key = step(g.key(v));
      if (!g.has_vertex(key)) {
        int u = g.add_vertex(key);
        g.set_distance(u, g.dist(v) + 1);
        g.set_sphere(u, g.dist(v) + 1 == radius);
        frontier.push_back(u);
      }
    }
  }
  // Induced edges, including between sphere vertices.
  for (int v = 0; v < g.n(); ++v)
    for (auto& step : steps) {
      std::string key = step(g.key(v));
      if (g.has_vertex(key)) g.add_edge(v, g.vertex(key));
    }
  return g;
}

std::size_t TreeDecomposition::bag_size() const {
  std::size_t m = 0;
  for (auto& b : bags) m = std::max(m, b.size());
  return m;
}

void TreeDecomposition::add_tree_edge(int a, int b) {
  tree_adj[a].push_back(b);
  tree_adj[b].push_back(a);
}

static bool is_tree(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  std::size_t edges = 0;
  for (auto& a : adj) edges += a.size();
  if (edges != 2 * static_cast<std::size_t>(n - 1)) return false;
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push_back(u);
      }
  }
  return count == n;
}

std::optional<TdViolation> validate_td(const SimpleGraph& g,
                                       const TreeDecomposition& td) {
  if (td.bags.size() != td.tree_adj.size() || !is_tree(td.tree_adj))
    return TdViolation{"tree", "decomposition graph is not a tree"};
  std::vector<bool> covered(g.n(), false);
  for (auto& b : td.bags)
    for (int v : b) {
      if (v < 0 || v >= g.n()) return TdViolation{"T1", "bag vertex out of range"};
      covered[v] = true;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) return TdViolation{"T1", "vertex " + g.key(v) + " in no bag"};
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (auto& b : td.bags)
      if (std::binary_search(b.begin(), b.end(), u) &&
          std::binary_search(b.begin(), b.end(), v)) {
        found = true;
        break;
      }
    if (!found)
      return TdViolation{"T2", "edge {" + g.key(u) + "," + g.key(v) + "} in no bag"};
  }
  // T3: the bags containing v induce a connected subtree.
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> holding;
    for (int t = 0; t < td.n_bags(); ++t)
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v))
        holding.push_back(t);
    if (holding.empty()) continue;
    std::set<int> in(holding.begin(), holding.end());
    std::set<int> seen{holding[0]};
    std::deque<int> q{holding[0]};
    while (!q.empty()) {
      int t = q.front();
      q.pop_front();
      for (int s : td.tree_adj[t])
        if (in.count(s) && !seen.count(s)) {
          seen.insert(s);
          q.push_back(s);
        }
    }
    if (seen.size() != in.size())
      return TdViolation{"T3", "bags of vertex " + g.key(v) + " are disconnected"};
  }
  return std::nullopt;
}

namespace {

TreeDecomposition drop_bags(const TreeDecomposition& td,
                            const std::vector<bool>& keep) {
  TreeDecomposition out;
  std::vector<int> remap(td.n_bags(), -1);
  for (int t = 0; t < td.n_bags(); ++t)
    if (keep[t]) {
      remap[t] = out.n_bags();
      out.bags.push_back(td.bags[t]);
      out.tree_adj.emplace_back();
    }
  for (int t = 0; t < td.n_bags(); ++t) {
    if (!keep[t]) continue;
    for (int s : td.tree_adj[t])
      if (keep[s] && remap[t] < remap[s]) out.add_tree_edge(remap[t], remap[s]);
  }
  return out;
}

}  // namespace

TreeDecomposition normalize_td(const SimpleGraph& g, const TreeDecomposition& td0) {
  TreeDecomposition td = td0;
  // Empty bags hang off as whole subtrees; the non-empty bags stay connected.
  {
    std::vector<bool> keep(td.n_bags(), false);
    bool any = false;
    for (int t = 0; t < td.n_bags(); ++t) {
      keep[t] = !td.bags[t].empty();
      any = any || keep[t];
    }
    if (!any) keep[0] = true;  // decomposition of the empty graph
    td = drop_bags(td, keep);
    if (!is_tree(td.tree_adj))
      throw std::logic_error("normalize_td: empty bags did not form subtrees");
  }
  // Contract an adjacent comparable pair until none remains.
  for (;;) {
    int from = -1, into = -1;
    for (int t = 0; t < td.n_bags() && from < 0; ++t)
      for (int s : td.tree_adj[t]) {
        if (std::includes(td.bags[s].begin(), td.bags[s].end(),
                          td.bags[t].begin(), td.bags[t].end())) {
          from = t;
          into = s;
          break;
        }
      }
    if (from < 0) break;
    // Reattach the neighbors of `from` to `into` and delete `from`.
    for (int s : td.tree_adj[from]) {
      auto& a = td.tree_adj[s];
      a.erase(std::remove(a.begin(), a.end(), from), a.end());
      if (s != into) {
        a.push_back(into);
        td.tree_adj[into].push_back(s);
      }
    }
    td.tree_adj[from].clear();
    std::vector<bool> keep(td.n_bags(), true);
    keep[from] = false;
    td = drop_bags(td, keep);
  }
  if (auto v = validate_td(g, td))
    throw std::logic_error("normalize_td broke the decomposition: " + v->detail);
  return td;
}

TreeDecomposition neighborhood_td(const SimpleGraph& g,
                                  const TreeDecomposition& td, int l) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    std::set<int> cur(bag.begin(), bag.end());
    for (int step = 0; step < l; ++step) {
      std::set<int> next = cur;
      for (int v : cur)
        for (int u : g.neighbors(v)) next.insert(u);
      cur = std::move(next);
    }
    bag.assign(cur.begin(), cur.end());
  }
  return out;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (removed[v]) continue;
      std::vector<int> nb;
      for (int u : g.neighbors(v))
        if (!removed[u]) nb.push_back(u);
      bool simplicial = true;
      for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
        for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j)
          if (!g.adjacent(nb[i], nb[j])) simplicial = false;
      if (simplicial) pick = v;
    }
    if (pick < 0) return std::nullopt;
    removed[pick] = true;
    order.push_back(pick);
  }
  return order;
}

bool is_chordal(const SimpleGraph& g) {
  return perfect_elimination_ordering(g).has_value();
}

TreeDecomposition clique_tree(const SimpleGraph& g) {
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw input_error("clique_tree requires a chordal graph");
  TreeDecomposition td;
  if (g.n() == 0) {
    td.bags.push_back({});
    td.tree_adj.emplace_back();
    return td;
  }
  // Build back-to-front: insert v1 last; its higher neighbors form a clique.
  for (auto it = peo->rbegin(); it != peo->rend(); ++it) {
    int v = *it;
    std::vector<int> clique{v};
    for (int u : g.neighbors(v)) {
      // u comes later in the elimination order iff it was inserted already.
      bool inserted = false;
      for (auto jt = it.base(); jt != peo->end(); ++jt)
        if (*jt == u) inserted = true;
      if (inserted) clique.push_back(u);
    }
    std::sort(clique.begin(), clique.end());
    std::vector<int> nbset(clique.begin() + 0, clique.end());
    nbset.erase(std::find(nbset.begin(), nbset.end(), v));
    if (td.bags.empty()) {
      td.bags.push_back(clique);
      td.tree_adj.emplace_back();
      continue;
    }
    // If the neighbors already form a maximal clique bag, extend that bag;
    // otherwise attach a new bag to some bag containing them.
    int equal = -1, host = -1;
    for (int t = 0; t < td.n_bags(); ++t) {
      if (td.bags[t] == nbset) {
        equal = t;
        break;
      }
      if (host < 0 && std::includes(td.bags[t].begin(), td.bags[t].end(),
                                    nbset.begin(), nbset.end()))
        host = t;
    }
    if (equal >= 0) {
      td.bags[equal] = clique;
    } else {
      if (host < 0) throw std::logic_error("clique_tree: no bag holds the neighbors");
      td.bags.push_back(clique);
      td.tree_adj.emplace_back();
      td.add_tree_edge(host, td.n_bags() - 1);
    }
  }
  for (auto& b : td.bags)
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j]))
          throw std::logic_error("clique_tree produced a non-clique bag");
  if (auto v = validate_td(g, td))
    throw std::logic_error("clique_tree produced an invalid decomposition: " + v->detail);
  return td;
}

MullerSchuppTd muller_schupp_td(const SimpleGraph& ball, int radius) {
  MullerSchuppTd out;
  TreeDecomposition& td = out.td;
  // Root bag: the radius-1 ball.
  std::vector<int> root;
  for (int v = 0; v < ball.n(); ++v)
    if (ball.dist(v) >= 0 && ball.dist(v) <= 1) root.push_back(v);
  td.bags.push_back(root);
  td.tree_adj.emplace_back();

  // comp_bag[c] = bag index of component c at the previous level.
  std::vector<std::vector<int>> prev_comps;  // sorted vertex lists
  std::vector<int> prev_bag;
  int levels = 0;
  for (int n_level = 1; n_level < radius; ++n_level) {
    std::vector<bool> outside(ball.n(), false);
    for (int v = 0; v < ball.n(); ++v) outside[v] = ball.dist(v) > n_level;
    auto comps = ball.components(outside);
    if (comps.empty()) break;
    std::vector<int> bag_of;
    for (auto& comp : comps) {
      // Vertex boundary: both endpoints of edges leaving the component.
      std::set<int> beta;
      for (int v : comp)
        for (int u : ball.neighbors(v))
          if (!outside[u]) {
            beta.insert(v);
            beta.insert(u);
          }
      std::vector<int> bag(beta.begin(), beta.end());
      td.bags.push_back(bag);
      td.tree_adj.emplace_back();
      int id = td.n_bags() - 1;
      bag_of.push_back(id);
      // Parent: the previous-level component containing this one.
      if (n_level == 1) {
        td.add_tree_edge(0, id);
      } else {
        int parent = -1;
        for (std::size_t c = 0; c < prev_comps.size(); ++c)
          if (std::binary_search(prev_comps[c].begin(), prev_comps[c].end(),
                                 comp[0])) {
            parent = prev_bag[c];
            break;
          }
        if (parent < 0) throw std::logic_error("muller_schupp_td: orphan component");
        td.add_tree_edge(parent, id);
      }
    }
    prev_comps = std::move(comps);
    prev_bag = std::move(bag_of);
    levels = n_level;
  }
  out.levels = levels;
  out.sphere_bag.assign(td.n_bags(), false);
  for (int t = 0; t < td.n_bags(); ++t)
    for (int v : td.bags[t])
      if (ball.sphere(v)) out.sphere_bag[t] = true;
  return out;
}

TreeDecomposition restrict_td(const TreeDecomposition& td,
                              const std::vector<int>& old_to_new) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    std::vector<int> nb;
    for (int v : bag)
      if (old_to_new[v] >= 0) nb.push_back(old_to_new[v]);
    std::sort(nb.begin(), nb.end());
    bag = std::move(nb);
  }
  // Contract empty bags into a neighbor to keep a tree over the rest.
  for (;;) {
    int empty = -1;
    for (int t = 0; t < out.n_bags(); ++t)
      if (out.bags[t].empty() && out.n_bags() > 1) {
        empty = t;
        break;
      }
    if (empty < 0) break;
    if (out.tree_adj[empty].empty())
      throw std::logic_error("restrict_td: isolated empty bag");
    int into = out.tree_adj[empty][0];
    for (int s : out.tree_adj[empty]) {
      auto& a = out.tree_adj[s];
      a.erase(std::remove(a.begin(), a.end(), empty), a.end());
      if (s != into) {
        a.push_back(into);
        out.tree_adj[into].push_back(s);
      }
    }
    out.tree_adj[empty].clear();
    std::vector<bool> keep(out.n_bags(), true);
    keep[empty] = false;
    TreeDecomposition next;
    std::vector<int> remap(out.n_bags(), -1);
    for (int t = 0; t < out.n_bags(); ++t)
      if (keep[t]) {
        remap[t] = next.n_bags();
        next.bags.push_back(out.bags[t]);
        next.tree_adj.emplace_back();
      }
    for (int t = 0; t < out.n_bags(); ++t) {
      if (!keep[t]) continue;
      for (int s : out.tree_adj[t])
        if (keep[s] && remap[t] < remap[s]) next.add_tree_edge(remap[t], remap[s]);
    }
    out = std::move(next);
  }
  return out;
}

int max_bag_diameter(const SimpleGraph& g, const TreeDecomposition& td,
                     const std::vector<bool>& select) {
  int best = 0;
  for (int t = 0; t < td.n_bags(); ++t) {
    if (t < static_cast<int>(select.size()) && !select[t]) continue;
    for (std::size_t i = 0; i < td.bags[t].size(); ++i) {
      auto d = g.bfs_distances(td.bags[t][i]);
      for (std::size_t j = i + 1; j < td.bags[t].size(); ++j)
        best = std::max(best, d[td.bags[t][j]]);
    }
  }
  return best;
}

int treewidth_exact(const SimpleGraph& g) {
  const int n = g.n();
  if (n > 20) throw input_error("treewidth_exact supports at most 20 vertices");
  if (n == 0) return 0;
  // q(S, v): neighbors of v inside S via paths internal to V \ S.
  auto q = [&](unsigned S, int v) {
    std::vector<bool> seen(n, false);
    std::deque<int> queue{v};
    seen[v] = true;
    int count = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(x)) {
        if (seen[u]) continue;
        seen[u] = true;
        if (S & (1u << u))
          ++count;  // stop here, counts as a fill neighbor
        else
          queue.push_back(u);
      }
    }
    return count;
  };
  std::vector<int> tw(1u << n, -1);
  tw[0] = -1;  // width of the empty suffix; max() identity below
  // Iterate subsets in increasing popcount order implicitly: S depends on
  // subsets of itself only.
  for (unsigned S = 1; S < (1u << n); ++S) {
    int best = n;
    for (int v = 0; v < n; ++v) {
      if (!(S & (1u << v))) continue;
      int rest = tw[S & ~(1u << v)];
      best = std::min(best, std::max(q(S, v), rest));
    }
    tw[S] = best;
  }
  return tw[(1u << n) - 1];
}

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  // Bron-Kerbosch without pivoting; fine at ball scale.
  std::vector<int> R, P(g.n()), X;
  std::iota(P.begin(), P.end(), 0);
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          out.push_back(r);
          return;
        }
        std::vector<int> pc = p;
        for (int v : pc) {
          std::vector<int> np, nx;
          for (int u : p)
            if (g.adjacent(u, v)) np.push_back(u);
          for (int u : x)
            if (g.adjacent(u, v)) nx.push_back(u);
          r.push_back(v);
          bk(r, np, nx);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  bk(R, P, X);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph gog_cayley_ball(const GraphOfGroups& g,
                            const std::vector<Word>& generators, int radius) {
  std::vector<Word> gens;
  for (auto& w : generators) {
    Word nf = g.normal_form(w);
    if (nf.empty()) continue;
    gens.push_back(nf);
    Word inv = g.normal_form(g.inverse_word(nf));
    if (inv != nf) gens.push_back(inv);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<GeneratorStep> steps;
  for (auto& w : gens)
    steps.push_back([&g, w](const std::string& key) {
      Word cur = g.sigma().parse_word(key);
      Word next = normalize(g.sg(), cur + w).word;
      return g.sigma().format_word(next);
    });
  return cayley_ball("_", steps, radius);
}

ChordalExtension extend_generators_for_chordality(
    const GraphOfGroups& g, const std::vector<Word>& base_generators,
    int radius) {
  std::set<Word> gens;
  for (auto& w : base_generators) {
    Word nf = g.normal_form(w);
    if (!nf.empty()) gens.insert(nf);
  }
  // Representative bags at 1: the vertex groups, and the edge bags
  // G_y^y union G_y^y y (one per undirected edge).
  std::vector<std::vector<Word>> bags;
  for (int v = 0; v < g.n_vertices(); ++v) {
    std::vector<Word> bag;
    for (int e = 0; e < g.vertex_group(v).order(); ++e) {
      Word w;
      if (e != 0) w.push_back(g.vertex_letter(v, e));
      bag.push_back(g.normal_form(w));
    }
    bags.push_back(bag);
  }
  for (int e = 0; e < g.n_edges(); ++e) {
    if (g.edge(e).inverse < e) continue;
    std::vector<Word> bag;
    const FiniteGroup& ge = g.edge_group(e);
    for (int a = 0; a < ge.order(); ++a) {
      Word w;
      int img = g.edge(e).embed[a];
      if (img != 0) w.push_back(g.vertex_letter(g.edge(e).src, img));
      bag.push_back(g.normal_form(w));
      w.push_back(g.edge_letter(e));
      bag.push_back(g.normal_form(w));
    }
    bags.push_back(bag);
  }
  for (auto& bag : bags)
    for (auto& u : bag)
      for (auto& v : bag) {
        if (u == v) continue;
        Word prod = g.normal_form(g.inverse_word(u) + v);
        if (!prod.empty()) gens.insert(prod);
      }
  ChordalExtension out;
  out.generators.assign(gens.begin(), gens.end());
  out.ball = gog_cayley_ball(g, out.generators, radius);
  std::vector<int> old_to_new;
  SimpleGraph inner = out.ball.induced(out.ball.interior(radius), &old_to_new);
  if (!is_chordal(inner))
    throw std::logic_error("extended generating set did not make the ball chordal");
  return out;
}

}  // namespace vf
