#include "vfree/cuts.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

namespace vf {

bool VertexSet::empty() const {
  for (auto w : bits)
    if (w) return false;
  return true;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : bits) c += std::popcount(w);
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & o.bits[i]) return true;
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & ~o.bits[i]) return false;
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet out(n);
  for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = ~bits[i];
  if (n & 63) out.bits.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  return out;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (test(v)) out.push_back(v);
  return out;
}

namespace {

bool side_connected(const SimpleGraph& g, const VertexSet& side) {
  int start = -1;
  for (int v = 0; v < g.n() && start < 0; ++v)
    if (side.test(v)) start = v;
  if (start < 0) return false;
  VertexSet seen(g.n());
  seen.set(start);
  std::deque<int> q{start};
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.neighbors(v))
      if (side.test(u) && !seen.test(u)) {
        seen.set(u);
        ++count;
        q.push_back(u);
      }
  }
  return count == side.count();
}

bool touches_sphere(const SimpleGraph& g, const VertexSet& side) {
  for (int v = 0; v < g.n(); ++v)
    if (side.test(v) && g.sphere(v)) return true;
  return false;
}

}  // namespace

Cut make_cut(const SimpleGraph& g, const VertexSet& side) {
  Cut c;
  c.side = side;
  VertexSet comp = side.complement();
  if (side.empty() || comp.empty())
    throw input_error("cut side or complement is empty");
  if (!side_connected(g, side) || !side_connected(g, comp))
    throw input_error("cut side or complement is disconnected");
  for (auto [u, v] : g.edges())
    if (side.test(u) != side.test(v))
      c.boundary.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(c.boundary.begin(), c.boundary.end());
  c.side_infinite = touches_sphere(g, side);
  c.comp_infinite = touches_sphere(g, comp);
  return c;
}

Cut complement_cut(const SimpleGraph& g, const Cut& c) {
  Cut out;
  out.side = c.side.complement();
  out.boundary = c.boundary;
  out.side_infinite = c.comp_infinite;
  out.comp_infinite = c.side_infinite;
  (void)g;
  return out;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

/// Removed-edge-aware shortest path between the endpoints of e, as an edge list.
std::optional<EdgeList> detour_path(const SimpleGraph& g,
                                    const std::set<std::pair<int, int>>& removed,
                                    std::pair<int, int> e) {
  auto blocked = [&](int a, int b) {
    return removed.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::vector<int> prev(g.n(), -2);
  std::deque<int> q{e.first};
  prev[e.first] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == e.second) break;
    for (int u : g.neighbors(v)) {
      if (blocked(v, u) || prev[u] != -2) continue;
      prev[u] = v;
      q.push_back(u);
    }
  }
  if (prev[e.second] == -2) return std::nullopt;
  EdgeList path;
  for (int v = e.second; prev[v] != -1; v = prev[v])
    path.emplace_back(std::min(v, prev[v]), std::max(v, prev[v]));
  std::reverse(path.begin(), path.end());
  return path;
}

/// Candidate boundary sets containing e of size <= k, per the bridge /
/// detour-path recursion.
void candidate_boundaries(const SimpleGraph& g,
                          std::set<std::pair<int, int>>& removed,
                          std::pair<int, int> e, int k,
                          std::set<EdgeList>& out, EdgeList& acc) {
  acc.push_back(e);
  EdgeList sorted = acc;
  std::sort(sorted.begin(), sorted.end());
  out.insert(sorted);
  if (k >= 2) {
    removed.insert(e);
    if (auto path = detour_path(g, removed, e)) {
      for (auto f : *path) candidate_boundaries(g, removed, f, k - 1, out, acc);
    }
    removed.erase(e);
  }
  acc.pop_back();
}

}  // namespace

std::vector<Cut> enumerate_kcuts(const SimpleGraph& g, const std::vector<int>& S,
                                 int k) {
  std::set<EdgeList> candidates;
  std::vector<bool> in_s(g.n(), false);
  for (int v : S) in_s[v] = true;
  for (auto e : g.edges()) {
    if (!in_s[e.first] && !in_s[e.second]) continue;
    std::set<std::pair<int, int>> removed;
    EdgeList acc;
    candidate_boundaries(g, removed, e, k, candidates, acc);
  }
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Cut> out;
  for (auto& cand : candidates) {
    std::set<std::pair<int, int>> removed(cand.begin(), cand.end());
    auto blocked = [&](int a, int b) {
      return removed.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    // Components of g minus the candidate edges.
    std::vector<int> comp_of(g.n(), -1);
    int n_comp = 0;
    for (int s = 0; s < g.n(); ++s) {
      if (comp_of[s] >= 0) continue;
      comp_of[s] = n_comp;
      std::deque<int> q{s};
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.neighbors(v))
          if (comp_of[u] < 0 && !blocked(v, u)) {
            comp_of[u] = n_comp;
            q.push_back(u);
          }
      }
      ++n_comp;
    }
    if (n_comp < 2) continue;
    for (int c = 0; c < n_comp; ++c) {
      VertexSet side(g.n());
      for (int v = 0; v < g.n(); ++v)
        if (comp_of[v] == c) side.set(v);
      VertexSet comp = side.complement();
      if (comp.empty() || !side_connected(g, comp)) continue;
      Cut cut = make_cut(g, side);
      if (cut.weight() > k) continue;
      bool meets_s = false;
      for (auto [u, v] : cut.boundary)
        meets_s = meets_s || in_s[u] || in_s[v];
      if (!meets_s) continue;
      if (seen.insert(cut.side.bits).second) out.push_back(std::move(cut));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.side.count() != b.side.count()) return a.side.count() < b.side.count();
    return a.side.bits < b.side.bits;
  });
  return out;
}

std::array<VertexSet, 4> corners(const Cut& c, const Cut& d) {
  const int n = c.side.n;
  std::array<VertexSet, 4> out{VertexSet(n), VertexSet(n), VertexSet(n),
                               VertexSet(n)};
  VertexSet cc = c.side.complement(), dc = d.side.complement();
  for (std::size_t i = 0; i < c.side.bits.size(); ++i) {
    out[0].bits[i] = c.side.bits[i] & d.side.bits[i];
    out[1].bits[i] = c.side.bits[i] & dc.bits[i];
    out[2].bits[i] = cc.bits[i] & d.side.bits[i];
    out[3].bits[i] = cc.bits[i] & dc.bits[i];
  }
  return out;
}

bool is_nested(const Cut& c, const Cut& d) {
  auto cs = corners(c, d);
  return cs[0].empty() || cs[1].empty() || cs[2].empty() || cs[3].empty();
}

PathWindow make_periodic_path(
    const SimpleGraph& ball, const std::string& identity_key,
    const std::string& base_key,
    const std::function<std::string(const std::string&, bool)>& step_period,
    int margin) {
  // Torsion check: p, p^2, ..., p^16 must differ from 1.
  {
    std::string cur = identity_key;
    for (int i = 1; i <= 16; ++i) {
      cur = step_period(cur, true);
      if (cur == identity_key)
        throw input_error("periodic path period has finite order");
    }
  }
  PathWindow w;
  w.margin = margin;
  std::deque<std::string> keys{base_key};
  for (std::string cur = base_key;;) {
    cur = step_period(cur, true);
    if (!ball.has_vertex(cur)) break;
    keys.push_back(cur);
  }
  for (std::string cur = base_key;;) {
    cur = step_period(cur, false);
    if (!ball.has_vertex(cur)) break;
    keys.push_front(cur);
  }
  std::set<std::string> distinct(keys.begin(), keys.end());
  if (distinct.size() != keys.size())
    throw input_error("periodic path revisits a vertex inside the ball");
  for (auto& k : keys) w.vertices.push_back(ball.vertex(k));
  if (static_cast<int>(w.vertices.size()) < 2 * margin)
    throw input_error("periodic path window shorter than twice the margin");
  return w;
}

PathWindow window_from_keys(const SimpleGraph& g,
                            const std::vector<std::string>& keys, int margin) {
  PathWindow w;
  w.margin = margin;
  for (auto& k : keys) w.vertices.push_back(g.vertex(k));
  std::set<int> distinct(w.vertices.begin(), w.vertices.end());
  if (distinct.size() != w.vertices.size())
    throw input_error("path window revisits a vertex");
  if (static_cast<int>(w.vertices.size()) < 2 * margin)
    throw input_error("path window shorter than twice the margin");
  return w;
}

bool cut_splits(const Cut& c, const PathWindow& w) {
  if (!c.side_infinite || !c.comp_infinite) return false;
  const int m = w.margin;
  const int n = static_cast<int>(w.vertices.size());
  auto side_of = [&](int idx) { return c.side.test(w.vertices[idx]); };
  bool low = side_of(0), high = side_of(n - 1);
  for (int i = 1; i < m; ++i)
    if (side_of(i) != low) return false;
  for (int i = n - m; i < n - 1; ++i)
    if (side_of(i) != high) return false;
  return low != high;
}

std::vector<Cut> cuts_splitting_path(const SimpleGraph& ball,
                                     const PathWindow& alpha, int maxk) {
  auto universe = enumerate_kcuts(ball, alpha.vertices, maxk);
  std::vector<Cut> out;
  for (auto& c : universe)
    if (cut_splits(c, alpha)) out.push_back(c);
  return out;
}

std::vector<Cut> minimal_cuts(const std::vector<Cut>& splitting) {
  if (splitting.empty()) return {};
  int best = splitting[0].weight();
  for (auto& c : splitting) best = std::min(best, c.weight());
  std::vector<Cut> out;
  for (auto& c : splitting)
    if (c.weight() == best) out.push_back(c);
  return out;
}

int m_value(const Cut& c, const std::vector<Cut>& universe) {
  int m = 0;
  for (auto& d : universe)
    if (!is_nested(c, d)) ++m;
  return m;
}

OptimalCuts optimal_cuts(const SimpleGraph& ball,
                         const std::vector<PathWindow>& paths, int k) {
  OptimalCuts out;
  std::vector<std::vector<Cut>> mins;
  int implied_k = 1;
  for (auto& alpha : paths) {
    int maxk = k > 0 ? k : 6;
    auto cmin = minimal_cuts(cuts_splitting_path(ball, alpha, maxk));
    if (!cmin.empty()) implied_k = std::max(implied_k, cmin[0].weight());
    mins.push_back(std::move(cmin));
  }
  out.k = k > 0 ? k : implied_k;
  // Universe: all k-cuts whose boundary meets the ball interior.
  std::vector<int> s;
  for (int v = 0; v < ball.n(); ++v)
    if (!ball.sphere(v)) s.push_back(v);
  out.universe = enumerate_kcuts(ball, s, out.k);

  std::set<std::vector<std::uint64_t>> seen;
  for (auto& cmin : mins) {
    if (cmin.empty()) continue;
    int best = -1;
    std::vector<int> ms;
    for (auto& c : cmin) {
      int m = m_value(c, out.universe);
      ms.push_back(m);
      best = best < 0 ? m : std::min(best, m);
    }
    for (std::size_t i = 0; i < cmin.size(); ++i)
      if (ms[i] == best && seen.insert(cmin[i].side.bits).second)
        out.cuts.push_back(cmin[i]);
  }
  std::sort(out.cuts.begin(), out.cuts.end(), [](const Cut& a, const Cut& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.side.bits < b.side.bits;
  });
  for (std::size_t i = 0; i < out.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < out.cuts.size(); ++j)
      if (!is_nested(out.cuts[i], out.cuts[j]))
        throw std::logic_error("optimal cuts are not pairwise nested");
  return out;
}

namespace {

bool proper_subset(const VertexSet& a, const VertexSet& b) {
  return a.subset_of(b) && !(a == b);
}

}  // namespace

TildeClasses tilde_classes(const std::vector<Cut>& cuts) {
  const int n = static_cast<int>(cuts.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (int i = 0; i < n; ++i) {
    VertexSet ci = cuts[i].side.complement();
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!proper_subset(ci, cuts[j].side)) continue;
      bool minimal = true;
      for (int e = 0; e < n && minimal; ++e) {
        if (e == j) continue;
        if (proper_subset(ci, cuts[e].side) &&
            cuts[e].side.subset_of(cuts[j].side))
          minimal = false;
      }
      rel[i][j] = minimal;
    }
  }
  // Equivalence-relation check.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i])
        throw std::logic_error("~ relation is not symmetric");
      for (int l = 0; l < n; ++l)
        if (rel[i][j] && rel[j][l] && !rel[i][l])
          throw std::logic_error("~ relation is not transitive");
    }
  TildeClasses out;
  out.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (out.class_of[i] >= 0) continue;
    int id = out.n_classes++;
    for (int j = i; j < n; ++j)
      if (rel[i][j]) out.class_of[j] = id;
  }
  return out;
}

StructureTree structure_tree(const std::vector<Cut>& cuts) {
  StructureTree t;
  t.classes = tilde_classes(cuts);
  const int n = static_cast<int>(cuts.size());
  std::map<std::vector<std::uint64_t>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(cuts[i].side.bits, i);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    auto it = index.find(cuts[i].side.complement().bits);
    if (it == index.end())
      throw input_error("cut family is not closed under complementation");
    int j = it->second;
    used[i] = used[j] = true;
    t.edges.push_back({i, j, t.classes.class_of[i], t.classes.class_of[j],
                       cuts[i].weight()});
  }
  // Tree check: connected and acyclic on the classes.
  const int nv = t.classes.n_classes;
  if (static_cast<int>(t.edges.size()) != nv - 1)
    throw std::logic_error("structure tree edge count is not classes-1");
  std::vector<std::vector<int>> adj(nv);
  for (auto& e : t.edges) {
    adj[e.from_class].push_back(e.to_class);
    adj[e.to_class].push_back(e.from_class);
  }
  std::vector<bool> seen(nv, false);
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
  if (count != nv) throw std::logic_error("structure tree is not connected");
  return t;
}

VertexSet neighborhood_set(const SimpleGraph& g, const VertexSet& s, int l) {
  VertexSet cur = s;
  for (int step = 0; step < l; ++step) {
    VertexSet next = cur;
    for (int v = 0; v < g.n(); ++v)
      if (cur.test(v))
        for (int u : g.neighbors(v)) next.set(u);
    cur = std::move(next);
  }
  return cur;
}

int choose_lambda(const SimpleGraph& g, const std::vector<Cut>& cuts) {
  for (int lambda = 1; lambda <= g.n(); ++lambda) {
    bool ok = true;
    for (auto& c : cuts) {
      VertexSet region = neighborhood_set(g, c.side, lambda);
      VertexSet comp = c.side.complement();
      VertexSet inter(g.n());
      for (std::size_t i = 0; i < region.bits.size(); ++i)
        inter.bits[i] = region.bits[i] & comp.bits[i];
      // Connectivity of the intersection within g.
      if (inter.empty() || !side_connected(g, inter)) {
        ok = false;
        break;
      }
    }
    if (ok) return lambda;
  }
  throw input_error("no lambda makes all N^lambda(C) & ~C connected");
}

std::vector<int> block(const SimpleGraph& g, const std::vector<Cut>& cuts,
                       const std::vector<int>& class_members, int lambda) {
  if (class_members.empty()) throw input_error("empty ~ class");
  VertexSet inter(g.n());
  inter = neighborhood_set(g, cuts[class_members[0]].side, lambda);
  for (std::size_t i = 1; i < class_members.size(); ++i) {
    VertexSet nb = neighborhood_set(g, cuts[class_members[i]].side, lambda);
    for (std::size_t w = 0; w < inter.bits.size(); ++w) inter.bits[w] &= nb.bits[w];
  }
  // Union formula cross-check.
  VertexSet meet = cuts[class_members[0]].side;
  VertexSet join(g.n());
  for (int idx : class_members) {
    for (std::size_t w = 0; w < meet.bits.size(); ++w)
      meet.bits[w] &= cuts[idx].side.bits[w];
    VertexSet nb = neighborhood_set(g, cuts[idx].side, lambda);
    VertexSet comp = cuts[idx].side.complement();
    for (std::size_t w = 0; w < join.bits.size(); ++w)
      join.bits[w] |= nb.bits[w] & comp.bits[w];
  }
  VertexSet alt(g.n());
  for (std::size_t w = 0; w < alt.bits.size(); ++w)
    alt.bits[w] = meet.bits[w] | join.bits[w];
  if (!(alt == inter))
    throw std::logic_error("block formulas disagree");
  return inter.to_vector();
}

}  // namespace vf
