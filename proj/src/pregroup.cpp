#include "vfree/pregroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace vf {

std::string PregroupViolation::describe() const {
  std::string s = axiom + " violation";
  auto app = [&](int v) {
    if (v >= 0) s += " " + std::to_string(v);
  };
  app(w);
  app(x);
  app(y);
  app(z);
  return s;
}

std::optional<PregroupViolation> Pregroup::check(
    const Alphabet& carrier, const std::vector<int>& involution,
    const std::vector<std::vector<int>>& table) {
  const int n = carrier.size();
  if (n == 0) return PregroupViolation{"shape"};
  if (static_cast<int>(involution.size()) != n ||
      static_cast<int>(table.size()) != n)
    return PregroupViolation{"shape"};
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(table[i].size()) != n) return PregroupViolation{"shape", i};
  for (int i = 0; i < n; ++i) {
    if (involution[i] < 0 || involution[i] >= n)
      return PregroupViolation{"involution", i};
    if (involution[involution[i]] != i) return PregroupViolation{"involution", i};
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] >= n) return PregroupViolation{"shape", i, j};

  auto def = [&](int x, int y) { return table[x][y] >= 0; };
  // (P1)
  for (int x = 0; x < n; ++x)
    if (!def(0, x) || !def(x, 0) || table[0][x] != x || table[x][0] != x)
      return PregroupViolation{"P1", x};
  // (P2)
  for (int x = 0; x < n; ++x) {
    int xb = involution[x];
    if (!def(x, xb) || !def(xb, x) || table[x][xb] != 0 || table[xb][x] != 0)
      return PregroupViolation{"P2", x};
  }
  // (P3)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!def(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!def(y, z)) continue;
        bool left = def(table[x][y], z);
        bool right = def(x, table[y][z]);
        if (left != right) return PregroupViolation{"P3", -1, x, y, z};
        if (left && table[table[x][y]][z] != table[x][table[y][z]])
          return PregroupViolation{"P3", -1, x, y, z};
      }
    }
  // (P4)
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x) {
      if (!def(w, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (!def(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!def(y, z)) continue;
          if (!def(w, table[x][y]) && !def(table[x][y], z))
            return PregroupViolation{"P4", w, x, y, z};
        }
      }
    }
  return std::nullopt;
}

Pregroup Pregroup::from_table(Alphabet carrier, std::vector<int> involution,
                              std::vector<std::vector<int>> table) {
  if (auto v = check(carrier, involution, table))
    throw input_error("not a pregroup: " + v->describe());
  Pregroup p;
  p.carrier_ = std::move(carrier);
  p.involution_ = std::move(involution);
  p.table_ = std::move(table);
  return p;
}

Pregroup Pregroup::trivial() {
  Alphabet c({"1"});
  return from_table(std::move(c), {0}, {{0}});
}

Pregroup Pregroup::free_pregroup(int rank) {
  Alphabet c;
  c.add("1");
  for (int i = 0; i < rank; ++i) {
    std::string base = rank == 1 ? "a" : "a" + std::to_string(i + 1);
    c.add(base);
    c.add(base + "~");
  }
  const int n = c.size();
  std::vector<int> inv(n);
  inv[0] = 0;
  for (int i = 0; i < rank; ++i) {
    inv[1 + 2 * i] = 2 + 2 * i;
    inv[2 + 2 * i] = 1 + 2 * i;
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    t[0][x] = x;
    t[x][0] = x;
    t[x][inv[x]] = 0;
    t[inv[x]][x] = 0;
  }
  for (Letter a = 1; a < n; ++a) c.set_involution(a, inv[a]);
  return from_table(std::move(c), std::move(inv), std::move(t));
}

SpSystems sp_system(const Pregroup& p) {
  const int n = p.size();
  std::vector<std::pair<Word, Word>> lr;
  lr.emplace_back(Word{0}, Word{});  // 1 -> eps
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.defined(a, b))
        lr.emplace_back(Word{a, b}, Word{p.mul(a, b)});
  std::vector<std::pair<Word, Word>> full = lr;
  std::set<std::pair<Word, Word>> seen(lr.begin(), lr.end());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!p.defined(a, c) || !p.defined(p.inv(c), b)) continue;
        Word lhs{a, b};
        Word rhs{p.mul(a, c), p.mul(p.inv(c), b)};
        if (lhs == rhs) continue;
        if (!seen.insert({lhs, rhs}).second) continue;
        full.emplace_back(lhs, rhs);
      }
  SpSystems out{SemiThueSystem(p.carrier(), std::move(full)),
                SemiThueSystem(p.carrier(), std::move(lr))};
  if (!check_strong_confluence(out.full))
    throw std::logic_error("S_P is not strongly confluent");
  return out;
}

Word geodesic_reduce(const Pregroup& p, const Word& w) {
  // The length-reducing rules only ever fire at a freshly created junction,
  // so a single stack pass computes the leftmost fixed point.
  std::vector<int> stack;
  for (Letter a : w) {
    int cur = a;
    for (;;) {
      if (cur == p.identity()) break;
      if (stack.empty() || !p.defined(stack.back(), cur)) {
        stack.push_back(cur);
        break;
      }
      cur = p.mul(stack.back(), cur);
      stack.pop_back();
    }
  }
  return Word(std::vector<Letter>(stack.begin(), stack.end()));
}

bool universal_wp(const Pregroup& p, const Word& w) {
  return geodesic_reduce(p, w).empty();
}

Cfg wp_grammar(const Pregroup& p) {
  Cfg g;
  g.terminals = p.carrier();
  for (int x = 0; x < p.size(); ++x)
    g.add_variable("<" + p.carrier().name(x) + ">");
  g.axiom = p.identity();
  g.productions.push_back({p.identity(), {}});
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.defined(a, b))
        g.productions.push_back({p.mul(a, b), {V(a), V(b)}});
  for (int x = 0; x < p.size(); ++x) g.productions.push_back({x, {T(x)}});
  g.validate();
  return g;
}

Word shortest_right_annihilator(const Pregroup& p, int a) {
  // States are geodesic stacks; edges append one carrier letter.
  Word start = geodesic_reduce(p, Word{a});
  std::map<Word, Word> how;  // state -> appended word
  std::deque<Word> queue{start};
  how[start] = Word{};
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    if (u.empty()) return how[u];
    for (int b = 0; b < p.size(); ++b) {
      Word v = geodesic_reduce(p, u + Word{b});
      if (how.count(v)) continue;
      how[v] = how[u] + Word{b};
      queue.push_back(v);
    }
  }
  throw std::logic_error("no right annihilator found");
}

StreamingReducer::StreamingReducer(const Pregroup& p) : p_(&p) {
  int m = 0;
  for (int a = 0; a < p.size(); ++a)
    m = std::max(m, static_cast<int>(shortest_right_annihilator(p, a).size()));
  window_bound_ = m;
}

void StreamingReducer::feed(int letter) {
  if (letter < 0 || letter >= p_->size()) throw input_error("letter outside carrier");
  int steps = 0;
  int cur = letter;
  for (;;) {
    if (cur == p_->identity()) {
      if (steps == 0) steps = 1;  // dropping a fed identity is one reduction
      break;
    }
    if (stack_.empty() || !p_->defined(stack_.back(), cur)) {
      stack_.push_back(cur);
      break;
    }
    cur = p_->mul(stack_.back(), cur);
    stack_.pop_back();
    ++steps;
  }
  max_cascade_ = std::max(max_cascade_, steps);
  if (steps > cascade_cap())
    throw std::logic_error("reduction cascade exceeded its bound");
}

namespace {

/// Enumerates the defining words of the Rimlinger carrier and deduplicates
/// them by S_G normal form.
std::vector<Word> carrier_normal_forms(const GraphOfGroups& g) {
  std::set<Word> nfs;
  auto add_all = [&](const std::vector<int>& path) {
    // Words g0 y1 g1 ... yk gk over the fixed edge path; each gi ranges over
    // the vertex group at the corresponding position.
    std::vector<int> vertices;  // vertex at each element slot
    vertices.push_back(path.empty() ? g.base() : g.edge(path[0]).src);
    for (int e : path) vertices.push_back(g.edge(e).dst);
    std::vector<int> choice(vertices.size(), 0);
    for (;;) {
      Word w;
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (choice[i] != 0) w.push_back(g.vertex_letter(vertices[i], choice[i]));
        if (i < path.size()) w.push_back(g.edge_letter(path[i]));
      }
      auto nf = normalize(g.sg(), w);
      if (nf.fuel_exhausted) throw std::logic_error("carrier normalization out of fuel");
      nfs.insert(nf.word);
      // Next tuple.
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (choice[i] + 1 < g.vertex_group(vertices[i]).order()) {
          ++choice[i];
          std::fill(choice.begin(), choice.begin() + i, 0);
          break;
        }
      }
      if (i == choice.size()) break;
    }
  };
  // No-edge shapes: out to Q along the tree and straight back.
  for (int q = 0; q < g.n_vertices(); ++q) {
    std::vector<int> path = g.tree_geodesic(g.base(), q);
    auto back = g.tree_geodesic(q, g.base());
    path.insert(path.end(), back.begin(), back.end());
    add_all(path);
  }
  // One non-tree edge in the middle.
  for (int e = 0; e < g.n_edges(); ++e) {
    if (g.in_tree(e)) continue;
    std::vector<int> path = g.tree_geodesic(g.base(), g.edge(e).src);
    path.push_back(e);
    auto back = g.tree_geodesic(g.edge(e).dst, g.base());
    path.insert(path.end(), back.begin(), back.end());
    add_all(path);
  }
  std::vector<Word> out(nfs.begin(), nfs.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (out.empty() || !out.front().empty())
    throw std::logic_error("carrier does not contain the identity");
  return out;
}

}  // namespace

GogPregroup pregroup_from_gog(const GraphOfGroups& g) {
  std::vector<Word> words = carrier_normal_forms(g);
  const int n = static_cast<int>(words.size());
  std::map<Word, int> index;
  for (int i = 0; i < n; ++i) index.emplace(words[i], i);

  Alphabet carrier;
  for (int i = 0; i < n; ++i) {
    std::string name;
    for (Letter a : words[i]) {
      if (!name.empty()) name += '*';
      name += g.sigma().name(a);
    }
    carrier.add(words[i].empty() ? "1" : name);
  }

  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    auto nf = normalize(g.sg(), g.inverse_word(words[i]));
    auto it = index.find(nf.word);
    if (it == index.end())
      throw std::logic_error("carrier not closed under inversion");
    inv[i] = it->second;
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto nf = normalize(g.sg(), words[i] + words[j]);
      auto it = index.find(nf.word);
      if (it != index.end()) table[i][j] = it->second;
    }
  GogPregroup out{Pregroup::from_table(std::move(carrier), std::move(inv),
                                       std::move(table)),
                  std::move(words)};
  return out;
}

bool gog_carrier_shape(const GraphOfGroups& g, const Word& w) {
  Word reduced = g.britton_reduce(w);
  Word ys = g.edge_sequence(reduced);
  auto path_word = [&](const std::vector<int>& path) {
    Word out;
    for (int e : path) out.push_back(g.edge_letter(e));
    return out;
  };
  for (int q = 0; q < g.n_vertices(); ++q) {
    std::vector<int> path = g.tree_geodesic(g.base(), q);
    auto back = g.tree_geodesic(q, g.base());
    path.insert(path.end(), back.begin(), back.end());
    if (ys == path_word(path)) return true;
  }
  for (int e = 0; e < g.n_edges(); ++e) {
    if (g.in_tree(e)) continue;
    std::vector<int> path = g.tree_geodesic(g.base(), g.edge(e).src);
    path.push_back(e);
    auto back = g.tree_geodesic(g.edge(e).dst, g.base());
    path.insert(path.end(), back.begin(), back.end());
    if (ys == path_word(path)) return true;
  }
  return false;
}

}  // namespace vf
