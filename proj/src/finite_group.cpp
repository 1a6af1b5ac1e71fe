#include "vfree/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace vf {

std::string GroupViolation::describe() const {
  std::string s = kind + " violation";
  if (a >= 0) s += " at (" + std::to_string(a);
  if (b >= 0) s += "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  if (a >= 0) s += ")";
  return s;
}

std::optional<GroupViolation> check_group(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return GroupViolation{"shape"};
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(table[i].size()) != n)
      return GroupViolation{"shape", i};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        return GroupViolation{"closure", i, j};
  for (int i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i)
      return GroupViolation{"identity", i};
  for (int i = 0; i < n; ++i) {
    bool has_inv = false;
    for (int j = 0; j < n && !has_inv; ++j)
      has_inv = table[i][j] == 0 && table[j][i] == 0;
    if (!has_inv) return GroupViolation{"inverse", i};
  }
  auto assoc = [&](int a, int b, int c) {
    return table[table[a][b]][c] == table[a][table[b][c]];
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return GroupViolation{"associativity", a, b, c};
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 300000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (!assoc(a, b, c)) return GroupViolation{"associativity", a, b, c};
    }
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  if (auto v = check_group(table))
    throw input_error("not a group: " + v->describe());
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.table_ = std::move(table);
  g.inv_.assign(g.n_, 0);
  for (int i = 0; i < g.n_; ++i)
    for (int j = 0; j < g.n_; ++j)
      if (g.table_[i][j] == 0) g.inv_[i] = j;
  if (names.empty()) {
    names.push_back("1");
    for (int i = 1; i < g.n_; ++i) names.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != g.n_)
    throw input_error("element name list has wrong length");
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw input_error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> names{"1"};
  if (n > 1) names.push_back("a");
  for (int i = 2; i < n; ++i) names.push_back("a" + std::to_string(i));
  return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw input_error("symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity is the first in lexicographic order already.
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = idx[comp];
    }
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    std::string s = "p";
    for (int x : perms[i]) s += std::to_string(x);
    names.push_back(i == 0 ? "1" : s);
  }
  return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int n = a.order() * b.order();
  auto id = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          t[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> names;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      names.push_back(id(x, y) == 0 ? "1" : "(" + a.name(x) + "," + b.name(y) + ")");
  return from_table(std::move(t), std::move(names));
}

int FiniteGroup::element(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw input_error("unknown group element '" + name + "'");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::subgroup_closure(
    const std::vector<int>& gens) const {
  std::set<int> closed{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = mul(x, g);
        if (closed.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.img.resize(m);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.img.resize(img.size());
  for (int x = 0; x < degree(); ++x) q.img[img[x]] = x;
  return q;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img[x] != x) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw input_error("permutation degree mismatch");
  Permutation c;
  c.img.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) c.img[x] = a.img[b.img[x]];
  return c;
}

bool is_permutation(const std::vector<int>& img) {
  std::vector<bool> seen(img.size(), false);
  for (int x : img) {
    if (x < 0 || x >= static_cast<int>(img.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::uint64_t permutation_group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  std::set<std::vector<int>> closed;
  Permutation id = Permutation::identity(gens[0].degree());
  closed.insert(id.img);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto& x : frontier)
      for (auto& g : gens) {
        Permutation y = x * g;
        if (closed.insert(y.img).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return closed.size();
}

GroupAction::GroupAction(const FiniteGroup* group,
                         std::vector<Permutation> per_element)
    : group_(group), per_element_(std::move(per_element)) {
  const int n = group_->order();
  if (static_cast<int>(per_element_.size()) != n)
    throw input_error("action needs one permutation per group element");
  degree_ = per_element_[0].degree();
  for (auto& p : per_element_) {
    if (p.degree() != degree_) throw input_error("action degree mismatch");
    if (!is_permutation(p.img)) throw input_error("action image not bijective");
  }
  if (!per_element_[0].is_identity())
    throw input_error("action does not map 1 to the identity permutation");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(per_element_[group_->mul(g, h)] ==
            per_element_[g] * per_element_[h]))
        throw input_error("action violates the homomorphism law");
}

bool GroupAction::is_free() const {
  for (int g = 1; g < group_->order(); ++g)
    for (int x = 0; x < degree_; ++x)
      if (per_element_[g](x) == x) return false;
  return true;
}

GroupAction free_action(const FiniteGroup& g, int degree) {
  const int n = g.order();
  if (degree <= 0 || degree % n != 0)
    throw input_error("free_action: group order must divide the degree");
  std::vector<Permutation> per(n);
  for (int e = 0; e < n; ++e) {
    per[e].img.resize(degree);
    for (int block = 0; block < degree / n; ++block)
      for (int i = 0; i < n; ++i)
        per[e].img[block * n + i] = block * n + g.mul(e, i);
  }
  return GroupAction(&g, std::move(per));
}

Permutation conjugator(const GroupAction& alpha, const GroupAction& beta) {
  if (&alpha.group() != &beta.group() &&
      !(alpha.group() == beta.group()))
    throw input_error("conjugator: actions of different groups");
  if (alpha.degree() != beta.degree())
    throw input_error("conjugator: degree mismatch");
  if (!alpha.is_free() || !beta.is_free())
    throw input_error("conjugator: actions must be free");

  const int n = alpha.group().order();
  const int m = alpha.degree();
  // Orbit representatives, smallest unmatched index first.
  auto reps = [n, m](const GroupAction& act) {
    std::vector<int> rs;
    std::vector<bool> seen(m, false);
    for (int x = 0; x < m; ++x) {
      if (seen[x]) continue;
      rs.push_back(x);
      for (int g = 0; g < n; ++g) seen[act.act(g)(x)] = true;
    }
    return rs;
  };
  auto ra = reps(alpha);
  auto rb = reps(beta);
  Permutation phi;
  phi.img.assign(m, -1);
  for (std::size_t k = 0; k < ra.size(); ++k)
    for (int g = 0; g < n; ++g) phi.img[alpha.act(g)(ra[k])] = beta.act(g)(rb[k]);
  if (!is_permutation(phi.img))
    throw std::logic_error("conjugator: orbit matching failed");
  Permutation phi_inv = phi.inverse();
  for (int g = 0; g < n; ++g)
    if (!(alpha.act(g) == phi_inv * (beta.act(g) * phi)))
      throw std::logic_error("conjugator: identity check failed");
  return phi;
}

}  // namespace vf
