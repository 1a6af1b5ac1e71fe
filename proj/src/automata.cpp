#include "vfree/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace vf {

void Nfa::validate() const {
  for (auto& t : transitions)
    if (t.from < 0 || t.from >= n_states || t.to < 0 || t.to >= n_states ||
        t.label < 0 || t.label >= alphabet.size())
      throw input_error("transition references undeclared state or letter");
  for (int q : initial)
    if (q < 0 || q >= n_states) throw input_error("bad initial state");
  for (int q : final)
    if (q < 0 || q >= n_states) throw input_error("bad final state");
}

bool Nfa::accepts(const Word& w) const {
  std::set<int> cur = initial;
  for (Letter a : w) {
    std::set<int> next;
    for (auto& t : transitions)
      if (t.label == a && cur.count(t.from)) next.insert(t.to);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  for (int q : cur)
    if (final.count(q)) return true;
  return false;
}

bool Dfa::accepts(const Word& w) const {
  int q = initial;
  if (q < 0) return false;
  for (Letter a : w) {
    q = delta[q][a];
    if (q < 0) return false;
  }
  return final.count(q) > 0;
}

Nfa Dfa::as_nfa() const {
  Nfa n;
  n.n_states = n_states;
  n.alphabet = alphabet;
  if (initial >= 0) n.initial.insert(initial);
  n.final = final;
  for (int q = 0; q < n_states; ++q)
    for (Letter a = 0; a < alphabet.size(); ++a)
      if (delta[q][a] >= 0) n.transitions.push_back({q, a, delta[q][a]});
  return n;
}

Dfa nfa_to_dfa(const Nfa& n) {
  n.validate();
  Dfa d;
  d.alphabet = n.alphabet;
  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> subsets;
  auto intern = [&](const std::set<int>& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    index.emplace(s, id);
    subsets.push_back(s);
    d.delta.emplace_back(n.alphabet.size(), -1);
    return id;
  };
  d.initial = intern(n.initial);
  for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
    for (Letter a = 0; a < n.alphabet.size(); ++a) {
      std::set<int> next;
      for (auto& t : n.transitions)
        if (t.label == a && subsets[q].count(t.from)) next.insert(t.to);
      d.delta[q][a] = intern(next);
    }
  }
  d.n_states = static_cast<int>(subsets.size());
  for (int q = 0; q < d.n_states; ++q)
    for (int f : n.final)
      if (subsets[q].count(f)) {
        d.final.insert(q);
        break;
      }
  return d;
}

BoolMatrixMonoid nfa_to_matrices(const Nfa& n) {
  n.validate();
  BoolMatrixMonoid m;
  m.n = n.n_states;
  m.per_letter.assign(
      n.alphabet.size(),
      std::vector<std::vector<bool>>(m.n, std::vector<bool>(m.n, false)));
  for (auto& t : n.transitions) m.per_letter[t.label][t.from][t.to] = true;
  return m;
}

std::vector<std::vector<bool>> BoolMatrixMonoid::matrix(const Word& w) const {
  std::vector<std::vector<bool>> acc(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) acc[i][i] = true;  // M(eps) = identity
  for (Letter a : w) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (acc[i][k])
          for (int j = 0; j < n; ++j)
            if (per_letter[a][k][j]) next[i][j] = true;
    acc = std::move(next);
  }
  return acc;
}

bool matrix_accepts(const BoolMatrixMonoid& m, const std::set<int>& initial,
                    const std::set<int>& final, const Word& w) {
  auto mat = m.matrix(w);
  for (int i : initial)
    for (int j : final)
      if (mat[i][j]) return true;
  return false;
}

RatExprPtr RatExpr::empty() {
  return std::make_shared<RatExpr>(RatExpr{Kind::Empty, -1, nullptr, nullptr});
}
RatExprPtr RatExpr::epsilon() {
  return std::make_shared<RatExpr>(RatExpr{Kind::Epsilon, -1, nullptr, nullptr});
}
RatExprPtr RatExpr::lit(Letter a) {
  return std::make_shared<RatExpr>(RatExpr{Kind::Letter, a, nullptr, nullptr});
}
RatExprPtr RatExpr::alt(RatExprPtr l, RatExprPtr r) {
  if (l->kind == Kind::Empty) return r;
  if (r->kind == Kind::Empty) return l;
  if (l->kind == Kind::Epsilon && r->kind == Kind::Epsilon) return l;
  return std::make_shared<RatExpr>(RatExpr{Kind::Union, -1, l, r});
}
RatExprPtr RatExpr::cat(RatExprPtr l, RatExprPtr r) {
  if (l->kind == Kind::Empty || r->kind == Kind::Empty) return empty();
  if (l->kind == Kind::Epsilon) return r;
  if (r->kind == Kind::Epsilon) return l;
  return std::make_shared<RatExpr>(RatExpr{Kind::Concat, -1, l, r});
}
RatExprPtr RatExpr::star(RatExprPtr e) {
  if (e->kind == Kind::Empty || e->kind == Kind::Epsilon) return epsilon();
  if (e->kind == Kind::Star) return e;
  return std::make_shared<RatExpr>(RatExpr{Kind::Star, -1, e, nullptr});
}

static std::string fmt(const RatExprPtr& e, const Alphabet& sigma, int prec) {
  using K = RatExpr::Kind;
  std::string s;
  int myprec = 0;
  switch (e->kind) {
    case K::Empty: s = "0"; myprec = 3; break;
    case K::Epsilon: s = "1"; myprec = 3; break;
    case K::Letter: s = sigma.name(e->letter); myprec = 3; break;
    case K::Union:
      s = fmt(e->lhs, sigma, 1) + "+" + fmt(e->rhs, sigma, 1);
      myprec = 1;
      break;
    case K::Concat:
      s = fmt(e->lhs, sigma, 2) + fmt(e->rhs, sigma, 2);
      myprec = 2;
      break;
    case K::Star:
      s = fmt(e->lhs, sigma, 3) + "*";
      myprec = 3;
      break;
  }
  if (myprec < prec) return "(" + s + ")";
  return s;
}

std::string format_rational(const RatExprPtr& e, const Alphabet& sigma) {
  return fmt(e, sigma, 0);
}

RatExprPtr nfa_to_rational(const Nfa& n) {
  n.validate();
  const int m = n.n_states;
  // L[i][j] = language of paths from i to j through states < k.
  std::vector<std::vector<RatExprPtr>> L(m, std::vector<RatExprPtr>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      L[i][j] = i == j ? RatExpr::epsilon() : RatExpr::empty();
  for (auto& t : n.transitions)
    L[t.from][t.to] = RatExpr::alt(L[t.from][t.to], RatExpr::lit(t.label));
  for (int k = 0; k < m; ++k) {
    std::vector<std::vector<RatExprPtr>> next(m, std::vector<RatExprPtr>(m));
    RatExprPtr loop = RatExpr::star(L[k][k]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        next[i][j] = RatExpr::alt(
            L[i][j], RatExpr::cat(L[i][k], RatExpr::cat(loop, L[k][j])));
    L = std::move(next);
  }
  RatExprPtr out = RatExpr::empty();
  for (int i : n.initial)
    for (int j : n.final) out = RatExpr::alt(out, L[i][j]);
  return out;
}

Nfa rational_to_nfa(const RatExprPtr& e, const Alphabet& sigma) {
  using K = RatExpr::Kind;
  Nfa out;
  out.alphabet = sigma;
  switch (e->kind) {
    case K::Empty:
      out.n_states = 1;
      out.initial = {0};
      return out;
    case K::Epsilon:
      out.n_states = 1;
      out.initial = {0};
      out.final = {0};
      return out;
    case K::Letter:
      out.n_states = 2;
      out.initial = {0};
      out.final = {1};
      out.transitions = {{0, e->letter, 1}};
      return out;
    case K::Union: {
      Nfa a = rational_to_nfa(e->lhs, sigma);
      Nfa b = rational_to_nfa(e->rhs, sigma);
      out = a;
      int off = a.n_states;
      out.n_states += b.n_states;
      for (auto& t : b.transitions)
        out.transitions.push_back({t.from + off, t.label, t.to + off});
      for (int q : b.initial) out.initial.insert(q + off);
      for (int q : b.final) out.final.insert(q + off);
      return out;
    }
    case K::Concat: {
      Nfa a = rational_to_nfa(e->lhs, sigma);
      Nfa b = rational_to_nfa(e->rhs, sigma);
      out.n_states = a.n_states + b.n_states;
      out.transitions = a.transitions;
      int off = a.n_states;
      for (auto& t : b.transitions)
        out.transitions.push_back({t.from + off, t.label, t.to + off});
      // Glue: transitions leaving an initial state of b also leave every
      // final state of a.
      for (auto& t : b.transitions)
        if (b.initial.count(t.from))
          for (int f : a.final)
            out.transitions.push_back({f, t.label, t.to + off});
      out.initial = a.initial;
      bool b_has_eps = false;
      for (int q : b.initial)
        if (b.final.count(q)) b_has_eps = true;
      for (int q : b.final) out.final.insert(q + off);
      if (b_has_eps)
        for (int q : a.final) out.final.insert(q);
      bool a_has_eps = false;
      for (int q : a.initial)
        if (a.final.count(q)) a_has_eps = true;
      if (a_has_eps)
        for (auto& t : b.transitions)
          if (b.initial.count(t.from))
            for (int q : a.initial)
              out.transitions.push_back({q, t.label, t.to + off});
      return out;
    }
    case K::Star: {
      Nfa a = rational_to_nfa(e->lhs, sigma);
      out.n_states = a.n_states + 1;
      const int s = a.n_states;  // fresh initial+final hub
      out.transitions = a.transitions;
      for (auto& t : a.transitions)
        if (a.initial.count(t.from)) {
          out.transitions.push_back({s, t.label, t.to});
          for (int f : a.final) out.transitions.push_back({f, t.label, t.to});
        }
      out.initial = {s};
      out.final = a.final;
      out.final.insert(s);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Word> all_words(int alphabet_size, int maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter a = 0; a < alphabet_size; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<Word> rational_subgroup_generators(
    const Nfa& n, const std::function<Letter(Letter)>& letter_inverse,
    const std::function<bool(const Word&)>& membership) {
  std::vector<Word> delta;
  auto formal_inverse = [&](const Word& u) {
    Word out;
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
      out.push_back(letter_inverse(*it));
    return out;
  };
  for (auto& uv : all_words(n.alphabet.size(), n.n_states)) {
    // Split uv at every point into u, v.
    for (std::size_t cut = 0; cut <= uv.size(); ++cut) {
      Word u = uv.subword(0, cut);
      Word v = uv.subword(cut, uv.size() - cut);
      Word cand = u + v + formal_inverse(u);
      if (membership(cand)) delta.push_back(cand);
    }
  }
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  return delta;
}

Dfa finite_group_wp_dfa(const FiniteGroup& g, const std::vector<int>& generators,
                        const std::vector<std::string>& generator_names) {
  if (static_cast<int>(g.subgroup_closure(generators).size()) != g.order())
    throw input_error("generators do not generate the group");
  Dfa d;
  d.n_states = g.order();
  for (std::size_t i = 0; i < generators.size(); ++i)
    d.alphabet.add(generator_names.empty() ? g.name(generators[i])
                                           : generator_names[i]);
  d.delta.assign(d.n_states, std::vector<int>(d.alphabet.size(), -1));
  for (int q = 0; q < d.n_states; ++q)
    for (std::size_t i = 0; i < generators.size(); ++i)
      d.delta[q][i] = g.mul(q, generators[i]);
  d.initial = 0;
  d.final = {0};
  return d;
}

}  // namespace vf
