#include "vfree/grammar.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace vf {

void Cfg::validate() const {
  for (auto& p : productions) {
    if (p.lhs < 0 || p.lhs >= static_cast<int>(variables.size()))
      throw input_error("production lhs is not a declared variable");
    for (auto& s : p.rhs) {
      if (s.is_var && (s.idx < 0 || s.idx >= static_cast<int>(variables.size())))
        throw input_error("production rhs references undeclared variable");
      if (!s.is_var && (s.idx < 0 || s.idx >= terminals.size()))
        throw input_error("production rhs references undeclared terminal");
    }
  }
  if (axiom < 0 || axiom >= static_cast<int>(variables.size()))
    throw input_error("axiom is not a declared variable");
}

int Cfg::add_variable(const std::string& name) {
  variables.push_back(name);
  return static_cast<int>(variables.size()) - 1;
}

std::string Cfg::format() const {
  std::ostringstream os;
  os << "axiom: " << variables[axiom] << "\n";
  // Group productions by lhs, axiom first.
  std::vector<int> order;
  order.push_back(axiom);
  for (int v = 0; v < static_cast<int>(variables.size()); ++v)
    if (v != axiom) order.push_back(v);
  for (int v : order) {
    std::vector<std::string> alts;
    for (auto& p : productions) {
      if (p.lhs != v) continue;
      if (p.rhs.empty()) {
        alts.push_back("_");
        continue;
      }
      std::string rhs;
      for (auto& s : p.rhs) {
        if (!rhs.empty()) rhs += ' ';
        rhs += s.is_var ? variables[s.idx] : terminals.name(s.idx);
      }
      alts.push_back(rhs);
    }
    if (alts.empty()) continue;
    os << variables[v] << " ->";
    for (std::size_t i = 0; i < alts.size(); ++i)
      os << (i ? " | " : " ") << alts[i];
    os << "\n";
  }
  return os.str();
}

Cfg reduce_grammar(const Cfg& g) {
  g.validate();
  const int nv = static_cast<int>(g.variables.size());
  // Productive variables: fixed point.
  std::vector<bool> productive(nv, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& p : g.productions) {
      if (productive[p.lhs]) continue;
      bool all = true;
      for (auto& s : p.rhs)
        if (s.is_var && !productive[s.idx]) all = false;
      if (all) {
        productive[p.lhs] = true;
        changed = true;
      }
    }
  }
  // Reachable through productive productions only.
  std::vector<bool> reachable(nv, false);
  if (productive[g.axiom]) {
    std::queue<int> q;
    reachable[g.axiom] = true;
    q.push(g.axiom);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto& p : g.productions) {
        if (p.lhs != v) continue;
        bool ok = true;
        for (auto& s : p.rhs)
          if (s.is_var && !productive[s.idx]) ok = false;
        if (!ok) continue;
        for (auto& s : p.rhs)
          if (s.is_var && !reachable[s.idx]) {
            reachable[s.idx] = true;
            q.push(s.idx);
          }
      }
    }
  }
  Cfg out;
  out.terminals = g.terminals;
  std::vector<int> remap(nv, -1);
  for (int v = 0; v < nv; ++v)
    if (productive[v] && reachable[v])
      remap[v] = out.add_variable(g.variables[v]);
  if (remap[g.axiom] < 0) {
    // Empty language: keep a bare axiom.
    out.add_variable(g.variables[g.axiom]);
    out.axiom = 0;
    return out;
  }
  out.axiom = remap[g.axiom];
  for (auto& p : g.productions) {
    if (remap[p.lhs] < 0) continue;
    bool ok = true;
    GWord rhs;
    for (auto& s : p.rhs) {
      if (s.is_var) {
        if (remap[s.idx] < 0) {
          ok = false;
          break;
        }
        rhs.push_back(V(remap[s.idx]));
      } else {
        rhs.push_back(s);
      }
    }
    if (ok) out.productions.push_back({remap[p.lhs], rhs});
  }
  return out;
}

bool is_cnf(const Cfg& g) {
  bool axiom_eps = false;
  for (auto& p : g.productions)
    if (p.lhs == g.axiom && p.rhs.empty()) axiom_eps = true;
  for (auto& p : g.productions) {
    if (p.rhs.empty()) {
      if (p.lhs != g.axiom) return false;
      continue;
    }
    if (p.rhs.size() == 1) {
      if (p.rhs[0].is_var) return false;
      continue;
    }
    if (p.rhs.size() == 2) {
      if (!p.rhs[0].is_var || !p.rhs[1].is_var) return false;
      if (axiom_eps && (p.rhs[0].idx == g.axiom || p.rhs[1].idx == g.axiom))
        return false;
      continue;
    }
    return false;
  }
  return true;
}

Cfg to_cnf(const Cfg& g0) {
  g0.validate();
  Cfg g = g0;

  // Fresh axiom.
  {
    int s0 = g.add_variable("S0");
    g.productions.push_back({s0, {V(g.axiom)}});
    g.axiom = s0;
  }

  // TERM: wrap terminals occurring in right-hand sides of length >= 2.
  {
    std::map<int, int> wrapper;
    for (auto& p : g.productions) {
      if (p.rhs.size() < 2) continue;
      for (auto& s : p.rhs) {
        if (s.is_var) continue;
        auto it = wrapper.find(s.idx);
        int w;
        if (it == wrapper.end()) {
          w = g.add_variable("T_" + g.terminals.name(s.idx));
          wrapper.emplace(s.idx, w);
        } else {
          w = it->second;
        }
        s = V(w);
      }
    }
    for (auto& [t, w] : wrapper) g.productions.push_back({w, {T(t)}});
  }

  // BIN: split right-hand sides longer than 2.
  {
    std::vector<Production> out;
    int counter = 0;
    for (auto& p : g.productions) {
      if (p.rhs.size() <= 2) {
        out.push_back(p);
        continue;
      }
      int prev = p.lhs;
      for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
        int fresh = g.add_variable("B" + std::to_string(counter++));
        out.push_back({prev, {p.rhs[i], V(fresh)}});
        prev = fresh;
      }
      out.push_back({prev, {p.rhs[p.rhs.size() - 2], p.rhs[p.rhs.size() - 1]}});
    }
    g.productions = std::move(out);
  }

  // DEL: eliminate epsilon productions (keep S0 -> eps iff eps in L).
  {
    const int nv = static_cast<int>(g.variables.size());
    std::vector<bool> nullable(nv, false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& p : g.productions) {
        if (nullable[p.lhs]) continue;
        bool all = true;
        for (auto& s : p.rhs)
          if (!s.is_var || !nullable[s.idx]) all = false;
        if (all) {
          nullable[p.lhs] = true;
          changed = true;
        }
      }
    }
    std::set<Production> out;
    for (auto& p : g.productions) {
      // rhs has length <= 2 here; enumerate which nullable occurrences drop.
      const std::size_t k = p.rhs.size();
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        GWord rhs;
        bool valid = true;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask & (1u << i)) {
            if (!p.rhs[i].is_var || !nullable[p.rhs[i].idx]) {
              valid = false;
              break;
            }
          } else {
            rhs.push_back(p.rhs[i]);
          }
        }
        if (valid && !rhs.empty()) out.insert({p.lhs, rhs});
      }
    }
    if (nullable[g.axiom]) out.insert({g.axiom, {}});
    g.productions.assign(out.begin(), out.end());
  }

  // UNIT: eliminate A -> B chains.
  {
    const int nv = static_cast<int>(g.variables.size());
    // unit_reach[a] = all b with a =>* b by unit productions.
    std::vector<std::set<int>> unit_reach(nv);
    for (int v = 0; v < nv; ++v) unit_reach[v].insert(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& p : g.productions)
        if (p.rhs.size() == 1 && p.rhs[0].is_var)
          for (int v = 0; v < nv; ++v)
            if (unit_reach[v].count(p.lhs) &&
                !unit_reach[v].count(p.rhs[0].idx)) {
              unit_reach[v].insert(p.rhs[0].idx);
              changed = true;
            }
    }
    std::set<Production> out;
    for (int v = 0; v < nv; ++v)
      for (int b : unit_reach[v])
        for (auto& p : g.productions) {
          if (p.lhs != b) continue;
          if (p.rhs.size() == 1 && p.rhs[0].is_var) continue;
          out.insert({v, p.rhs});
        }
    g.productions.assign(out.begin(), out.end());
  }

  Cfg out = reduce_grammar(g);
  if (!is_cnf(out)) throw std::logic_error("to_cnf produced a non-CNF grammar");
  return out;
}

std::uint64_t pumping_constant(const Cfg& cnf) {
  if (!is_cnf(cnf)) throw input_error("pumping_constant expects a CNF grammar");
  if (cnf.variables.size() >= 64)
    throw input_error("pumping constant overflows 64 bits");
  return std::uint64_t{1} << cnf.variables.size();
}

bool cyk(const Cfg& cnf, const Word& w) {
  if (!is_cnf(cnf)) throw input_error("cyk expects a CNF grammar");
  const std::size_t n = w.size();
  if (n == 0) {
    for (auto& p : cnf.productions)
      if (p.lhs == cnf.axiom && p.rhs.empty()) return true;
    return false;
  }
  const int nv = static_cast<int>(cnf.variables.size());
  // table[i][len-1] = set of variables deriving w[i..i+len)
  std::vector<std::vector<std::vector<bool>>> tab(
      n, std::vector<std::vector<bool>>(n, std::vector<bool>(nv, false)));
  for (std::size_t i = 0; i < n; ++i)
    for (auto& p : cnf.productions)
      if (p.rhs.size() == 1 && !p.rhs[0].is_var && p.rhs[0].idx == w[i])
        tab[i][0][p.lhs] = true;
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i)
      for (auto& p : cnf.productions) {
        if (p.rhs.size() != 2) continue;
        if (tab[i][len - 1][p.lhs]) continue;
        for (std::size_t split = 1; split < len; ++split)
          if (tab[i][split - 1][p.rhs[0].idx] &&
              tab[i + split][len - split - 1][p.rhs[1].idx]) {
            tab[i][len - 1][p.lhs] = true;
            break;
          }
      }
  return tab[0][n - 1][cnf.axiom];
}

std::vector<Word> language_slice(const Cfg& g, int maxlen) {
  Cfg cnf = to_cnf(g);
  const int nv = static_cast<int>(cnf.variables.size());
  // words[v][len] = sorted words of that length derivable from v.
  std::vector<std::vector<std::vector<Word>>> words(
      nv, std::vector<std::vector<Word>>(maxlen + 1));
  for (auto& p : cnf.productions)
    if (p.rhs.size() == 1 && !p.rhs[0].is_var && maxlen >= 1)
      words[p.lhs][1].push_back(Word{p.rhs[0].idx});
  for (int len = 2; len <= maxlen; ++len) {
    std::vector<std::set<Word>> acc(nv);
    for (auto& p : cnf.productions) {
      if (p.rhs.size() != 2) continue;
      for (int l1 = 1; l1 < len; ++l1)
        for (auto& u : words[p.rhs[0].idx][l1])
          for (auto& v : words[p.rhs[1].idx][len - l1])
            acc[p.lhs].insert(u + v);
    }
    for (int v = 0; v < nv; ++v)
      words[v][len].assign(acc[v].begin(), acc[v].end());
  }
  std::vector<Word> out;
  for (auto& p : cnf.productions)
    if (p.lhs == cnf.axiom && p.rhs.empty()) out.push_back(Word{});
  for (int len = 1; len <= maxlen; ++len)
    for (auto& w : words[cnf.axiom][len]) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignedWord free_reduce(const SignedWord& w) {
  SignedWord out;
  for (auto& s : w) {
    if (!out.empty() && out.back().letter == s.letter &&
        out.back().positive != s.positive)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

std::string format_signed(const SignedWord& w, const Alphabet& sigma) {
  if (w.empty()) return "_";
  std::string out;
  for (auto& s : w) {
    if (!out.empty()) out += ' ';
    out += sigma.name(s.letter);
    if (!s.positive) out += "^-1";
  }
  return out;
}

HotzPresentation hotz_presentation(const Cfg& g0) {
  Cfg g = reduce_grammar(g0);
  g.validate();
  if (!CfgMembership(g).contains(Word{}))
    throw input_error("hotz_presentation requires the empty word in L");

  const int nv = static_cast<int>(g.variables.size());
  // Shortest terminal witness per variable; ties broken lexicographically.
  std::vector<Word> wit(nv);
  std::vector<bool> have(nv, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& p : g.productions) {
      bool ok = true;
      Word cand;
      for (auto& s : p.rhs) {
        if (s.is_var) {
          if (!have[s.idx]) {
            ok = false;
            break;
          }
          cand.append(wit[s.idx]);
        } else {
          cand.push_back(s.idx);
        }
      }
      if (!ok) continue;
      auto better = [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      };
      if (!have[p.lhs] || better(cand, wit[p.lhs])) {
        wit[p.lhs] = cand;
        have[p.lhs] = true;
        changed = true;
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!have[v]) throw std::logic_error("reduced grammar has an unproductive variable");

  HotzPresentation out;
  out.generators = g.terminals;
  out.relations = g.productions;
  out.witnesses = wit;
  for (auto& p : g.productions) {
    SignedWord rel;
    for (Letter a : wit[p.lhs]) rel.push_back({a, true});
    // psi(rhs)^-1, reversed with signs flipped.
    Word rhs_word;
    for (auto& s : p.rhs) {
      if (s.is_var)
        rhs_word.append(wit[s.idx]);
      else
        rhs_word.push_back(s.idx);
    }
    for (auto it = rhs_word.letters.rbegin(); it != rhs_word.letters.rend(); ++it)
      rel.push_back({*it, false});
    out.relators.push_back(free_reduce(rel));
  }
  return out;
}

Cfg normal_closure_grammar(const Alphabet& sigma,
                           const std::vector<Word>& relators) {
  for (Letter a = 0; a < sigma.size(); ++a)
    if (!sigma.has_involution(a))
      throw input_error("normal_closure_grammar needs an inverse-closed alphabet");
  Cfg g;
  g.terminals = sigma;
  g.axiom = g.add_variable("S");
  for (Letter a = 0; a < sigma.size(); ++a)
    g.productions.push_back(
        {g.axiom, {T(a), V(g.axiom), T(sigma.involution(a)), V(g.axiom)}});
  for (auto& r : relators) {
    GWord rhs;
    for (Letter a : r) rhs.push_back(T(a));
    g.productions.push_back({g.axiom, rhs});
  }
  g.productions.push_back({g.axiom, {}});
  g.validate();
  return g;
}

}  // namespace vf
