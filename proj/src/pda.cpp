#include "vfree/pda.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_set>

namespace vf {

void Pda::validate() const {
  for (auto& r : rules) {
    if (r.from < 0 || r.from >= n_states || r.to < 0 || r.to >= n_states)
      throw input_error("pda rule references undeclared state");
    stack.check_word(r.pop);
    stack.check_word(r.push);
    input.check_word(r.read);
  }
  if (initial < 0 || initial >= n_states) throw input_error("bad initial state");
  for (int f : final)
    if (f < 0 || f >= n_states) throw input_error("bad final state");
}

namespace {

struct Config {
  Word stack;
  int state;
  std::size_t pos;
  bool operator==(const Config&) const = default;
};

struct ConfigHash {
  std::size_t operator()(const Config& c) const {
    std::size_t h = WordHash{}(c.stack);
    h ^= std::hash<int>{}(c.state) + 0x9e3779b97f4a7c15ull + (h << 6);
    h ^= std::hash<std::size_t>{}(c.pos) + 0x9e3779b97f4a7c15ull + (h << 6);
    return h;
  }
};

bool is_suffix(const Word& w, const Word& suffix) {
  if (suffix.size() > w.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i)
    if (w[w.size() - suffix.size() + i] != suffix[i]) return false;
  return true;
}

bool reads_prefix(const Word& input, std::size_t pos, const Word& read) {
  if (pos + read.size() > input.size()) return false;
  for (std::size_t i = 0; i < read.size(); ++i)
    if (input[pos + i] != read[i]) return false;
  return true;
}

}  // namespace

PdaRunResult pda_run(const Pda& m, const Word& w, std::uint64_t fuel) {
  m.validate();
  m.input.check_word(w);
  PdaRunResult res{PdaVerdict::Reject, 0, 0};
  std::unordered_set<Config, ConfigHash> visited;
  std::deque<Config> queue;
  Config start{Word{}, m.initial, 0};
  visited.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    if (res.expanded >= fuel) return {PdaVerdict::FuelExhausted, res.max_branching, res.expanded};
    Config c = queue.front();
    queue.pop_front();
    ++res.expanded;
    if (c.stack.empty() && c.pos == w.size() && m.final.count(c.state)) {
      res.verdict = PdaVerdict::Accept;
      return res;
    }
    int branching = 0;
    for (auto& r : m.rules) {
      if (r.from != c.state) continue;
      if (!is_suffix(c.stack, r.pop)) continue;
      if (!reads_prefix(w, c.pos, r.read)) continue;
      ++branching;
      Config next;
      next.stack = c.stack.subword(0, c.stack.size() - r.pop.size()) + r.push;
      next.state = r.to;
      next.pos = c.pos + r.read.size();
      if (visited.insert(next).second) queue.push_back(next);
    }
    res.max_branching = std::max(res.max_branching, branching);
  }
  return res;
}

Pda cfg_to_pda(const Cfg& g0) {
  Cfg g = to_cnf(g0);
  Pda m;
  m.input = g.terminals;
  m.n_states = 2;
  m.state_names = {"q0", "q1"};
  m.initial = 0;
  m.final = {1};
  // Stack alphabet: terminals first (same ids), then variables.
  for (Letter a = 0; a < g.terminals.size(); ++a)
    m.stack.add(g.terminals.name(a));
  std::vector<Letter> var_sym(g.variables.size());
  for (std::size_t v = 0; v < g.variables.size(); ++v)
    var_sym[v] = m.stack.add("<" + g.variables[v] + ">");
  auto sym = [&](const GSym& s) {
    return s.is_var ? var_sym[s.idx] : static_cast<Letter>(s.idx);
  };
  // Shift rules.
  for (Letter b = 0; b < g.terminals.size(); ++b)
    m.rules.push_back({Word{}, 0, Word{b}, Word{b}, 0});
  // Backward derivation steps.
  bool eps_in_l = false;
  for (auto& p : g.productions) {
    if (p.rhs.empty()) {
      eps_in_l = true;
      continue;
    }
    Word pop;
    for (auto& s : p.rhs) pop.push_back(sym(s));
    m.rules.push_back({pop, 0, Word{}, Word{var_sym[p.lhs]}, 0});
  }
  // Accept: pop the axiom.
  m.rules.push_back({Word{var_sym[g.axiom]}, 0, Word{}, Word{}, 1});
  // The empty word never reaches the axiom on the stack; accept it directly.
  if (eps_in_l) m.rules.push_back({Word{}, 0, Word{}, Word{}, 1});
  m.validate();
  return m;
}

namespace {

/// Pda with bottom marker and flattened rules: every rule except the initial
/// one pops exactly one symbol and pushes at most two.
struct FlatPda {
  Pda m;
  Letter bottom;
  int start_state;  // the fresh initial state
};

FlatPda normalize_pda(const Pda& in) {
  FlatPda f;
  Pda& m = f.m;
  m.input = in.input;
  m.stack = in.stack;
  f.bottom = m.stack.add("#");
  m.n_states = in.n_states + 1;
  for (int q = 0; q < in.n_states; ++q) m.state_names.push_back(in.state_name(q));
  f.start_state = in.n_states;
  m.state_names.push_back("q_start");
  m.initial = f.start_state;
  m.final = in.final;

  auto fresh_state = [&](const std::string& base) {
    m.state_names.push_back(base);
    return m.n_states++;
  };

  // Emits rule (pop one z, read u) -> (push r, to q), splitting long pushes.
  auto emit = [&](Letter z, int from, const Word& u, const Word& r, int to) {
    if (r.size() <= 2) {
      m.rules.push_back({Word{z}, from, u, r, to});
      return;
    }
    int cur = fresh_state("push" + std::to_string(m.rules.size()));
    m.rules.push_back({Word{z}, from, u, Word{r[0]}, cur});
    for (std::size_t i = 1; i < r.size(); ++i) {
      int nxt = i + 1 == r.size() ? to : fresh_state("push" + std::to_string(m.rules.size()));
      m.rules.push_back({Word{r[i - 1]}, cur, Word{}, Word{r[i - 1], r[i]}, nxt});
      cur = nxt;
    }
  };

  // One-symbol-pop form of an original rule.
  auto flatten = [&](const PdaRule& r) {
    if (r.pop.empty()) {
      // The stack is never empty between the initial push of # and the
      // final pop, so padding with every viable stack symbol is sound.
      for (Letter z = 0; z < m.stack.size(); ++z)
        emit(z, r.from, r.read, Word{z} + r.push, r.to);
      return;
    }
    if (r.pop.size() == 1) {
      emit(r.pop[0], r.from, r.read, r.push, r.to);
      return;
    }
    // Pop the suffix one symbol at a time (top first), then push.
    int cur = r.from;
    for (std::size_t i = 0; i < r.pop.size() - 1; ++i) {
      Letter z = r.pop[r.pop.size() - 1 - i];
      int nxt = fresh_state("pop" + std::to_string(m.rules.size()));
      m.rules.push_back({Word{z}, cur, i == 0 ? r.read : Word{}, Word{}, nxt});
      cur = nxt;
    }
    emit(r.pop[0], cur, r.pop.size() == 1 ? r.read : Word{}, r.push, r.to);
  };

  for (auto& r : in.rules) flatten(r);
  // Initial: write the bottom marker.
  m.rules.push_back({Word{}, f.start_state, Word{}, Word{f.bottom}, in.initial});
  // Remove the marker in a final state.
  for (int q : in.final) m.rules.push_back({Word{f.bottom}, q, Word{}, Word{}, q});
  m.validate();
  return f;
}

}  // namespace

Cfg pda_to_cfg(const Pda& in) {
  in.validate();
  FlatPda f = normalize_pda(in);
  const Pda& m = f.m;
  const int nq = m.n_states;
  const int nz = m.stack.size();

  Cfg g;
  g.terminals = m.input;
  g.axiom = g.add_variable("S");
  // Variable (p, z, q): words readable from state p, consuming stack top z,
  // ending in state q.
  std::vector<int> trip(static_cast<std::size_t>(nq) * nz * nq);
  for (int p = 0; p < nq; ++p)
    for (Letter z = 0; z < nz; ++z)
      for (int q = 0; q < nq; ++q)
        trip[(static_cast<std::size_t>(p) * nz + z) * nq + q] = g.add_variable(
            "[" + m.state_name(p) + "," + m.stack.name(z) + "," + m.state_name(q) + "]");
  auto tv = [&](int p, Letter z, int q) {
    return trip[(static_cast<std::size_t>(p) * nz + z) * nq + q];
  };

  for (int fstate : m.final)
    g.productions.push_back({g.axiom, {V(tv(in.initial, f.bottom, fstate))}});

  for (auto& r : m.rules) {
    if (r.from == f.start_state) continue;  // covered by the S-productions
    if (r.pop.size() != 1 || r.push.size() > 2)
      throw std::logic_error("pda_to_cfg: machine not flattened");
    Letter z = r.pop[0];
    GWord read;
    for (Letter a : r.read) read.push_back(T(a));
    if (r.push.empty()) {
      g.productions.push_back({tv(r.from, z, r.to), read});
    } else if (r.push.size() == 1) {
      Letter y = r.push[0];
      for (int q = 0; q < nq; ++q) {
        GWord rhs = read;
        rhs.push_back(V(tv(r.to, y, q)));
        g.productions.push_back({tv(r.from, z, q), rhs});
      }
    } else {
      Letter x = r.push[0], y = r.push[1];  // y is the new top
      for (int q = 0; q < nq; ++q)
        for (int s = 0; s < nq; ++s) {
          GWord rhs = read;
          rhs.push_back(V(tv(r.to, y, s)));
          rhs.push_back(V(tv(s, x, q)));
          g.productions.push_back({tv(r.from, z, q), rhs});
        }
    }
  }
  return reduce_grammar(g);
}

}  // namespace vf
