#include "vfree/vf_lang.hpp"

#include <algorithm>

namespace vf {

namespace {

bool freely_reduced(const VFStructure& vf, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (vf.delta.involution(w[i]) == w[i + 1]) return false;
  return true;
}

void validate_tables(const VFStructure& vf, const SemiThueSystem& sys) {
  const int n = vf.delta.size();
  if (static_cast<int>(vf.w_table.size()) != n ||
      static_cast<int>(vf.r_table.size()) != n)
    throw input_error("vf tables have wrong shape");
  for (Letter a = 0; a < n; ++a) {
    if (static_cast<int>(vf.w_table[a].size()) != n ||
        static_cast<int>(vf.r_table[a].size()) != n)
      throw input_error("vf tables have wrong shape");
    for (Letter b = 0; b < n; ++b) {
      const Word& w = vf.w_table[a][b];
      for (Letter x : w)
        if (!vf.is_free_letter(x))
          throw input_error("w(a,b) contains a non-free letter");
      if (!freely_reduced(vf, w))
        throw input_error("w(" + vf.delta.name(a) + "," + vf.delta.name(b) +
                          ") is not freely reduced");
      int r = vf.r_table[a][b];
      if (r != -1 && (r < vf.n_free || r >= n))
        throw input_error("r(a,b) is not a representative letter");
    }
  }
  // Associativity spot check: reduce (ab)c and a(bc) with the system itself.
  auto rhs = [&](Letter a, Letter b) {
    Word w = vf.w_table[a][b];
    if (vf.r_table[a][b] != -1) w.push_back(vf.r_table[a][b]);
    return w;
  };
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b)
      for (Letter c = 0; c < n; ++c) {
        Word left = rhs(a, b);
        left.push_back(c);
        Word right{a};
        right.append(rhs(b, c));
        auto nl = normalize(sys, left);
        auto nr = normalize(sys, right);
        if (nl.fuel_exhausted || nr.fuel_exhausted || nl.word != nr.word)
          throw input_error("inconsistent vf tables at triple (" +
                            vf.delta.name(a) + "," + vf.delta.name(b) + "," +
                            vf.delta.name(c) + ")");
      }
}

}  // namespace

SemiThueSystem build_vf_system(const VFStructure& vf) {
  std::vector<std::pair<Word, Word>> rules;
  const int n = vf.delta.size();
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) {
      Word lhs{a, b};
      Word rhs = vf.w_table[a][b];
      if (vf.r_table[a][b] != -1) rhs.push_back(vf.r_table[a][b]);
      if (lhs == rhs) continue;
      rules.emplace_back(lhs, rhs);
    }
  SemiThueSystem sys(vf.delta, std::move(rules));
  validate_tables(vf, sys);
  return sys;
}

int vf_window_constant(const VFStructure& vf) {
  std::size_t m = 1;
  for (Letter a = 0; a < vf.delta.size(); ++a) {
    if (vf.is_free_letter(a)) m = std::max(m, std::size_t{1});  // w(1,a) = a
    for (Letter r = vf.n_free; r < vf.delta.size(); ++r)
      m = std::max(m, vf.w_table[r][a].size());
  }
  return static_cast<int>(m);
}

Pda vf_det_pda(const VFStructure& vf) {
  const int m = vf_window_constant(vf);
  const int n_reps = vf.delta.size() - vf.n_free;

  Pda pda;
  pda.input = vf.delta;
  // States: every representative (1 included) twice; primed means the stack
  // is empty.
  const int n_states = 2 * (n_reps + 1);
  pda.n_states = n_states;
  auto plain_state = [&](int rep) { return rep < 0 ? 0 : 1 + (rep - vf.n_free); };
  auto primed_state = [&](int rep) { return n_reps + 1 + plain_state(rep); };
  pda.state_names.push_back("1");
  for (Letter r = vf.n_free; r < vf.delta.size(); ++r)
    pda.state_names.push_back(vf.delta.name(r));
  pda.state_names.push_back("1'");
  for (Letter r = vf.n_free; r < vf.delta.size(); ++r)
    pda.state_names.push_back(vf.delta.name(r) + "'");
  pda.initial = primed_state(-1);
  pda.final = {primed_state(-1)};

  // Stack letters: the free letters, then primed copies marking the bottom.
  for (Letter a = 0; a < vf.n_free; ++a) pda.stack.add(vf.delta.name(a));
  std::vector<Letter> primed(vf.n_free);
  for (Letter a = 0; a < vf.n_free; ++a)
    primed[a] = pda.stack.add(vf.delta.name(a) + "'");

  auto prime_first = [&](const Word& w) {
    Word out = w;
    out[0] = primed[out[0]];
    return out;
  };
  auto unprime = [&](Letter z) { return z < vf.n_free ? z : z - vf.n_free; };
  // Cancels the junction between a stack window and w(r,a).
  auto junction_reduce = [&](Word x, const Word& w) {
    std::size_t i = 0;
    while (!x.empty() && i < w.size() &&
           vf.delta.involution(unprime(x.letters.back())) == w[i]) {
      x.letters.pop_back();
      ++i;
    }
    for (; i < w.size(); ++i) x.push_back(w[i]);
    return x;
  };

  // All unprimed stack windows of a given length.
  std::vector<Word> windows{Word{}};
  for (int len = 1; len <= m; ++len) {
    std::vector<Word> next;
    for (auto& w : windows)
      if (static_cast<int>(w.size()) == len - 1)
        for (Letter a = 0; a < vf.n_free; ++a) {
          Word e = w;
          e.push_back(a);
          next.push_back(e);
        }
    for (auto& w : next) windows.push_back(w);
  }

  std::vector<int> reps{-1};
  for (Letter r = vf.n_free; r < vf.delta.size(); ++r) reps.push_back(r);

  for (int rep : reps)
    for (Letter a = 0; a < vf.delta.size(); ++a) {
      auto [w, s] = vf.product(rep, a);
      // Empty stack (primed state): push w with a primed bottom.
      if (w.empty())
        pda.rules.push_back({Word{}, primed_state(rep), Word{a}, Word{},
                             primed_state(s)});
      else
        pda.rules.push_back({Word{}, primed_state(rep), Word{a}, prime_first(w),
                             plain_state(s)});
      // Deep stack: a full window of m unprimed letters on top.
      for (auto& x : windows) {
        if (static_cast<int>(x.size()) != m) continue;
        Word y = junction_reduce(x, w);
        pda.rules.push_back({x, plain_state(rep), Word{a}, y, plain_state(s)});
      }
      // Shallow stack: the whole stack is a primed bottom plus fewer than m
      // unprimed letters.
      for (auto& tail : windows) {
        if (static_cast<int>(tail.size()) >= m) continue;
        for (Letter b = 0; b < vf.n_free; ++b) {
          Word x;
          x.push_back(primed[b]);
          x.append(tail);
          Word plain;
          plain.push_back(b);
          plain.append(tail);
          Word y = junction_reduce(plain, w);
          if (y.empty())
            pda.rules.push_back({x, plain_state(rep), Word{a}, Word{},
                                 primed_state(s)});
          else
            pda.rules.push_back({x, plain_state(rep), Word{a}, prime_first(y),
                                 plain_state(s)});
        }
      }
    }
  pda.validate();
  return pda;
}

}  // namespace vf
