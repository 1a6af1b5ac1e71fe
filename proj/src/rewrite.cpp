#include "vfree/rewrite.hpp"

#include <algorithm>
#include <unordered_set>

namespace vf {

SemiThueSystem::SemiThueSystem(Alphabet alphabet,
                               std::vector<std::pair<Word, Word>> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (auto& [l, r] : rules_) {
    if (l.empty()) throw input_error("rule with empty left-hand side");
    alphabet_.check_word(l);
    alphabet_.check_word(r);
  }
}

bool SemiThueSystem::is_length_reducing() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](auto& rl) { return rl.first.size() > rl.second.size(); });
}

static bool matches_at(const Word& w, const Word& lhs, std::size_t pos) {
  if (pos + lhs.size() > w.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (w[pos + i] != lhs[i]) return false;
  return true;
}

static Word replace_at(const Word& w, std::size_t pos, std::size_t len,
                       const Word& rhs) {
  Word out;
  out.letters.reserve(w.size() - len + rhs.size());
  out.letters.insert(out.letters.end(), w.begin(), w.begin() + pos);
  out.letters.insert(out.letters.end(), rhs.begin(), rhs.end());
  out.letters.insert(out.letters.end(), w.begin() + pos + len, w.end());
  return out;
}

std::vector<RewriteStep> apply_once(const SemiThueSystem& s, const Word& w) {
  s.alphabet().check_word(w);
  std::vector<RewriteStep> out;
  const auto& rules = s.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (int ri = 0; ri < s.rule_count(); ++ri)
      if (matches_at(w, rules[ri].first, pos))
        out.push_back({pos, ri, replace_at(w, pos, rules[ri].first.size(),
                                           rules[ri].second)});
  return out;
}

bool is_irreducible(const SemiThueSystem& s, const Word& w) {
  const auto& rules = s.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (int ri = 0; ri < s.rule_count(); ++ri)
      if (matches_at(w, rules[ri].first, pos)) return false;
  return true;
}

// Lowest position, lowest rule index. Returns false if w is irreducible.
static bool leftmost_step(const SemiThueSystem& s, Word& w) {
  const auto& rules = s.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (int ri = 0; ri < s.rule_count(); ++ri)
      if (matches_at(w, rules[ri].first, pos)) {
        w = replace_at(w, pos, rules[ri].first.size(), rules[ri].second);
        return true;
      }
  return false;
}

NormalizeResult normalize(const SemiThueSystem& s, const Word& w,
                          std::uint64_t fuel) {
  s.alphabet().check_word(w);
  NormalizeResult res;
  res.word = w;
  while (res.steps < fuel) {
    if (!leftmost_step(s, res.word)) return res;
    ++res.steps;
  }
  res.fuel_exhausted = !is_irreducible(s, res.word);
  return res;
}

NormalizeResult normalize_random(const SemiThueSystem& s, const Word& w,
                                 std::mt19937_64& rng, std::uint64_t fuel) {
  NormalizeResult res;
  res.word = w;
  while (res.steps < fuel) {
    auto steps = apply_once(s, res.word);
    if (steps.empty()) return res;
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    res.word = steps[pick(rng)].result;
    ++res.steps;
  }
  res.fuel_exhausted = !is_irreducible(s, res.word);
  return res;
}

std::vector<CriticalPair> critical_pairs(const SemiThueSystem& s) {
  std::vector<CriticalPair> out;
  const auto& rules = s.rules();
  const int n = s.rule_count();
  for (int i = 0; i < n; ++i) {
    const Word& li = rules[i].first;
    for (int j = 0; j < n; ++j) {
      const Word& lj = rules[j].first;
      // Proper overlap: a nonempty proper suffix of li equals a prefix of lj.
      for (std::size_t t = 1; t < std::min(li.size(), lj.size()); ++t) {
        bool ok = true;
        for (std::size_t x = 0; x < t && ok; ++x)
          ok = li[li.size() - t + x] == lj[x];
        if (!ok) continue;
        Word peak = li;
        for (std::size_t x = t; x < lj.size(); ++x) peak.push_back(lj[x]);
        Word left = rules[i].second;
        for (std::size_t x = t; x < lj.size(); ++x) left.push_back(lj[x]);
        Word right = li.subword(0, li.size() - t) + rules[j].second;
        out.push_back({peak, left, right});
      }
      // Containment: lj occurs inside li.
      if (lj.size() <= li.size()) {
        for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
          if (i == j && p == 0 && lj.size() == li.size()) continue;
          if (!matches_at(li, lj, p)) continue;
          Word right = li.subword(0, p) + rules[j].second +
                       li.subword(p + lj.size(), li.size() - p - lj.size());
          out.push_back({li, rules[i].second, right});
        }
      }
    }
  }
  return out;
}

bool bfs_joinable(const SemiThueSystem& s, const Word& u, const Word& v,
                  int depth) {
  auto descend = [&](const Word& w) {
    std::unordered_set<Word, WordHash> seen{w};
    std::vector<Word> frontier{w};
    for (int d = 0; d < depth; ++d) {
      std::vector<Word> next;
      for (auto& x : frontier)
        for (auto& st : apply_once(s, x))
          if (seen.insert(st.result).second) next.push_back(st.result);
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    return seen;
  };
  auto du = descend(u);
  auto dv = descend(v);
  for (auto& w : du)
    if (dv.count(w)) return true;
  return false;
}

ConfluenceVerdict check_local_confluence(const SemiThueSystem& s,
                                         std::uint64_t fuel) {
  for (auto& cp : critical_pairs(s)) {
    auto nl = normalize(s, cp.left, fuel);
    auto nr = normalize(s, cp.right, fuel);
    if (nl.fuel_exhausted || nr.fuel_exhausted)
      return {ConfluenceStatus::Unknown, cp.peak};
    if (nl.word == nr.word) continue;
    // Distinct normal forms under one strategy do not preclude joinability.
    if (bfs_joinable(s, cp.left, cp.right, 6)) continue;
    return {ConfluenceStatus::Counterexample, cp.peak};
  }
  return {ConfluenceStatus::LocallyConfluent, {}};
}

bool check_strong_confluence(const SemiThueSystem& s) {
  for (auto& cp : critical_pairs(s)) {
    auto reach1 = [&](const Word& w) {
      std::vector<Word> r{w};
      for (auto& st : apply_once(s, w)) r.push_back(st.result);
      return r;
    };
    auto lu = reach1(cp.left);
    auto rv = reach1(cp.right);
    bool met = false;
    for (auto& x : lu) {
      for (auto& y : rv)
        if (x == y) {
          met = true;
          break;
        }
      if (met) break;
    }
    if (!met) return false;
  }
  return true;
}

Ternary equivalent(const SemiThueSystem& s, const Word& u, const Word& v,
                   std::uint64_t fuel) {
  auto nu = normalize(s, u, fuel);
  auto nv = normalize(s, v, fuel);
  if (nu.fuel_exhausted || nv.fuel_exhausted) return Ternary::Unknown;
  return nu.word == nv.word ? Ternary::True : Ternary::False;
}

}  // namespace vf
