#include "vfree/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vf {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> items;  // (line number, content)

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto ws = line.find_first_not_of(" \t\r");
      if (ws == std::string::npos) continue;
      items.emplace_back(no, line);
    }
  }
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SemiThueSystem parse_semithue(const std::string& text) {
  Lines lines(text);
  Alphabet sigma;
  std::vector<std::pair<Word, Word>> rules;
  bool have_letters = false;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "letters:") {
      for (std::size_t i = 1; i < toks.size(); ++i) sigma.add(toks[i]);
      // ~-suffixed names pair with their base names.
      for (Letter a = 0; a < sigma.size(); ++a) {
        const std::string& nm = sigma.name(a);
        if (nm.size() > 1 && nm.back() == '~') {
          std::string base = nm.substr(0, nm.size() - 1);
          if (!sigma.has(base)) fail(no, "involution partner '" + base + "' missing");
          sigma.set_involution(a, sigma.letter(base));
        }
      }
      have_letters = true;
      continue;
    }
    if (!have_letters) fail(no, "expected a 'letters:' header first");
    auto arrow = line.find("->");
    if (arrow == std::string::npos) fail(no, "expected 'lhs -> rhs'");
    try {
      Word lhs = sigma.parse_word(line.substr(0, arrow));
      Word rhs = sigma.parse_word(line.substr(arrow + 2));
      rules.emplace_back(lhs, rhs);
    } catch (const input_error& e) {
      fail(no, e.what());
    }
  }
  if (!have_letters) throw input_error("missing 'letters:' header");
  return SemiThueSystem(std::move(sigma), std::move(rules));
}

std::string format_semithue(const SemiThueSystem& s) {
  std::ostringstream os;
  os << "letters:";
  for (Letter a = 0; a < s.alphabet().size(); ++a) os << ' ' << s.alphabet().name(a);
  os << "\n";
  for (auto& [l, r] : s.rules())
    os << s.alphabet().format_word(l) << " -> " << s.alphabet().format_word(r)
       << "\n";
  return os.str();
}

FiniteGroup parse_group(const std::string& text) {
  Lines lines(text);
  int order = -1;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "order") {
      if (toks.size() != 2) fail(no, "expected 'order n'");
      order = std::stoi(toks[1]);
      continue;
    }
    if (toks[0] == "names") {
      names.assign(toks.begin() + 1, toks.end());
      continue;
    }
    std::vector<int> row;
    for (auto& t : toks) {
      try {
        row.push_back(std::stoi(t));
      } catch (...) {
        fail(no, "expected a table row of indices");
      }
    }
    table.push_back(std::move(row));
  }
  if (order < 0) throw input_error("missing 'order n'");
  if (static_cast<int>(table.size()) != order)
    throw input_error("expected " + std::to_string(order) + " table rows");
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << "\nnames";
  for (auto& n : g.names()) os << ' ' << n;
  os << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) os << (j ? " " : "") << g.mul(i, j);
    os << "\n";
  }
  return os.str();
}

namespace {

FiniteGroup builtin_group(const std::vector<std::string>& toks, std::size_t at,
                          int line, std::size_t* consumed) {
  if (at >= toks.size()) fail(line, "expected a group description");
  const std::string& kind = toks[at];
  if (kind == "trivial") {
    *consumed = 1;
    return FiniteGroup::trivial();
  }
  if (kind == "cyclic" || kind == "symmetric") {
    if (at + 1 >= toks.size()) fail(line, "expected '" + kind + " n'");
    *consumed = 2;
    int n = std::stoi(toks[at + 1]);
    return kind == "cyclic" ? FiniteGroup::cyclic(n) : FiniteGroup::symmetric(n);
  }
  fail(line, "unknown group '" + kind + "' (use trivial|cyclic n|symmetric n)");
}

}  // namespace

GraphOfGroups parse_gog(const std::string& text) {
  Lines lines(text);
  GogBuilder b;
  std::map<std::string, int> vertex_of;
  bool any_vertex = false;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "vertex") {
      if (toks.size() < 3) fail(no, "expected 'vertex NAME GROUP'");
      std::size_t used;
      FiniteGroup g = builtin_group(toks, 2, no, &used);
      if (vertex_of.count(toks[1])) fail(no, "duplicate vertex " + toks[1]);
      vertex_of[toks[1]] = b.add_vertex(toks[1], std::move(g));
      any_vertex = true;
      continue;
    }
    if (toks[0] == "edge") {
      // edge NAME SRC DST GROUP src i0 i1 ... dst j0 j1 ...
      if (toks.size() < 5) fail(no, "expected 'edge NAME SRC DST GROUP ...'");
      if (!vertex_of.count(toks[2]) || !vertex_of.count(toks[3]))
        fail(no, "edge endpoint not declared");
      std::size_t used;
      FiniteGroup g = builtin_group(toks, 4, no, &used);
      std::size_t at = 4 + used;
      auto read_map = [&](const std::string& tag) {
        if (at >= toks.size() || toks[at] != tag)
          fail(no, "expected '" + tag + "' map");
        ++at;
        std::vector<int> map;
        while (at < toks.size() && toks[at] != "dst")
          map.push_back(std::stoi(toks[at++]));
        return map;
      };
      auto src_map = read_map("src");
      auto dst_map = read_map("dst");
      b.add_edge(toks[1], vertex_of[toks[2]], vertex_of[toks[3]], std::move(g),
                 std::move(src_map), std::move(dst_map));
      continue;
    }
    if (toks[0] == "base") {
      if (toks.size() != 2 || !vertex_of.count(toks[1]))
        fail(no, "expected 'base VERTEX'");
      b.set_base(vertex_of[toks[1]]);
      continue;
    }
    fail(no, "unknown directive '" + toks[0] + "'");
  }
  if (!any_vertex) throw input_error("graph of groups needs a vertex");
  return b.build();
}

Pregroup parse_pregroup(const std::string& text) {
  Lines lines(text);
  Alphabet carrier;
  std::vector<int> inv;
  std::vector<std::vector<int>> table;
  enum { Start, AfterCarrier, InTable } state = Start;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "carrier:") {
      for (std::size_t i = 1; i < toks.size(); ++i) carrier.add(toks[i]);
      state = AfterCarrier;
      continue;
    }
    if (toks[0] == "inv:") {
      if (state != AfterCarrier) fail(no, "carrier must come first");
      for (std::size_t i = 1; i < toks.size(); ++i)
        inv.push_back(carrier.letter(toks[i]));
      continue;
    }
    if (toks[0] == "table:") {
      state = InTable;
      continue;
    }
    if (state != InTable) fail(no, "unexpected line before 'table:'");
    std::vector<int> row;
    for (auto& t : toks)
      row.push_back(t == "-" ? -1 : carrier.letter(t));
    table.push_back(std::move(row));
  }
  if (carrier.size() == 0) throw input_error("missing carrier");
  for (Letter a = 0; a < carrier.size(); ++a)
    if (a < static_cast<Letter>(inv.size())) carrier.set_involution(a, inv[a]);
  return Pregroup::from_table(std::move(carrier), std::move(inv), std::move(table));
}

std::string format_pregroup(const Pregroup& p) {
  std::ostringstream os;
  os << "carrier:";
  for (int i = 0; i < p.size(); ++i) os << ' ' << p.carrier().name(i);
  os << "\ninv:";
  for (int i = 0; i < p.size(); ++i) os << ' ' << p.carrier().name(p.inv(i));
  os << "\ntable:\n";
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j)
      os << (j ? " " : "")
         << (p.defined(i, j) ? p.carrier().name(p.mul(i, j)) : "-");
    os << "\n";
  }
  return os.str();
}

Cfg parse_grammar(const std::string& text) {
  Lines lines(text);
  Cfg g;
  std::map<std::string, int> var_of;
  std::string axiom_name;
  // First pass: every lhs is a variable.
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "axiom:") {
      if (toks.size() != 2) fail(no, "expected 'axiom: S'");
      axiom_name = toks[1];
      continue;
    }
    if (toks.size() < 2 || toks[1] != "->") fail(no, "expected 'A -> ...'");
    if (!var_of.count(toks[0])) var_of[toks[0]] = g.add_variable(toks[0]);
  }
  if (axiom_name.empty()) throw input_error("missing 'axiom:' line");
  if (!var_of.count(axiom_name))
    throw input_error("axiom '" + axiom_name + "' has no production");
  g.axiom = var_of[axiom_name];
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "axiom:") continue;
    int lhs = var_of[toks[0]];
    GWord rhs;
    auto flush = [&]() {
      g.productions.push_back({lhs, rhs});
      rhs.clear();
    };
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|") {
        flush();
        continue;
      }
      if (toks[i] == "_") continue;
      if (var_of.count(toks[i]))
        rhs.push_back(V(var_of[toks[i]]));
      else
        rhs.push_back(T(g.terminals.has(toks[i]) ? g.terminals.letter(toks[i])
                                                 : g.terminals.add(toks[i])));
    }
    flush();
  }
  g.validate();
  return g;
}

Nfa parse_nfa(const std::string& text) {
  Lines lines(text);
  Nfa n;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "states") {
      n.n_states = std::stoi(toks[1]);
    } else if (toks[0] == "initial") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        n.initial.insert(std::stoi(toks[i]));
    } else if (toks[0] == "final") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        n.final.insert(std::stoi(toks[i]));
    } else if (toks[0] == "trans") {
      if (toks.size() != 4) fail(no, "expected 'trans p a q'");
      Letter a = n.alphabet.has(toks[2]) ? n.alphabet.letter(toks[2])
                                         : n.alphabet.add(toks[2]);
      n.transitions.push_back({std::stoi(toks[1]), a, std::stoi(toks[3])});
    } else {
      fail(no, "unknown directive '" + toks[0] + "'");
    }
  }
  n.validate();
  return n;
}

std::string format_nfa(const Nfa& n) {
  std::ostringstream os;
  os << "states " << n.n_states << "\ninitial";
  for (int q : n.initial) os << ' ' << q;
  os << "\nfinal";
  for (int q : n.final) os << ' ' << q;
  os << "\n";
  for (auto& t : n.transitions)
    os << "trans " << t.from << ' ' << n.alphabet.name(t.label) << ' ' << t.to
       << "\n";
  return os.str();
}

std::string format_dfa(const Dfa& d) { return format_nfa(d.as_nfa()); }

std::string format_pda(const Pda& m) {
  std::ostringstream os;
  os << "states " << m.n_states << "\ninitial " << m.state_name(m.initial)
     << "\nfinal";
  for (int q : m.final) os << ' ' << m.state_name(q);
  os << "\n";
  for (auto& r : m.rules)
    os << "rule " << m.stack.format_word(r.pop) << " " << m.state_name(r.from)
       << " " << m.input.format_word(r.read) << " -> "
       << m.stack.format_word(r.push) << " " << m.state_name(r.to) << "\n";
  return os.str();
}

SimpleGraph parse_simple_graph(const std::string& text) {
  Lines lines(text);
  SimpleGraph g;
  for (auto& [no, line] : lines.items) {
    auto toks = split_ws(line);
    if (toks[0] == "v" && toks.size() == 2) {
      g.ensure_vertex(toks[1]);
    } else if (toks[0] == "e" && toks.size() == 3) {
      g.add_edge(g.ensure_vertex(toks[1]), g.ensure_vertex(toks[2]));
    } else {
      fail(no, "expected 'v KEY' or 'e KEY KEY'");
    }
  }
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  n" << v << " [label=\"" << dot_escape(g.key(v)) << "\"";
    if (g.sphere(v)) os << " style=dashed";
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot_with_cut(const SimpleGraph& g, const Cut& c) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v)
    os << "  n" << v << " [label=\"" << dot_escape(g.key(v)) << "\""
       << (c.side.test(v) ? " color=red" : "") << "];\n";
  std::set<std::pair<int, int>> boundary(c.boundary.begin(), c.boundary.end());
  for (auto [u, v] : g.edges()) {
    os << "  n" << u << " -- n" << v;
    if (boundary.count({std::min(u, v), std::max(u, v)})) os << " [style=bold color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string td_to_dot(const SimpleGraph& g, const TreeDecomposition& td) {
  std::ostringstream os;
  os << "graph TD {\n  node [shape=box];\n";
  for (int t = 0; t < td.n_bags(); ++t) {
    std::string label;
    for (int v : td.bags[t]) {
      if (!label.empty()) label += ' ';
      label += g.key(v);
    }
    os << "  b" << t << " [label=\"{" << dot_escape(label) << "}\"];\n";
  }
  for (int t = 0; t < td.n_bags(); ++t)
    for (int s : td.tree_adj[t])
      if (t < s) os << "  b" << t << " -- b" << s << ";\n";
  os << "}\n";
  return os.str();
}

std::string structure_tree_to_dot(const SimpleGraph& g, const StructureTree& t) {
  (void)g;
  std::ostringstream os;
  os << "graph ST {\n";
  for (int c = 0; c < t.classes.n_classes; ++c)
    os << "  c" << c << " [label=\"[" << c << "]\"];\n";
  for (auto& e : t.edges)
    os << "  c" << e.from_class << " -- c" << e.to_class << " [label=\""
       << e.weight << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace vf
