#ifndef VFREE_IO_HPP
#define VFREE_IO_HPP

#include <string>

#include "vfree/automata.hpp"
#include "vfree/cuts.hpp"
#include "vfree/finite_group.hpp"
#include "vfree/gog.hpp"
#include "vfree/graph.hpp"
#include "vfree/grammar.hpp"
#include "vfree/pda.hpp"
#include "vfree/pregroup.hpp"
#include "vfree/rewrite.hpp"

namespace vf {

/// Text formats. Parse errors carry the line number.

// letters: a a~ b b~        (~ suffix pairs with the base name)
// a a~ -> _                 (one rule per line, _ is the empty word)
SemiThueSystem parse_semithue(const std::string& text);
std::string format_semithue(const SemiThueSystem& s);

// order 4
// names 1 a b c             (optional)
// 0 1 2 3  ... n rows of n indices
FiniteGroup parse_group(const std::string& text);
std::string format_group(const FiniteGroup& g);

// vertex P cyclic 2
// vertex Q table <file-less inline: order n; rows...> is not supported;
//   builtins: trivial | cyclic n | symmetric n
// edge y P Q cyclic 2 src 0 2 dst 0 1    (images of the edge group elements)
// base P
GraphOfGroups parse_gog(const std::string& text);

// carrier: 1 a y y~ ay ay~
// inv: 1 a y~ y ay~ ay      (image of each carrier element, in order)
// table:
// 1 a y y~ ay ay~           (rows in carrier order, - for undefined)
Pregroup parse_pregroup(const std::string& text);
std::string format_pregroup(const Pregroup& p);

// axiom: S
// S -> a S b | _
Cfg parse_grammar(const std::string& text);

// states 3
// initial 0
// final 2
// trans 0 a 1
Nfa parse_nfa(const std::string& text);
std::string format_nfa(const Nfa& n);
std::string format_dfa(const Dfa& d);

// rule <pop|_> q <read|_> -> <push|_> q'
std::string format_pda(const Pda& m);

// v key            (vertices)
// e key1 key2      (edges)
SimpleGraph parse_simple_graph(const std::string& text);

std::string graph_to_dot(const SimpleGraph& g);
std::string graph_to_dot_with_cut(const SimpleGraph& g, const Cut& c);
std::string td_to_dot(const SimpleGraph& g, const TreeDecomposition& td);
std::string structure_tree_to_dot(const SimpleGraph& g, const StructureTree& t);

std::string read_file(const std::string& path);

}  // namespace vf

#endif
