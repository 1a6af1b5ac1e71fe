#include "vfree/word.hpp"

#include <sstream>

namespace vf {

Letter Alphabet::add(const std::string& name) {
  if (name.empty() || name == "_")
    throw input_error("invalid letter name '" + name + "'");
  auto it = index_.find(name);
  if (it != index_.end())
    throw input_error("duplicate letter '" + name + "'");
  Letter id = static_cast<Letter>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  inv_.push_back(-1);
  return id;
}

void Alphabet::set_involution(Letter a, Letter b) {
  if (a < 0 || b < 0 || a >= size() || b >= size())
    throw input_error("involution letter out of range");
  inv_[a] = b;
  inv_[b] = a;
}

Letter Alphabet::letter(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw input_error("unknown letter '" + name + "'");
  return it->second;
}

Letter Alphabet::involution(Letter a) const {
  if (!has_involution(a))
    throw input_error("letter '" + name(a) + "' has no involution partner");
  return inv_[a];
}

Word Alphabet::parse_word(const std::string& text) const {
  Word w;
  for (auto& tok : split_ws(text)) {
    if (tok == "_") continue;
    w.push_back(letter(tok));
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "_";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << name(w[i]);
  }
  return os.str();
}

void Alphabet::check_word(const Word& w) const {
  for (Letter a : w)
    if (a < 0 || a >= size())
      throw input_error("letter id " + std::to_string(a) +
                        " not in alphabet of size " + std::to_string(size()));
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace vf
