#ifndef VFREE_WORD_HPP
#define VFREE_WORD_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vf {

using Letter = std::int32_t;

/// Thrown when an input violates a declared precondition (bad letter,
/// malformed file, inconsistent table, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A word over some alphabet: a finite sequence of interned letters.
/// The empty word is the identity for concatenation.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }
  Letter& operator[](std::size_t i) { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }
  void push_back(Letter a) { letters.push_back(a); }
  void append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters.begin() + pos,
                                    letters.begin() + pos + len));
  }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

inline Word operator+(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w.letters) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A finite ordered set of letters, interned by declaration order, with an
/// optional involution a <-> a~ (a bijection of order at most 2).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names) {
    for (auto& n : names) add(n);
  }

  Letter add(const std::string& name);
  /// Declares inv(a) = b and inv(b) = a.
  void set_involution(Letter a, Letter b);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Letter a) const { return names_.at(a); }
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Letter letter(const std::string& name) const;

  bool has_involution(Letter a) const {
    return a < static_cast<Letter>(inv_.size()) && inv_[a] >= 0;
  }
  Letter involution(Letter a) const;

  /// Parses a whitespace-separated word; "_" denotes the empty word.
  Word parse_word(const std::string& text) const;
  /// Renders a word with single spaces; the empty word prints as "_".
  std::string format_word(const Word& w) const;

  void check_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<Letter> inv_;
};

std::vector<std::string> split_ws(const std::string& text);

}  // namespace vf

#endif
