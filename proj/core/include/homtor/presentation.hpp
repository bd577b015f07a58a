#pragma once

// Finite group presentations, just enough structure to state relators of
// the torus family groups and evaluate them in a representation.  Grammar:
//
//   presentation = "<" names "|" relators ">"
//   relator      = word
//   word         = term {("*" | " ") term}
//   term         = name ["^" int] | "[" word "," word "]"
//
// Commutator terms expand to w1 w2 w1^-1 w2^-1.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homtor::grp {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line, column;
};

struct Letter {
  int gen;  // generator index
  int exp;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word: adjacent letters with the same generator are merged
// and zero exponents dropped.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word single(int gen, int exp = 1) { return Word({{gen, exp}}); }
  static Word commutator(const Word& a, const Word& b);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // set by the torus family builders; q >= 1, odd
  std::optional<int> family_q;

  int generator_index(std::string_view name) const;  // -1 when absent
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Fundamental group of the homology 3-torus produced by a pair of opposite
// multiplicity-q log transforms: generators x, u, v, a, b with x central,
// a^q x = 1, b^-q x = 1 and [u,v] a b = 1.
Presentation t3_group(int q);
// The 4-dimensional mapping torus version: an extra central generator y.
Presentation t4_group(int q);

Presentation parse_presentation(const std::string& text);
std::string to_string(const Presentation& p);
std::string to_string(const Word& w, const Presentation& p);

}  // namespace homtor::grp
