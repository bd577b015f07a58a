#include "homtor/presentation.hpp"

#include <cctype>

namespace homtor::grp {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  return Word(std::move(rev));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> cat = a.letters_;
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(cat));
}

Word Word::commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

int Presentation::generator_index(std::string_view name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return int(i);
  return -1;
}

namespace {

Presentation family_base(int q, bool with_y) {
  if (q < 1 || q % 2 == 0)
    throw std::invalid_argument("family builders need odd q >= 1");
  Presentation p;
  p.generators = with_y
                     ? std::vector<std::string>{"x", "y", "u", "v", "a", "b"}
                     : std::vector<std::string>{"x", "u", "v", "a", "b"};
  p.family_q = q;
  auto g = [&](const char* name) {
    return Word::single(p.generator_index(name));
  };
  // centrality, expanded to explicit commutators
  for (const char* name : {"u", "v", "a", "b"})
    p.relators.push_back(Word::commutator(g(name), g("x")));
  if (with_y) {
    p.relators.push_back(Word::commutator(g("y"), g("x")));
    for (const char* name : {"u", "v", "a", "b"})
      p.relators.push_back(Word::commutator(g(name), g("y")));
  }
  p.relators.push_back(Word::single(p.generator_index("a"), q) * g("x"));
  p.relators.push_back(Word::single(p.generator_index("b"), -q) * g("x"));
  p.relators.push_back(Word::commutator(g("u"), g("v")) * g("a") * g("b"));
  return p;
}

}  // namespace

Presentation t3_group(int q) { return family_base(q, false); }
Presentation t4_group(int q) { return family_base(q, true); }

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
  void expect(char c) {
    skip_ws();
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
};

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string parse_name(Cursor& cur) {
  cur.skip_ws();
  if (cur.done() || !name_start(cur.peek())) cur.fail("expected a name");
  std::string out;
  while (!cur.done() && name_char(cur.peek())) {
    out += cur.peek();
    cur.advance();
  }
  return out;
}

int parse_int(Cursor& cur) {
  cur.skip_ws();
  bool neg = false;
  if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    cur.advance();
  }
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected an integer");
  long long v = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.peek() - '0');
    if (v > 1'000'000) cur.fail("exponent out of range");
    cur.advance();
  }
  return int(neg ? -v : v);
}

// A word ends (without consuming the terminator) at ',', '>' or ']'.
Word parse_word(Cursor& cur, const Presentation& p);

Word parse_term(Cursor& cur, const Presentation& p) {
  cur.skip_ws();
  if (cur.peek() == '[') {
    cur.advance();
    Word w1 = parse_word(cur, p);
    cur.expect(',');
    Word w2 = parse_word(cur, p);
    cur.expect(']');
    return Word::commutator(w1, w2);
  }
  int nline = cur.line, ncol = cur.col;
  std::string name = parse_name(cur);
  int gen = p.generator_index(name);
  if (gen < 0)
    throw ParseError("undeclared generator '" + name + "'", nline, ncol);
  int exp = 1;
  cur.skip_ws();
  if (!cur.done() && cur.peek() == '^') {
    cur.advance();
    exp = parse_int(cur);
  }
  return Word::single(gen, exp);
}

Word parse_word(Cursor& cur, const Presentation& p) {
  Word out = parse_term(cur, p);
  for (;;) {
    cur.skip_ws();
    if (cur.done()) cur.fail("unterminated word");
    char c = cur.peek();
    if (c == ',' || c == '>' || c == ']') return out;
    if (c == '*') cur.advance();
    out = out * parse_term(cur, p);
  }
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  Presentation p;
  cur.expect('<');
  p.generators.push_back(parse_name(cur));
  for (;;) {
    cur.skip_ws();
    if (cur.done()) cur.fail("unterminated generator list");
    if (cur.peek() != ',') break;
    cur.advance();
    std::string name = parse_name(cur);
    if (p.generator_index(name) >= 0) cur.fail("duplicate generator '" + name + "'");
    p.generators.push_back(std::move(name));
  }
  cur.expect('|');
  cur.skip_ws();
  if (cur.done()) cur.fail("unterminated presentation");
  if (cur.peek() != '>') {
    p.relators.push_back(parse_word(cur, p));
    for (;;) {
      cur.skip_ws();
      if (cur.done()) cur.fail("unterminated relator list");
      if (cur.peek() != ',') break;
      cur.advance();
      p.relators.push_back(parse_word(cur, p));
    }
  }
  cur.expect('>');
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input after presentation");
  return p;
}

namespace {

// Prints commutators of single unsigned letters back in bracket form, so
// the family presentations round-trip through their textual shape.
std::string word_to_string(const Word& w, const Presentation& p) {
  const auto& ls = w.letters();
  std::string out;
  size_t i = 0;
  auto emit_sep = [&] {
    if (!out.empty()) out += ' ';
  };
  while (i < ls.size()) {
    if (i + 3 < ls.size() && ls[i].exp == 1 && ls[i + 1].exp == 1 &&
        ls[i + 2].exp == -1 && ls[i + 3].exp == -1 &&
        ls[i].gen == ls[i + 2].gen && ls[i + 1].gen == ls[i + 3].gen) {
      emit_sep();
      out += '[' + p.generators[ls[i].gen] + ',' + p.generators[ls[i + 1].gen] + ']';
      i += 4;
      continue;
    }
    emit_sep();
    out += p.generators[ls[i].gen];
    if (ls[i].exp != 1) out += '^' + std::to_string(ls[i].exp);
    ++i;
  }
  return out;
}

}  // namespace

std::string to_string(const Word& w, const Presentation& p) {
  return word_to_string(w, p);
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ',';
    out += p.generators[i];
  }
  out += " | ";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += word_to_string(p.relators[i], p);
  }
  out += ">";
  return out;
}

}  // namespace homtor::grp
