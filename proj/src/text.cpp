#include "artinbd/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace artinbd {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error(message + " (column " + std::to_string(column + 1) + ")"),
      column_(column) {}

namespace {

struct Token {
  std::string head;   // letter prefix
  int index = 0;      // 0 = absent
  long long exp = 1;  // from ^k
  std::size_t column = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Token tok;
    tok.column = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
      tok.head.push_back(text[i++]);
    if (tok.head.empty()) throw ParseError("expected a generator letter", i);
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits_start) tok.index = std::atoi(text.substr(digits_start, i - digits_start).c_str());
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t exp_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == exp_start) throw ParseError("expected an exponent after '^'", i);
      tok.exp = std::atoll(text.substr(exp_start, i - exp_start).c_str());
      if (tok.exp == 0) throw ParseError("zero exponent", exp_start);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character in token", i);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

bool is_identity_text(const std::vector<Token>& tokens) {
  return tokens.size() == 1 && tokens[0].head == "e" && tokens[0].index == 0 &&
         tokens[0].exp == 1;
}

Family family_for(Alphabet alphabet, const std::string& head, std::size_t column) {
  switch (alphabet) {
    case Alphabet::U:
      if (head == "u") return Family::U;
      break;
    case Alphabet::V:
      if (head == "v") return Family::V;
      break;
    case Alphabet::G:
      if (head == "g") return Family::G;
      break;
    case Alphabet::XY:
      if (head == "x") return Family::X;
      if (head == "y") return Family::Y;
      break;
    case Alphabet::AB:
      if (head == "a") return Family::A;
      if (head == "b") return Family::B;
      break;
    case Alphabet::ST:
      if (head == "s") return Family::S;
      if (head == "t") return Family::T;
      break;
    case Alphabet::Beta:
      if (head == "b") return Family::Beta;
      break;
    case Alphabet::Delta:
      if (head == "d") return Family::Delta;
      break;
  }
  throw ParseError("letter '" + head + "' not in this alphabet", column);
}

bool indexed_alphabet(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::XY:
    case Alphabet::AB:
    case Alphabet::ST: return false;
    default: return true;
  }
}

}  // namespace

FreeWord parse_free_word(const std::string& text, Alphabet alphabet) {
  const auto tokens = tokenize(text);
  if (is_identity_text(tokens)) return FreeWord();
  FreeWord w;
  for (const Token& tok : tokens) {
    const Family fam = family_for(alphabet, tok.head, tok.column);
    int index = tok.index;
    if (indexed_alphabet(alphabet)) {
      if (index == 0) throw ParseError("missing generator index", tok.column);
    } else {
      if (index != 0 && index != 1) throw ParseError("unexpected generator index", tok.column);
      index = 1;
    }
    const int sign = tok.exp > 0 ? 1 : -1;
    for (long long r = 0; r < std::llabs(tok.exp); ++r)
      w.push(Letter{GenSym{fam, index}, sign});
  }
  return w;
}

InvolutiveWord parse_involutive_word(const std::string& text, int n) {
  const auto tokens = tokenize(text);
  std::vector<int> letters;
  if (!is_identity_text(tokens)) {
    for (const Token& tok : tokens) {
      if (tok.head != "x") throw ParseError("expected letter 'x'", tok.column);
      if (tok.index == 0) throw ParseError("missing generator index", tok.column);
      if (tok.exp < 0) throw ParseError("negative exponent on an involution", tok.column);
      for (long long r = 0; r < tok.exp; ++r) letters.push_back(tok.index);
    }
  }
  if (n == 0) {
    n = 1;
    for (int l : letters) n = std::max(n, l);
  }
  return InvolutiveWord(n, letters);
}

BraidWord parse_braid_word(const std::string& text, int n) {
  const auto tokens = tokenize(text);
  BraidWord b(n);
  if (is_identity_text(tokens)) return b;
  for (const Token& tok : tokens) {
    if (tok.head != "a") throw ParseError("expected letter 'a'", tok.column);
    if (tok.index == 0) throw ParseError("missing generator index", tok.column);
    if (tok.index >= n) throw ParseError("generator index out of range", tok.column);
    const int sign = tok.exp > 0 ? 1 : -1;
    for (long long r = 0; r < std::llabs(tok.exp); ++r) b.push(BraidLetter{tok.index, sign});
  }
  return b;
}

std::string to_text(const FreeWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += family_prefix(l.sym.family);
    if (indexed_alphabet(alphabet_of(l.sym.family))) out += std::to_string(l.sym.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_text(const InvolutiveWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l);
  }
  return out;
}

std::string to_text(const BraidWord& b) {
  if (b.is_empty_word()) return "e";
  std::string out;
  for (const BraidLetter& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += "a" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_text(const Permutation& p) {
  std::string out = "(";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p.map(i));
  }
  return out + ")";
}

std::string to_text(const FreeProductWord& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const FpSyllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(s.factor));
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace artinbd
