#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "artinbd/braid.hpp"
#include "artinbd/free_word.hpp"
#include "artinbd/involutive.hpp"

namespace artinbd {

// Word grammar shared by every command: space separated tokens, each a
// family letter plus index plus optional ^k exponent; the identity is "e".
// Single-letter alphabets ({x,y}, {a,b}, {s,t}) omit the index.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

FreeWord parse_free_word(const std::string& text, Alphabet alphabet);
// n = 0 infers the factor count from the largest letter.
InvolutiveWord parse_involutive_word(const std::string& text, int n = 0);
BraidWord parse_braid_word(const std::string& text, int n);

std::string to_text(const FreeWord& w);
std::string to_text(const InvolutiveWord& w);
std::string to_text(const BraidWord& b);
std::string to_text(const Permutation& p);
// names[i] is the display name of factor i.
std::string to_text(const FreeProductWord& w, const std::vector<std::string>& names);

}  // namespace artinbd
