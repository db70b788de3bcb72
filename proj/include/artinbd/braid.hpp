#pragma once

#include <vector>

namespace artinbd {

struct BraidLetter {
  int index = 1;  // generator index, 1 <= index <= n-1
  int sign = 1;
  BraidLetter inverse() const { return BraidLetter{index, -sign}; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// Word in the standard generators of the n-strand braid group. Concatenation
// is freely reduced; no further normal form is imposed, so syntactic equality
// is finer than equality in the group (use braid_equal for the latter).
class BraidWord {
 public:
  explicit BraidWord(int n);
  BraidWord(int n, const std::vector<BraidLetter>& raw);

  int n() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool is_empty_word() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(BraidLetter l);
  void push_word(const BraidWord& w);
  void push_word_inverse(const BraidWord& w);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<BraidLetter> letters_;
};

BraidWord braid_multiply(const BraidWord& b1, const BraidWord& b2);
BraidWord braid_invert(const BraidWord& b);
BraidWord braid_power(const BraidWord& b, long long k);

// Exponent sum; the homomorphism to Z sending each generator to 1.
long long length_hom(const BraidWord& b);

class Permutation {
 public:
  explicit Permutation(int n);                     // identity
  explicit Permutation(std::vector<int> images);   // 1-based images
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(images_.size()); }
  int map(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Left-to-right composition: compose(p, q) maps i to p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

// Image in the symmetric group; each generator maps to the transposition
// (i, i+1).
Permutation perm_image(const BraidWord& b);

// The full twist (a_1 a_2 .. a_{n-1})^n generating the centre of the braid
// group, and the two chain braids used for the rank n-1 actions.
BraidWord zeta(int n);
BraidWord beta0();                // (a1 a2 a3)^2 in the 4-strand group
BraidWord beta_chain(int n);      // a1 a2 .. a_{n-2}, n >= 3

}  // namespace artinbd
