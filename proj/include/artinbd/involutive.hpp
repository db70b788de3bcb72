#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artinbd/free_word.hpp"

namespace artinbd {

// Reduced word in the free product of n copies of C2 with generators
// x_1,..,x_n. Letters are generator indices; x_i^2 = 1, so no signs and no
// adjacent equal letters.
class InvolutiveWord {
 public:
  explicit InvolutiveWord(int n);
  InvolutiveWord(int n, const std::vector<int>& raw);

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(int letter);
  void push_word(const InvolutiveWord& w);
  void push_word_inverse(const InvolutiveWord& w);

  friend bool operator==(const InvolutiveWord&, const InvolutiveWord&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

InvolutiveWord k_multiply(const InvolutiveWord& w1, const InvolutiveWord& w2);
InvolutiveWord k_invert(const InvolutiveWord& w);
InvolutiveWord k_power(const InvolutiveWord& w, long long k);
InvolutiveWord k_conjugate_by(const InvolutiveWord& c, const InvolutiveWord& w);

// Parity of the reduced length: the epimorphism onto C2 that kills no free
// factor. Its kernel is the rank n-1 free subgroup.
int kappa(const InvolutiveWord& w);

std::pair<InvolutiveWord, InvolutiveWord> k_cyclic_reduce(const InvolutiveWord& w);
std::optional<InvolutiveWord> k_conjugating_witness(const InvolutiveWord& w1,
                                                    const InvolutiveWord& w2);

// delta = x_1 x_2 .. x_n and its subrange x_i .. x_j (requires i < j).
InvolutiveWord delta_word(int n);
InvolutiveWord delta_range(int i, int j, int n);

// The free basis v_i -> x_1 x_{i+1} of ker kappa, and the local basis
// g_i -> x_i x_{i+1}. Both are injective homomorphisms F_{n-1} -> K.
InvolutiveWord embed_v(const FreeWord& w, int n);
InvolutiveWord embed_g(const FreeWord& w, int n);

// Section of embed_g on ker kappa: telescopes letter pairs x_a x_b into
// g-words. Returns nothing on odd-parity input.
std::optional<FreeWord> express_in_g(const InvolutiveWord& w);

// Basis changes g_1 = v_1, g_i = v_{i-1}^-1 v_i, v_i = g_1 g_2 .. g_i.
FreeWord v_to_g(const FreeWord& w);
FreeWord g_to_v(const FreeWord& w);

// Substitutes images[i-1] for x_i and reduces.
InvolutiveWord k_apply_endomorphism(const InvolutiveWord& w,
                                    const std::vector<InvolutiveWord>& images);

// Partition of {1..n} into consecutive intervals, one block per interval.
class FactorPartition {
 public:
  // cuts are the right endpoints of all blocks except the last,
  // strictly increasing, each in [1, n-1].
  FactorPartition(int n, const std::vector<int>& cuts);
  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  // 1-based block id of a letter
  int block_of(int letter) const;
  std::pair<int, int> block_range(int id) const { return blocks_[static_cast<std::size_t>(id - 1)]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> blocks_;
};

// Maximal runs of letters from a single block; concatenation recovers w and
// the number of syllables is the syllable length of w for this partition.
std::vector<std::pair<int, InvolutiveWord>> syllable_decompose(const InvolutiveWord& w,
                                                               const FactorPartition& p);

// ---------------------------------------------------------------------------
// Free products of cyclic groups (C_2 * C_m, C_k * Z, ...).

struct FpSyllable {
  int factor = 0;        // 0-based factor id
  long long exp = 0;     // nonzero; in {1..order-1} for finite factors
  friend bool operator==(const FpSyllable&, const FpSyllable&) = default;
};

// Reduced syllable word in a free product of cyclic groups. orders[i] is the
// order of factor i, with 0 meaning infinite.
class FreeProductWord {
 public:
  explicit FreeProductWord(std::vector<long long> orders);
  FreeProductWord(std::vector<long long> orders, const std::vector<FpSyllable>& raw);

  const std::vector<long long>& orders() const { return orders_; }
  const std::vector<FpSyllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  std::size_t syllable_length() const { return syl_.size(); }

  void push(int factor, long long exp);
  void push_word(const FreeProductWord& w);
  void push_word_inverse(const FreeProductWord& w);

  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  int factor_count() const { return static_cast<int>(orders_.size()); }
  long long normalize_exp(int factor, long long exp) const;

  std::vector<long long> orders_;
  std::vector<FpSyllable> syl_;
};

FreeProductWord fp_multiply(const FreeProductWord& w1, const FreeProductWord& w2);
FreeProductWord fp_invert(const FreeProductWord& w);
FreeProductWord fp_power(const FreeProductWord& w, long long k);
FreeProductWord fp_conjugate_by(const FreeProductWord& c, const FreeProductWord& w);

std::pair<FreeProductWord, FreeProductWord> fp_cyclic_reduce(const FreeProductWord& w);
std::optional<FreeProductWord> fp_conjugating_witness(const FreeProductWord& w1,
                                                      const FreeProductWord& w2);

FreeProductWord fp_apply_endomorphism(const FreeProductWord& w,
                                      const std::vector<FreeProductWord>& images);

}  // namespace artinbd
