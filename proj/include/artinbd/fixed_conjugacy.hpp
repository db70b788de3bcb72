#pragma once

#include <optional>
#include <vector>

#include "artinbd/involutive.hpp"
#include "artinbd/representation.hpp"

namespace artinbd {

// Cut positions 1 <= i_1 < .. < i_k < n selecting the generator subset
// T = S minus {a_{i_1}, .., a_{i_k}}.
struct CutSet {
  int n;
  std::vector<int> cuts;
  CutSet(int n, std::vector<int> cuts);
  std::vector<int> kept_generators() const;  // indices of T
  FactorPartition partition() const;
};

// Generators of the subgroup of the free product fixed by every element of
// T: one x_i .. x_j range word per interval block of the cut partition.
std::vector<InvolutiveWord> fixed_gens(const CutSet& c);

// Membership in <fixed_gens(c)>: every block syllable must be a power of its
// range word.
bool in_fixed_subgroup(const InvolutiveWord& w, const CutSet& c);

bool is_fixed(const Representation& rep, const BraidWord& b, const FreeWord& w);
bool is_fixed(const Representation& rep, const BraidWord& b, const InvolutiveWord& w);
bool fixed_by_all(const Representation& rep, const FreeWord& w);
bool fixed_by_all(const Representation& rep, const InvolutiveWord& w);

// k with w conjugate to (x_1..x_n)^k, via cyclic-shift matching.
std::optional<long long> conj_to_delta_power(const InvolutiveWord& w);

// k with w conjugate to (u_1..u_n)^k.
std::optional<long long> conj_to_u0_power(const FreeWord& w, int n);

struct U0Classification {
  enum class Kind { GeneratorPower, ProductPower, Other };
  Kind kind = Kind::Other;
  int j = 0;         // generator index for GeneratorPower
  long long k = 0;   // exponent
  friend bool operator==(const U0Classification&, const U0Classification&) = default;
};

// Conjugacy class against the named targets: a power of a single u_j, a
// power of u_1..u_n, or neither.
U0Classification dyer_grossman_classify(const FreeWord& w, int n);

// a_i(w) conjugate to w for every generator.
bool braid_invariant(const Representation& rep, const FreeWord& w);
bool braid_invariant(const Representation& rep, const InvolutiveWord& w);
// a_i^2(w) conjugate to w for every generator.
bool braid_square_invariant(const Representation& rep, const FreeWord& w);

// ---------------------------------------------------------------------------
// Deterministic enumeration of all reduced words up to a length bound, in
// length-lexicographic order (x1 < x2 < ..; u1 < u1^-1 < u2 < ..).

template <typename Fn>
void for_each_k_word(int n, int max_len, Fn&& fn) {
  std::vector<int> letters;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(InvolutiveWord(n, letters));
      return;
    }
    for (int l = 1; l <= n; ++l) {
      if (!letters.empty() && letters.back() == l) continue;
      letters.push_back(l);
      self(self, remaining - 1);
      letters.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(rec, len);
}

template <typename Fn>
void for_each_free_word(Family family, int rank, int max_len, Fn&& fn) {
  std::vector<Letter> letters;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(FreeWord(letters));
      return;
    }
    for (int idx = 1; idx <= rank; ++idx) {
      for (int sign : {1, -1}) {
        const Letter l{GenSym{family, idx}, sign};
        if (!letters.empty() && letters.back() == l.inverse()) continue;
        letters.push_back(l);
        self(self, remaining - 1);
        letters.pop_back();
      }
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(rec, len);
}

template <typename Fn>
void for_each_braid_word(int n, int max_len, Fn&& fn) {
  std::vector<BraidLetter> letters;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(BraidWord(n, letters));
      return;
    }
    for (int idx = 1; idx < n; ++idx) {
      for (int sign : {1, -1}) {
        const BraidLetter l{idx, sign};
        if (!letters.empty() && letters.back() == l.inverse()) continue;
        letters.push_back(l);
        self(self, remaining - 1);
        letters.pop_back();
      }
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(rec, len);
}

}  // namespace artinbd
