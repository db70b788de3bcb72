#include "artinbd/involutive.hpp"

#include <cstdlib>
#include <stdexcept>

namespace artinbd {

InvolutiveWord::InvolutiveWord(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("factor count must be >= 1");
}

InvolutiveWord::InvolutiveWord(int n, const std::vector<int>& raw) : InvolutiveWord(n) {
  for (int l : raw) push(l);
}

void InvolutiveWord::push(int letter) {
  if (letter < 1 || letter > n_) throw std::invalid_argument("letter index out of range");
  if (!letters_.empty() && letters_.back() == letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

void InvolutiveWord::push_word(const InvolutiveWord& w) {
  if (w.n_ != n_) throw std::invalid_argument("factor count mismatch");
  for (int l : w.letters_) push(l);
}

void InvolutiveWord::push_word_inverse(const InvolutiveWord& w) {
  if (w.n_ != n_) throw std::invalid_argument("factor count mismatch");
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(*it);
}

InvolutiveWord k_multiply(const InvolutiveWord& w1, const InvolutiveWord& w2) {
  InvolutiveWord out = w1;
  out.push_word(w2);
  return out;
}

InvolutiveWord k_invert(const InvolutiveWord& w) {
  InvolutiveWord out(w.n());
  out.push_word_inverse(w);
  return out;
}

InvolutiveWord k_power(const InvolutiveWord& w, long long k) {
  InvolutiveWord out(w.n());
  const long long reps = std::llabs(k);
  for (long long i = 0; i < reps; ++i) {
    if (k > 0)
      out.push_word(w);
    else
      out.push_word_inverse(w);
  }
  return out;
}

InvolutiveWord k_conjugate_by(const InvolutiveWord& c, const InvolutiveWord& w) {
  InvolutiveWord out = c;
  out.push_word(w);
  out.push_word_inverse(c);
  return out;
}

int kappa(const InvolutiveWord& w) { return static_cast<int>(w.size() % 2); }

std::pair<InvolutiveWord, InvolutiveWord> k_cyclic_reduce(const InvolutiveWord& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  InvolutiveWord conj(w.n());
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1]) {
    conj.push(ls[lo]);
    ++lo;
    --hi;
  }
  InvolutiveWord core(w.n());
  for (std::size_t i = lo; i < hi; ++i) core.push(ls[i]);
  return {conj, core};
}

std::optional<InvolutiveWord> k_conjugating_witness(const InvolutiveWord& w1,
                                                    const InvolutiveWord& w2) {
  if (w1.n() != w2.n()) throw std::invalid_argument("factor count mismatch");
  auto [c1, r1] = k_cyclic_reduce(w1);
  auto [c2, r2] = k_cyclic_reduce(w2);
  if (r1.size() != r2.size()) return std::nullopt;
  const auto& a = r1.letters();
  const auto& b = r2.letters();
  const std::size_t len = a.size();
  if (len == 0) {
    InvolutiveWord witness = c2;
    witness.push_word_inverse(c1);
    return witness;
  }
  for (std::size_t s = 0; s < len; ++s) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = a[(s + i) % len] == b[i];
    if (!match) continue;
    InvolutiveWord witness = c2;
    for (std::size_t i = s; i-- > 0;) witness.push(a[i]);
    witness.push_word_inverse(c1);
    return witness;
  }
  return std::nullopt;
}

InvolutiveWord delta_word(int n) {
  InvolutiveWord w(n);
  for (int i = 1; i <= n; ++i) w.push(i);
  return w;
}

InvolutiveWord delta_range(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("require 1 <= i < j <= n");
  InvolutiveWord w(n);
  for (int l = i; l <= j; ++l) w.push(l);
  return w;
}

InvolutiveWord embed_v(const FreeWord& w, int n) {
  InvolutiveWord out(n);
  for (const Letter& l : w.letters()) {
    if (l.sym.family != Family::V) throw std::invalid_argument("expected a v-word");
    if (l.sym.index > n - 1) throw std::invalid_argument("generator index out of range");
    if (l.sign > 0) {
      out.push(1);
      out.push(l.sym.index + 1);
    } else {
      out.push(l.sym.index + 1);
      out.push(1);
    }
  }
  return out;
}

InvolutiveWord embed_g(const FreeWord& w, int n) {
  InvolutiveWord out(n);
  for (const Letter& l : w.letters()) {
    if (l.sym.family != Family::G) throw std::invalid_argument("expected a g-word");
    if (l.sym.index > n - 1) throw std::invalid_argument("generator index out of range");
    if (l.sign > 0) {
      out.push(l.sym.index);
      out.push(l.sym.index + 1);
    } else {
      out.push(l.sym.index + 1);
      out.push(l.sym.index);
    }
  }
  return out;
}

std::optional<FreeWord> express_in_g(const InvolutiveWord& w) {
  if (kappa(w) != 0) return std::nullopt;
  FreeWord out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); i += 2) {
    const int a = ls[i], b = ls[i + 1];
    if (a < b) {
      for (int j = a; j < b; ++j) out.push(Letter{GenSym{Family::G, j}, 1});
    } else {
      for (int j = a - 1; j >= b; --j) out.push(Letter{GenSym{Family::G, j}, -1});
    }
  }
  return out;
}

FreeWord v_to_g(const FreeWord& w) {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    if (l.sym.family != Family::V) throw std::invalid_argument("expected a v-word");
    if (l.sign > 0) {
      for (int j = 1; j <= l.sym.index; ++j) out.push(Letter{GenSym{Family::G, j}, 1});
    } else {
      for (int j = l.sym.index; j >= 1; --j) out.push(Letter{GenSym{Family::G, j}, -1});
    }
  }
  return out;
}

FreeWord g_to_v(const FreeWord& w) {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    if (l.sym.family != Family::G) throw std::invalid_argument("expected a g-word");
    const int i = l.sym.index;
    if (i == 1) {
      out.push(Letter{GenSym{Family::V, 1}, l.sign});
    } else if (l.sign > 0) {
      out.push(Letter{GenSym{Family::V, i - 1}, -1});
      out.push(Letter{GenSym{Family::V, i}, 1});
    } else {
      out.push(Letter{GenSym{Family::V, i}, -1});
      out.push(Letter{GenSym{Family::V, i - 1}, 1});
    }
  }
  return out;
}

InvolutiveWord k_apply_endomorphism(const InvolutiveWord& w,
                                    const std::vector<InvolutiveWord>& images) {
  if (images.empty()) throw std::invalid_argument("no images");
  InvolutiveWord out(images.front().n());
  for (int l : w.letters()) {
    if (l > static_cast<int>(images.size())) throw std::invalid_argument("no image for letter");
    out.push_word(images[static_cast<std::size_t>(l - 1)]);
  }
  return out;
}

FactorPartition::FactorPartition(int n, const std::vector<int>& cuts) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  int lo = 1;
  for (int c : cuts) {
    if (c < lo || c >= n) throw std::invalid_argument("cuts must be strictly increasing in [1, n-1]");
    blocks_.emplace_back(lo, c);
    lo = c + 1;
  }
  blocks_.emplace_back(lo, n);
}

int FactorPartition::block_of(int letter) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (letter >= blocks_[i].first && letter <= blocks_[i].second)
      return static_cast<int>(i + 1);
  }
  throw std::invalid_argument("letter outside partition");
}

std::vector<std::pair<int, InvolutiveWord>> syllable_decompose(const InvolutiveWord& w,
                                                               const FactorPartition& p) {
  std::vector<std::pair<int, InvolutiveWord>> out;
  for (int l : w.letters()) {
    const int b = p.block_of(l);
    if (out.empty() || out.back().first != b) out.emplace_back(b, InvolutiveWord(w.n()));
    out.back().second.push(l);
  }
  return out;
}

// --- free products of cyclic groups ---------------------------------------

FreeProductWord::FreeProductWord(std::vector<long long> orders) : orders_(std::move(orders)) {
  for (long long m : orders_) {
    if (m < 0 || m == 1) throw std::invalid_argument("factor order must be 0 (infinite) or >= 2");
  }
}

FreeProductWord::FreeProductWord(std::vector<long long> orders, const std::vector<FpSyllable>& raw)
    : FreeProductWord(std::move(orders)) {
  for (const FpSyllable& s : raw) push(s.factor, s.exp);
}

long long FreeProductWord::normalize_exp(int factor, long long exp) const {
  const long long m = orders_[static_cast<std::size_t>(factor)];
  if (m == 0) return exp;
  return ((exp % m) + m) % m;
}

void FreeProductWord::push(int factor, long long exp) {
  if (factor < 0 || factor >= factor_count()) throw std::invalid_argument("factor id out of range");
  long long e = exp;
  if (!syl_.empty() && syl_.back().factor == factor) {
    e += syl_.back().exp;
    syl_.pop_back();
  }
  e = normalize_exp(factor, e);
  if (e != 0) syl_.push_back(FpSyllable{factor, e});
}

void FreeProductWord::push_word(const FreeProductWord& w) {
  if (w.orders_ != orders_) throw std::invalid_argument("factor orders mismatch");
  for (const FpSyllable& s : w.syl_) push(s.factor, s.exp);
}

void FreeProductWord::push_word_inverse(const FreeProductWord& w) {
  if (w.orders_ != orders_) throw std::invalid_argument("factor orders mismatch");
  for (auto it = w.syl_.rbegin(); it != w.syl_.rend(); ++it) push(it->factor, -it->exp);
}

FreeProductWord fp_multiply(const FreeProductWord& w1, const FreeProductWord& w2) {
  FreeProductWord out = w1;
  out.push_word(w2);
  return out;
}

FreeProductWord fp_invert(const FreeProductWord& w) {
  FreeProductWord out(w.orders());
  out.push_word_inverse(w);
  return out;
}

FreeProductWord fp_power(const FreeProductWord& w, long long k) {
  FreeProductWord out(w.orders());
  const long long reps = std::llabs(k);
  for (long long i = 0; i < reps; ++i) {
    if (k > 0)
      out.push_word(w);
    else
      out.push_word_inverse(w);
  }
  return out;
}

FreeProductWord fp_conjugate_by(const FreeProductWord& c, const FreeProductWord& w) {
  FreeProductWord out = c;
  out.push_word(w);
  out.push_word_inverse(c);
  return out;
}

std::pair<FreeProductWord, FreeProductWord> fp_cyclic_reduce(const FreeProductWord& w) {
  FreeProductWord conj(w.orders());
  FreeProductWord core = w;
  while (core.syllable_length() >= 2 &&
         core.syllables().front().factor == core.syllables().back().factor) {
    const FpSyllable last = core.syllables().back();
    // core = last^-1 . (last . core-without-last) . last
    conj.push(last.factor, -last.exp);
    FreeProductWord next(w.orders());
    next.push(last.factor, last.exp);
    for (std::size_t i = 0; i + 1 < core.syllable_length(); ++i) {
      const FpSyllable& s = core.syllables()[i];
      next.push(s.factor, s.exp);
    }
    core = next;
  }
  return {conj, core};
}

std::optional<FreeProductWord> fp_conjugating_witness(const FreeProductWord& w1,
                                                      const FreeProductWord& w2) {
  if (w1.orders() != w2.orders()) throw std::invalid_argument("factor orders mismatch");
  auto [c1, r1] = fp_cyclic_reduce(w1);
  auto [c2, r2] = fp_cyclic_reduce(w2);
  if (r1.syllable_length() != r2.syllable_length()) return std::nullopt;
  const auto& a = r1.syllables();
  const auto& b = r2.syllables();
  const std::size_t len = a.size();
  auto finish = [&](FreeProductWord witness) -> std::optional<FreeProductWord> {
    witness.push_word_inverse(c1);
    return witness;
  };
  if (len == 0) return finish(c2);
  if (len == 1) {
    // conjugacy inside a cyclic factor is equality
    if (a[0] != b[0]) return std::nullopt;
    return finish(c2);
  }
  for (std::size_t s = 0; s < len; ++s) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = a[(s + i) % len] == b[i];
    if (!match) continue;
    FreeProductWord witness = c2;
    for (std::size_t i = s; i-- > 0;) witness.push(a[i].factor, -a[i].exp);
    return finish(witness);
  }
  return std::nullopt;
}

FreeProductWord fp_apply_endomorphism(const FreeProductWord& w,
                                      const std::vector<FreeProductWord>& images) {
  if (images.empty()) throw std::invalid_argument("no images");
  FreeProductWord out(images.front().orders());
  for (const FpSyllable& s : w.syllables()) {
    if (s.factor >= static_cast<int>(images.size()))
      throw std::invalid_argument("no image for factor");
    out.push_word(fp_power(images[static_cast<std::size_t>(s.factor)], s.exp));
  }
  return out;
}

}  // namespace artinbd
