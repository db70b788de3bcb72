#include "artinbd/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace artinbd {

Alphabet alphabet_of(Family f) {
  switch (f) {
    case Family::U: return Alphabet::U;
    case Family::V: return Alphabet::V;
    case Family::G: return Alphabet::G;
    case Family::X:
    case Family::Y: return Alphabet::XY;
    case Family::A:
    case Family::B: return Alphabet::AB;
    case Family::S:
    case Family::T: return Alphabet::ST;
    case Family::Beta: return Alphabet::Beta;
    case Family::Delta: return Alphabet::Delta;
  }
  throw std::invalid_argument("unknown family");
}

const char* family_prefix(Family f) {
  switch (f) {
    case Family::U: return "u";
    case Family::V: return "v";
    case Family::G: return "g";
    case Family::X: return "x";
    case Family::Y: return "y";
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::S: return "s";
    case Family::T: return "t";
    case Family::Beta: return "b";
    case Family::Delta: return "d";
  }
  return "?";
}

namespace {

void check_same_alphabet(const FreeWord& w1, const FreeWord& w2) {
  if (w1.is_identity() || w2.is_identity()) return;
  if (alphabet_of(w1.letters().front().sym.family) !=
      alphabet_of(w2.letters().front().sym.family)) {
    throw std::invalid_argument("words use different alphabets");
  }
}

void check_letter(const Letter& l) {
  if (l.sym.index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
}

}  // namespace

FreeWord::FreeWord(const std::vector<Letter>& raw) {
  for (const Letter& l : raw) push(l);
}

FreeWord FreeWord::generator(Family f, int index, int sign) {
  FreeWord w;
  w.push(Letter{GenSym{f, index}, sign});
  return w;
}

void FreeWord::push(Letter l) {
  check_letter(l);
  if (!letters_.empty() &&
      alphabet_of(letters_.front().sym.family) != alphabet_of(l.sym.family)) {
    throw std::invalid_argument("letter from a different alphabet");
  }
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void FreeWord::push_word(const FreeWord& w) {
  for (const Letter& l : w.letters_) push(l);
}

void FreeWord::push_word_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(it->inverse());
}

FreeWord multiply(const FreeWord& w1, const FreeWord& w2) {
  check_same_alphabet(w1, w2);
  FreeWord out = w1;
  out.push_word(w2);
  return out;
}

FreeWord multiply(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3) {
  return multiply(multiply(w1, w2), w3);
}

FreeWord invert(const FreeWord& w) {
  FreeWord out;
  out.push_word_inverse(w);
  return out;
}

FreeWord power(const FreeWord& w, long long k) {
  FreeWord out;
  const long long reps = std::llabs(k);
  for (long long i = 0; i < reps; ++i) {
    if (k > 0)
      out.push_word(w);
    else
      out.push_word_inverse(w);
  }
  return out;
}

FreeWord conjugate(const FreeWord& c, const FreeWord& w) {
  check_same_alphabet(c, w);
  FreeWord out = c;
  out.push_word(w);
  out.push_word_inverse(c);
  return out;
}

std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& w) {
  std::vector<Letter> core(w.letters());
  FreeWord conj;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo] == core[hi - 1].inverse()) {
    conj.push(core[lo]);
    ++lo;
    --hi;
  }
  FreeWord core_word;
  for (std::size_t i = lo; i < hi; ++i) core_word.push(core[i]);
  return {conj, core_word};
}

std::optional<FreeWord> conjugating_witness(const FreeWord& w1, const FreeWord& w2) {
  check_same_alphabet(w1, w2);
  auto [c1, r1] = cyclic_reduce(w1);
  auto [c2, r2] = cyclic_reduce(w2);
  if (r1.size() != r2.size()) return std::nullopt;
  const auto& a = r1.letters();
  const auto& b = r2.letters();
  const std::size_t len = a.size();
  if (len == 0) {
    FreeWord witness = c2;
    witness.push_word_inverse(c1);
    return witness;
  }
  for (std::size_t s = 0; s < len; ++s) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = a[(s + i) % len] == b[i];
    if (!match) continue;
    // shift-by-s core equals p^-1 r1 p with p the length-s prefix of r1
    FreeWord witness = c2;
    for (std::size_t i = s; i-- > 0;) witness.push(a[i].inverse());
    witness.push_word_inverse(c1);
    return witness;
  }
  return std::nullopt;
}

bool is_conjugate(const FreeWord& w1, const FreeWord& w2) {
  return conjugating_witness(w1, w2).has_value();
}

AbelianVector abelianize(const FreeWord& w, int rank) {
  AbelianVector v;
  v.rank = rank;
  v.coords.assign(static_cast<std::size_t>(rank), 0);
  for (const Letter& l : w.letters()) {
    if (l.sym.index > rank) throw std::invalid_argument("generator index out of range");
    v.coords[static_cast<std::size_t>(l.sym.index - 1)] += l.sign;
  }
  return v;
}

AbelianVector add(const AbelianVector& a, const AbelianVector& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  AbelianVector out = a;
  for (int i = 0; i < a.rank; ++i) out.coords[static_cast<std::size_t>(i)] += b.coords[static_cast<std::size_t>(i)];
  return out;
}

std::optional<long long> power_of(const FreeWord& w, const FreeWord& base) {
  if (base.is_identity()) throw std::invalid_argument("base must be nontrivial");
  if (w.is_identity()) return 0;
  auto [c, r] = cyclic_reduce(base);
  auto [cw, rw] = cyclic_reduce(w);
  if (r.is_identity() || rw.size() % r.size() != 0) return std::nullopt;
  const long long mag = static_cast<long long>(rw.size() / r.size());
  for (long long k : {mag, -mag}) {
    if (power(base, k) == w) return k;
  }
  return std::nullopt;
}

FreeWord apply_endomorphism(const FreeWord& w, const std::map<GenSym, FreeWord>& images) {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.sym);
    if (it == images.end()) throw std::invalid_argument("no image for generator");
    if (l.sign > 0)
      out.push_word(it->second);
    else
      out.push_word_inverse(it->second);
  }
  return out;
}

std::optional<AxisForm> match_axis_form(const FreeWord& w) {
  AxisForm form;
  const auto& ls = w.letters();
  std::size_t i = 0;
  for (const Letter& l : ls) {
    if (alphabet_of(l.sym.family) != Alphabet::XY)
      throw std::invalid_argument("word must be over the {x,y} alphabet");
  }
  while (i < ls.size() && ls[i].sym.family == Family::Y) {
    form.k += ls[i].sign;
    ++i;
  }
  if (i == ls.size() || ls[i].sym.family != Family::X) return std::nullopt;
  form.eps = ls[i].sign;
  ++i;
  while (i < ls.size() && ls[i].sym.family == Family::Y) {
    form.l += ls[i].sign;
    ++i;
  }
  if (i != ls.size()) return std::nullopt;
  return form;
}

std::pair<FreeWord, bool> substitution_product_xy(const FreeWord& w) {
  const FreeWord x = FreeWord::generator(Family::X, 1);
  const FreeWord y = FreeWord::generator(Family::Y, 1);
  const FreeWord xy = multiply(x, y);
  const GenSym s{Family::S, 1}, t{Family::T, 1};
  FreeWord left = apply_endomorphism(w, {{s, x}, {t, xy}});
  FreeWord right = apply_endomorphism(w, {{s, y}, {t, xy}});
  FreeWord product = multiply(left, right);
  return {product, product.is_identity()};
}

}  // namespace artinbd
