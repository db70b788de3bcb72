#include "artinbd/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace artinbd {

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("strand count must be >= 2");
}

BraidWord::BraidWord(int n, const std::vector<BraidLetter>& raw) : BraidWord(n) {
  for (const BraidLetter& l : raw) push(l);
}

void BraidWord::push(BraidLetter l) {
  if (l.index < 1 || l.index >= n_) throw std::invalid_argument("generator index out of range");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void BraidWord::push_word(const BraidWord& w) {
  if (w.n_ != n_) throw std::invalid_argument("strand count mismatch");
  for (const BraidLetter& l : w.letters_) push(l);
}

void BraidWord::push_word_inverse(const BraidWord& w) {
  if (w.n_ != n_) throw std::invalid_argument("strand count mismatch");
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(it->inverse());
}

BraidWord braid_multiply(const BraidWord& b1, const BraidWord& b2) {
  BraidWord out = b1;
  out.push_word(b2);
  return out;
}

BraidWord braid_invert(const BraidWord& b) {
  BraidWord out(b.n());
  out.push_word_inverse(b);
  return out;
}

BraidWord braid_power(const BraidWord& b, long long k) {
  BraidWord out(b.n());
  const long long reps = std::llabs(k);
  for (long long i = 0; i < reps; ++i) {
    if (k > 0)
      out.push_word(b);
    else
      out.push_word_inverse(b);
  }
  return out;
}

long long length_hom(const BraidWord& b) {
  long long sum = 0;
  for (const BraidLetter& l : b.letters()) sum += l.sign;
  return sum;
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (map(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>(map(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw std::invalid_argument("degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.n(); ++i) images[static_cast<std::size_t>(i - 1)] = p.map(q.map(i));
  return Permutation(std::move(images));
}

Permutation perm_image(const BraidWord& b) {
  Permutation acc(b.n());
  for (const BraidLetter& l : b.letters())
    acc = compose(acc, Permutation::transposition(b.n(), l.index, l.index + 1));
  return acc;
}

BraidWord zeta(int n) {
  BraidWord b(n);
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) b.push(BraidLetter{i, 1});
  return b;
}

BraidWord beta0() {
  BraidWord b(4);
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 1; i <= 3; ++i) b.push(BraidLetter{i, 1});
  return b;
}

BraidWord beta_chain(int n) {
  if (n < 3) throw std::invalid_argument("chain braid needs n >= 3");
  BraidWord b(n);
  for (int i = 1; i <= n - 2; ++i) b.push(BraidLetter{i, 1});
  return b;
}

}  // namespace artinbd
