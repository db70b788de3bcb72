#include "artinbd/fixed_conjugacy.hpp"

#include <stdexcept>

namespace artinbd {

CutSet::CutSet(int n_, std::vector<int> cuts_) : n(n_), cuts(std::move(cuts_)) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  int prev = 0;
  for (int c : cuts) {
    if (c <= prev || c >= n) throw std::invalid_argument("cuts must be strictly increasing in [1, n-1]");
    prev = c;
  }
}

std::vector<int> CutSet::kept_generators() const {
  std::vector<int> kept;
  std::size_t ci = 0;
  for (int i = 1; i < n; ++i) {
    if (ci < cuts.size() && cuts[ci] == i) {
      ++ci;
      continue;
    }
    kept.push_back(i);
  }
  return kept;
}

FactorPartition CutSet::partition() const { return FactorPartition(n, cuts); }

namespace {

InvolutiveWord range_word(int lo, int hi, int n) {
  InvolutiveWord w(n);
  for (int i = lo; i <= hi; ++i) w.push(i);
  return w;
}

}  // namespace

std::vector<InvolutiveWord> fixed_gens(const CutSet& c) {
  const FactorPartition p = c.partition();
  std::vector<InvolutiveWord> gens;
  for (int b = 1; b <= p.block_count(); ++b) {
    const auto [lo, hi] = p.block_range(b);
    gens.push_back(range_word(lo, hi, c.n));
  }
  return gens;
}

bool in_fixed_subgroup(const InvolutiveWord& w, const CutSet& c) {
  const FactorPartition p = c.partition();
  for (const auto& [block, syllable] : syllable_decompose(w, p)) {
    const auto [lo, hi] = p.block_range(block);
    const InvolutiveWord gen = range_word(lo, hi, c.n);
    if (syllable.size() % gen.size() != 0) return false;
    const long long k = static_cast<long long>(syllable.size() / gen.size());
    if (!(syllable == k_power(gen, k)) && !(syllable == k_power(gen, -k))) return false;
  }
  return true;
}

bool is_fixed(const Representation& rep, const BraidWord& b, const FreeWord& w) {
  return rep.apply(b, w) == w;
}

bool is_fixed(const Representation& rep, const BraidWord& b, const InvolutiveWord& w) {
  return rep.apply(b, w) == w;
}

namespace {

template <typename Word, typename Fn>
bool all_generators(const Representation& rep, Fn&& fn) {
  for (int i = 1; i < rep.n(); ++i) {
    if (!fn(BraidWord(rep.n(), {BraidLetter{i, 1}}))) return false;
  }
  return true;
}

}  // namespace

bool fixed_by_all(const Representation& rep, const FreeWord& w) {
  return all_generators<FreeWord>(rep, [&](const BraidWord& b) { return is_fixed(rep, b, w); });
}

bool fixed_by_all(const Representation& rep, const InvolutiveWord& w) {
  return all_generators<InvolutiveWord>(rep,
                                        [&](const BraidWord& b) { return is_fixed(rep, b, w); });
}

std::optional<long long> conj_to_delta_power(const InvolutiveWord& w) {
  if (w.is_identity()) return 0;
  const int n = w.n();
  auto [conj, core] = k_cyclic_reduce(w);
  if (core.size() % static_cast<std::size_t>(n) != 0) return std::nullopt;
  const long long mag = static_cast<long long>(core.size() / static_cast<std::size_t>(n));
  const InvolutiveWord delta = delta_word(n);
  for (long long k : {mag, -mag}) {
    if (k_conjugating_witness(k_power(delta, k), core).has_value()) return k;
  }
  return std::nullopt;
}

std::optional<long long> conj_to_u0_power(const FreeWord& w, int n) {
  if (w.is_identity()) return 0;
  FreeWord u0;
  for (int i = 1; i <= n; ++i) u0.push(Letter{GenSym{Family::U, i}, 1});
  auto [conj, core] = cyclic_reduce(w);
  if (core.size() % static_cast<std::size_t>(n) != 0) return std::nullopt;
  const long long mag = static_cast<long long>(core.size() / static_cast<std::size_t>(n));
  for (long long k : {mag, -mag}) {
    if (conjugating_witness(power(u0, k), core).has_value()) return k;
  }
  return std::nullopt;
}

U0Classification dyer_grossman_classify(const FreeWord& w, int n) {
  if (const auto k = conj_to_u0_power(w, n); k.has_value() && (*k != 0 || w.is_identity()))
    return U0Classification{U0Classification::Kind::ProductPower, 0, *k};
  auto [conj, core] = cyclic_reduce(w);
  // a power of a single generator is its own cyclically reduced core
  const auto& ls = core.letters();
  bool single = !ls.empty();
  for (const Letter& l : ls) single = single && l == ls.front();
  if (single) {
    const long long k = static_cast<long long>(ls.size()) * ls.front().sign;
    return U0Classification{U0Classification::Kind::GeneratorPower, ls.front().sym.index, k};
  }
  return U0Classification{U0Classification::Kind::Other, 0, 0};
}

bool braid_invariant(const Representation& rep, const FreeWord& w) {
  for (int i = 1; i < rep.n(); ++i) {
    const BraidWord b(rep.n(), {BraidLetter{i, 1}});
    if (!is_conjugate(rep.apply(b, w), w)) return false;
  }
  return true;
}

bool braid_invariant(const Representation& rep, const InvolutiveWord& w) {
  for (int i = 1; i < rep.n(); ++i) {
    const BraidWord b(rep.n(), {BraidLetter{i, 1}});
    if (!k_conjugating_witness(rep.apply(b, w), w).has_value()) return false;
  }
  return true;
}

bool braid_square_invariant(const Representation& rep, const FreeWord& w) {
  for (int i = 1; i < rep.n(); ++i) {
    const BraidWord b(rep.n(), {BraidLetter{i, 1}, BraidLetter{i, 1}});
    if (!is_conjugate(rep.apply(b, w), w)) return false;
  }
  return true;
}

}  // namespace artinbd
