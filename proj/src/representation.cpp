#include "artinbd/representation.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace artinbd {

namespace {

FreeWord gen(Family f, int i, int sign = 1) { return FreeWord::generator(f, i, sign); }

}  // namespace

int Representation::fiber_rank() const {
  switch (kind_) {
    case RepKind::RhoB:
    case RepKind::RhoPlus: return n_;
    case RepKind::RhoDv:
    case RepKind::RhoDg: return n_ - 1;
  }
  return 0;
}

Family Representation::fiber_family() const {
  switch (kind_) {
    case RepKind::RhoB: return Family::U;
    case RepKind::RhoDv: return Family::V;
    case RepKind::RhoDg: return Family::G;
    case RepKind::RhoPlus: break;
  }
  throw std::logic_error("free product action has no free-word family");
}

FreeWord Representation::fiber_generator(int j) const {
  return gen(fiber_family(), j);
}

InvolutiveWord Representation::k_generator(int j) const {
  if (!acts_on_k()) throw std::logic_error("not a free product action");
  InvolutiveWord w(n_);
  w.push(j);
  return w;
}

Representation Representation::make(RepKind kind, int n) {
  const int min_n = (kind == RepKind::RhoDv || kind == RepKind::RhoDg) ? 4 : 2;
  if (n < min_n) throw std::invalid_argument("strand count too small for this action");
  Representation rep(kind, n);
  if (kind == RepKind::RhoPlus) {
    rep.ktab_.resize(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      auto& slot = rep.ktab_[static_cast<std::size_t>(i - 1)];
      for (int s = 0; s < 2; ++s) slot[static_cast<std::size_t>(s)].reserve(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) {
        InvolutiveWord fwd(n), bwd(n);
        if (j == i) {
          fwd = InvolutiveWord(n, {i + 1});
          bwd = InvolutiveWord(n, {i, i + 1, i});
        } else if (j == i + 1) {
          fwd = InvolutiveWord(n, {i + 1, i, i + 1});
          bwd = InvolutiveWord(n, {i});
        } else {
          fwd = InvolutiveWord(n, {j});
          bwd = fwd;
        }
        slot[0].push_back(fwd);
        slot[1].push_back(bwd);
      }
    }
    return rep;
  }

  const int rank = (kind == RepKind::RhoB) ? n : n - 1;
  const Family fam = (kind == RepKind::RhoB)   ? Family::U
                     : (kind == RepKind::RhoDv) ? Family::V
                                                : Family::G;
  rep.ftab_.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    auto& slot = rep.ftab_[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= rank; ++j) {
      FreeWord fwd = gen(fam, j), bwd = gen(fam, j);
      switch (kind) {
        case RepKind::RhoB:
          if (j == i) {
            fwd = gen(fam, i + 1);
            bwd = multiply(gen(fam, i), gen(fam, i + 1), gen(fam, i, -1));
          } else if (j == i + 1) {
            fwd = multiply(gen(fam, i + 1, -1), gen(fam, i), gen(fam, i + 1));
            bwd = gen(fam, i);
          }
          break;
        case RepKind::RhoDv:
          if (i == 1) {
            if (j != 1) {
              fwd = multiply(gen(fam, 1, -1), gen(fam, j));
              bwd = multiply(gen(fam, 1), gen(fam, j));
            }
          } else {
            if (j == i - 1) {
              fwd = gen(fam, i);
              bwd = multiply(gen(fam, i - 1), gen(fam, i, -1), gen(fam, i - 1));
            } else if (j == i) {
              fwd = multiply(gen(fam, i), gen(fam, i - 1, -1), gen(fam, i));
              bwd = gen(fam, i - 1);
            }
          }
          break;
        case RepKind::RhoDg:
          if (j == i - 1) {
            fwd = multiply(gen(fam, i - 1), gen(fam, i));
            bwd = multiply(gen(fam, i - 1), gen(fam, i, -1));
          } else if (j == i + 1) {
            fwd = multiply(gen(fam, i, -1), gen(fam, i + 1));
            bwd = multiply(gen(fam, i), gen(fam, i + 1));
          }
          break;
        case RepKind::RhoPlus: break;
      }
      slot[0].push_back(fwd);
      slot[1].push_back(bwd);
    }
  }
  return rep;
}

Representation Representation::from_free_tables(
    RepKind kind, int n, std::vector<std::array<std::vector<FreeWord>, 2>> tables) {
  if (kind == RepKind::RhoPlus) throw std::invalid_argument("use from_k_tables");
  Representation rep(kind, n);
  rep.ftab_ = std::move(tables);
  return rep;
}

Representation Representation::from_k_tables(
    int n, std::vector<std::array<std::vector<InvolutiveWord>, 2>> tables) {
  Representation rep(RepKind::RhoPlus, n);
  rep.ktab_ = std::move(tables);
  return rep;
}

FreeWord Representation::apply_letter(BraidLetter l, const FreeWord& w) const {
  if (acts_on_k()) throw std::invalid_argument("action kind mismatch");
  const auto& images = ftab_[static_cast<std::size_t>(l.index - 1)][l.sign > 0 ? 0 : 1];
  FreeWord out;
  for (const Letter& letter : w.letters()) {
    if (letter.sym.family != fiber_family()) throw std::invalid_argument("fiber family mismatch");
    const FreeWord& im = images[static_cast<std::size_t>(letter.sym.index - 1)];
    if (letter.sign > 0)
      out.push_word(im);
    else
      out.push_word_inverse(im);
  }
  return out;
}

InvolutiveWord Representation::apply_letter(BraidLetter l, const InvolutiveWord& w) const {
  if (!acts_on_k()) throw std::invalid_argument("action kind mismatch");
  const auto& images = ktab_[static_cast<std::size_t>(l.index - 1)][l.sign > 0 ? 0 : 1];
  InvolutiveWord out(n_);
  for (int letter : w.letters()) out.push_word(images[static_cast<std::size_t>(letter - 1)]);
  return out;
}

FreeWord Representation::apply(const BraidWord& b, const FreeWord& w) const {
  if (b.n() != n_) throw std::invalid_argument("strand count mismatch");
  FreeWord out = w;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    out = apply_letter(*it, out);
  return out;
}

InvolutiveWord Representation::apply(const BraidWord& b, const InvolutiveWord& w) const {
  if (b.n() != n_) throw std::invalid_argument("strand count mismatch");
  if (w.n() != n_) throw std::invalid_argument("factor count mismatch");
  InvolutiveWord out = w;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    out = apply_letter(*it, out);
  return out;
}

namespace {

template <typename Word>
Word apply_gen(const Representation& rep, int i, int sign, const Word& w) {
  return rep.apply_letter(BraidLetter{i, sign}, w);
}

template <typename Word>
bool relations_hold(const Representation& rep, const std::vector<Word>& gens) {
  const int m = rep.n() - 1;
  for (const Word& g : gens) {
    // inverse tables invert the generator tables
    for (int i = 1; i <= m; ++i) {
      if (apply_gen(rep, i, 1, apply_gen(rep, i, -1, g)) != g) return false;
      if (apply_gen(rep, i, -1, apply_gen(rep, i, 1, g)) != g) return false;
    }
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        if (j == i + 1) {
          Word lhs = apply_gen(rep, i, 1, apply_gen(rep, j, 1, apply_gen(rep, i, 1, g)));
          Word rhs = apply_gen(rep, j, 1, apply_gen(rep, i, 1, apply_gen(rep, j, 1, g)));
          if (lhs != rhs) return false;
        } else {
          Word lhs = apply_gen(rep, i, 1, apply_gen(rep, j, 1, g));
          Word rhs = apply_gen(rep, j, 1, apply_gen(rep, i, 1, g));
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool verify_braid_relations(const Representation& rep) {
  if (rep.acts_on_k()) {
    std::vector<InvolutiveWord> gens;
    for (int j = 1; j <= rep.fiber_rank(); ++j) gens.push_back(rep.k_generator(j));
    return relations_hold(rep, gens);
  }
  std::vector<FreeWord> gens;
  for (int j = 1; j <= rep.fiber_rank(); ++j) gens.push_back(rep.fiber_generator(j));
  return relations_hold(rep, gens);
}

const Representation& cached_representation(RepKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Representation> cache;
  const std::pair<int, int> key{static_cast<int>(kind), n};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Representation::make(kind, n)).first;
  return it->second;
}

bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.n() != b2.n()) throw std::invalid_argument("strand count mismatch");
  if (b1 == b2) return true;
  const Representation& rep = cached_representation(RepKind::RhoB, b1.n());
  for (int j = 1; j <= b1.n(); ++j) {
    const FreeWord u = rep.fiber_generator(j);
    if (rep.apply(b1, u) != rep.apply(b2, u)) return false;
  }
  return true;
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m;
  m.dim = dim;
  m.a.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
  IntMatrix out = IntMatrix::identity(x.dim);
  for (int r = 0; r < x.dim; ++r)
    for (int c = 0; c < x.dim; ++c) {
      long long sum = 0;
      for (int k = 0; k < x.dim; ++k) sum += x.at(r, k) * y.at(k, c);
      out.at(r, c) = sum;
    }
  return out;
}

// Bareiss fraction-free elimination; exact for integer matrices.
long long det(const IntMatrix& m) {
  IntMatrix w = m;
  const int n = w.dim;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (w.at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        w.at(r, c) = (w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

IntMatrix permutation_matrix(const Permutation& p) {
  IntMatrix m = IntMatrix::identity(p.n());
  for (int i = 0; i < p.n(); ++i) m.at(i, i) = 0;
  for (int j = 1; j <= p.n(); ++j) m.at(p.map(j) - 1, j - 1) = 1;
  return m;
}

IntMatrix homology_matrix(const Representation& rep, const BraidWord& b) {
  if (rep.kind() != RepKind::RhoB && rep.kind() != RepKind::RhoDg)
    throw std::invalid_argument("homology action defined for rhoB and rhoDg");
  const int rank = rep.fiber_rank();
  IntMatrix m = IntMatrix::identity(rank);
  for (int j = 1; j <= rank; ++j) {
    const AbelianVector col = abelianize(rep.apply(b, rep.fiber_generator(j)), rank);
    for (int r = 0; r < rank; ++r) m.at(r, j - 1) = col.coords[static_cast<std::size_t>(r)];
  }
  return m;
}

bool check_equivariant(const std::vector<FreeWord>& images, const Representation& rep,
                       const std::vector<BraidWord>& braids) {
  std::map<GenSym, FreeWord> im;
  for (int j = 1; j <= rep.fiber_rank(); ++j)
    im.emplace(GenSym{rep.fiber_family(), j}, images[static_cast<std::size_t>(j - 1)]);
  for (const BraidWord& b : braids) {
    for (int j = 1; j <= rep.fiber_rank(); ++j) {
      const FreeWord g = rep.fiber_generator(j);
      if (apply_endomorphism(rep.apply(b, g), im) != rep.apply(b, apply_endomorphism(g, im)))
        return false;
    }
  }
  return true;
}

bool check_equivariant(const std::vector<InvolutiveWord>& images, const Representation& rep,
                       const std::vector<BraidWord>& braids) {
  for (const BraidWord& b : braids) {
    for (int j = 1; j <= rep.fiber_rank(); ++j) {
      const InvolutiveWord g = rep.k_generator(j);
      if (k_apply_endomorphism(rep.apply(b, g), images) !=
          rep.apply(b, k_apply_endomorphism(g, images)))
        return false;
    }
  }
  return true;
}

bool compat_embed(const BraidWord& b, const FreeWord& g_word, int n) {
  const Representation dg = Representation::make(RepKind::RhoDg, n);
  const Representation plus = Representation::make(RepKind::RhoPlus, n);
  return embed_g(dg.apply(b, g_word), n) == plus.apply(b, embed_g(g_word, n));
}

}  // namespace artinbd
