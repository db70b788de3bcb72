#include "artinbd/semidirect.hpp"

#include <stdexcept>

namespace artinbd {

GroupFlavor::GroupFlavor(FlavorTag tag_, int n_) : tag(tag_), n(n_) {
  switch (tag) {
    case FlavorTag::ArtinB:
      if (n < 3) throw std::invalid_argument("type B flavor needs n >= 3");
      break;
    case FlavorTag::ArtinD:
      if (n < 4) throw std::invalid_argument("type D flavor needs n >= 4");
      break;
    case FlavorTag::KSemidirect:
      if (n < 3) throw std::invalid_argument("free product flavor needs n >= 3");
      break;
  }
}

const Representation& fiber_representation(const GroupFlavor& flavor) {
  switch (flavor.tag) {
    case FlavorTag::ArtinB: return cached_representation(RepKind::RhoB, flavor.n);
    case FlavorTag::ArtinD: return cached_representation(RepKind::RhoDg, flavor.n);
    case FlavorTag::KSemidirect: return cached_representation(RepKind::RhoPlus, flavor.n);
  }
  throw std::logic_error("bad flavor");
}

namespace {

Family fiber_family(const GroupFlavor& flavor) {
  return flavor.tag == FlavorTag::ArtinB ? Family::U : Family::G;
}

void check_fiber(const GroupFlavor& flavor, const FreeWord& w) {
  const int rank = flavor.tag == FlavorTag::ArtinB ? flavor.n : flavor.n - 1;
  for (const Letter& l : w.letters()) {
    if (l.sym.family != fiber_family(flavor) || l.sym.index > rank)
      throw std::invalid_argument("fiber word does not match flavor");
  }
}

}  // namespace

SemidirectElement::SemidirectElement(GroupFlavor flavor, FreeWord fiber, BraidWord braid)
    : flavor_(flavor), fiber_free_(std::move(fiber)), fiber_k_(flavor.n), braid_(std::move(braid)) {
  if (flavor_.tag == FlavorTag::KSemidirect)
    throw std::invalid_argument("free product flavor takes an involutive fiber");
  check_fiber(flavor_, fiber_free_);
  if (braid_.n() != flavor_.n) throw std::invalid_argument("strand count mismatch");
}

SemidirectElement::SemidirectElement(GroupFlavor flavor, InvolutiveWord fiber, BraidWord braid)
    : flavor_(flavor), fiber_k_(std::move(fiber)), braid_(std::move(braid)) {
  if (flavor_.tag != FlavorTag::KSemidirect)
    throw std::invalid_argument("this flavor takes a free-word fiber");
  if (fiber_k_.n() != flavor_.n || braid_.n() != flavor_.n)
    throw std::invalid_argument("strand count mismatch");
}

SemidirectElement SemidirectElement::identity(GroupFlavor flavor) {
  if (flavor.tag == FlavorTag::KSemidirect)
    return SemidirectElement(flavor, InvolutiveWord(flavor.n), BraidWord(flavor.n));
  return SemidirectElement(flavor, FreeWord(), BraidWord(flavor.n));
}

SemidirectElement SemidirectElement::from_fiber(GroupFlavor flavor, const FreeWord& w) {
  return SemidirectElement(flavor, w, BraidWord(flavor.n));
}

SemidirectElement SemidirectElement::from_fiber(GroupFlavor flavor, const InvolutiveWord& w) {
  return SemidirectElement(flavor, w, BraidWord(flavor.n));
}

SemidirectElement SemidirectElement::from_braid(GroupFlavor flavor, const BraidWord& b) {
  if (flavor.tag == FlavorTag::KSemidirect)
    return SemidirectElement(flavor, InvolutiveWord(flavor.n), b);
  return SemidirectElement(flavor, FreeWord(), b);
}

const FreeWord& SemidirectElement::fiber() const {
  if (has_k_fiber()) throw std::logic_error("fiber is an involutive word");
  return fiber_free_;
}

const InvolutiveWord& SemidirectElement::k_fiber() const {
  if (!has_k_fiber()) throw std::logic_error("fiber is a free word");
  return fiber_k_;
}

SemidirectElement sd_multiply(const SemidirectElement& e1, const SemidirectElement& e2) {
  if (!(e1.flavor() == e2.flavor())) throw std::invalid_argument("flavor mismatch");
  const Representation& rep = fiber_representation(e1.flavor());
  const BraidWord braid = braid_multiply(e1.braid(), e2.braid());
  if (e1.has_k_fiber()) {
    InvolutiveWord fiber = e1.k_fiber();
    fiber.push_word(rep.apply(e1.braid(), e2.k_fiber()));
    return SemidirectElement(e1.flavor(), fiber, braid);
  }
  FreeWord fiber = e1.fiber();
  fiber.push_word(rep.apply(e1.braid(), e2.fiber()));
  return SemidirectElement(e1.flavor(), fiber, braid);
}

SemidirectElement sd_invert(const SemidirectElement& e) {
  const Representation& rep = fiber_representation(e.flavor());
  const BraidWord inv_braid = braid_invert(e.braid());
  if (e.has_k_fiber())
    return SemidirectElement(e.flavor(), rep.apply(inv_braid, k_invert(e.k_fiber())), inv_braid);
  return SemidirectElement(e.flavor(), rep.apply(inv_braid, invert(e.fiber())), inv_braid);
}

SemidirectElement sd_conjugate(const SemidirectElement& c, const SemidirectElement& e) {
  return sd_multiply(sd_multiply(c, e), sd_invert(c));
}

bool sd_equal(const SemidirectElement& e1, const SemidirectElement& e2) {
  if (!(e1.flavor() == e2.flavor())) throw std::invalid_argument("flavor mismatch");
  if (e1.has_k_fiber()) {
    if (!(e1.k_fiber() == e2.k_fiber())) return false;
  } else {
    if (!(e1.fiber() == e2.fiber())) return false;
  }
  return braid_equal(e1.braid(), e2.braid());
}

bool sd_commutes(const SemidirectElement& e1, const SemidirectElement& e2) {
  return sd_equal(sd_multiply(e1, e2), sd_multiply(e2, e1));
}

BraidWord pi(const SemidirectElement& e) { return e.braid(); }

SemidirectElement section(const BraidWord& b, const GroupFlavor& flavor) {
  return SemidirectElement::from_braid(flavor, b);
}

int presentation_rank(const GroupFlavor& flavor) { return flavor.n; }

Alphabet presentation_alphabet(const GroupFlavor& flavor) {
  switch (flavor.tag) {
    case FlavorTag::ArtinB: return Alphabet::Beta;
    case FlavorTag::ArtinD: return Alphabet::Delta;
    case FlavorTag::KSemidirect: break;
  }
  throw std::invalid_argument("no standard presentation alphabet for this flavor");
}

SemidirectElement phi_generator(const GroupFlavor& flavor, int index, int sign) {
  if (index < 1 || index > flavor.n) throw std::invalid_argument("generator index out of range");
  const BraidWord empty(flavor.n);
  switch (flavor.tag) {
    case FlavorTag::ArtinB: {
      if (index == 1)
        return SemidirectElement(flavor, FreeWord::generator(Family::U, 1, sign), empty);
      return SemidirectElement(flavor, FreeWord(),
                               BraidWord(flavor.n, {BraidLetter{index - 1, sign}}));
    }
    case FlavorTag::ArtinD: {
      if (index == 1) {
        SemidirectElement d1(flavor, FreeWord::generator(Family::G, 1),
                             BraidWord(flavor.n, {BraidLetter{1, 1}}));
        return sign > 0 ? d1 : sd_invert(d1);
      }
      const int braid_index = index == 2 ? 1 : index - 1;
      return SemidirectElement(flavor, FreeWord(),
                               BraidWord(flavor.n, {BraidLetter{braid_index, sign}}));
    }
    case FlavorTag::KSemidirect: break;
  }
  throw std::invalid_argument("no standard presentation for this flavor");
}

SemidirectElement phi(const FreeWord& presentation_word, const GroupFlavor& flavor) {
  const Alphabet alphabet = presentation_alphabet(flavor);
  SemidirectElement out = SemidirectElement::identity(flavor);
  for (const Letter& l : presentation_word.letters()) {
    if (alphabet_of(l.sym.family) != alphabet)
      throw std::invalid_argument("word is not over the presentation alphabet");
    out = sd_multiply(out, phi_generator(flavor, l.sym.index, l.sign));
  }
  return out;
}

namespace {

// b_i b_{i-1} .. b_2 b_1 b_2^-1 .. b_i^-1
FreeWord psi_u_block(int i) {
  FreeWord w;
  for (int j = i; j >= 2; --j) w.push(Letter{GenSym{Family::Beta, j}, 1});
  w.push(Letter{GenSym{Family::Beta, 1}, 1});
  for (int j = 2; j <= i; ++j) w.push(Letter{GenSym{Family::Beta, j}, -1});
  return w;
}

// d_{i+1} d_i .. d_3 d_1 d_2^-1 d_3^-1 .. d_{i+1}^-1, degenerating to
// d_1 d_2^-1 at i = 1
FreeWord psi_v_block(int i) {
  FreeWord w;
  for (int j = i + 1; j >= 3; --j) w.push(Letter{GenSym{Family::Delta, j}, 1});
  w.push(Letter{GenSym{Family::Delta, 1}, 1});
  w.push(Letter{GenSym{Family::Delta, 2}, -1});
  for (int j = 3; j <= i + 1; ++j) w.push(Letter{GenSym{Family::Delta, j}, -1});
  return w;
}

void push_signed(FreeWord& out, const FreeWord& block, int sign) {
  if (sign > 0)
    out.push_word(block);
  else
    out.push_word_inverse(block);
}

}  // namespace

FreeWord psi(const SemidirectElement& e) {
  FreeWord out;
  switch (e.flavor().tag) {
    case FlavorTag::ArtinB: {
      for (const Letter& l : e.fiber().letters())
        push_signed(out, psi_u_block(l.sym.index), l.sign);
      for (const BraidLetter& l : e.braid().letters())
        out.push(Letter{GenSym{Family::Beta, l.index + 1}, l.sign});
      return out;
    }
    case FlavorTag::ArtinD: {
      const FreeWord v_word = g_to_v(e.fiber());
      for (const Letter& l : v_word.letters())
        push_signed(out, psi_v_block(l.sym.index), l.sign);
      for (const BraidLetter& l : e.braid().letters())
        out.push(Letter{GenSym{Family::Delta, l.index + 1}, l.sign});
      return out;
    }
    case FlavorTag::KSemidirect: break;
  }
  throw std::invalid_argument("no standard presentation for this flavor");
}

int coxeter_label(const GroupFlavor& flavor, int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  switch (flavor.tag) {
    case FlavorTag::ArtinB:
      if (i == 1 && j == 2) return 4;
      return j == i + 1 ? 3 : 2;
    case FlavorTag::ArtinD:
      if (i == 1 && j == 2) return 2;
      if ((i == 1 || i == 2) && j == 3) return 3;
      if (i >= 3 && j == i + 1) return 3;
      return 2;
    case FlavorTag::KSemidirect: break;
  }
  throw std::invalid_argument("no Coxeter graph for this flavor");
}

namespace {

FreeWord alternating_word(Family fam, int i, int j, int m) {
  FreeWord w;
  for (int t = 0; t < m; ++t) w.push(Letter{GenSym{fam, t % 2 == 0 ? i : j}, 1});
  return w;
}

}  // namespace

std::vector<std::pair<FreeWord, FreeWord>> presentation_relations(const GroupFlavor& flavor) {
  const Family fam = flavor.tag == FlavorTag::ArtinB ? Family::Beta : Family::Delta;
  std::vector<std::pair<FreeWord, FreeWord>> rels;
  for (int i = 1; i <= flavor.n; ++i)
    for (int j = i + 1; j <= flavor.n; ++j) {
      const int m = coxeter_label(flavor, i, j);
      rels.emplace_back(alternating_word(fam, i, j, m), alternating_word(fam, j, i, m));
    }
  return rels;
}

bool verify_presentation(const std::vector<SemidirectElement>& images,
                         const GroupFlavor& flavor) {
  if (static_cast<int>(images.size()) != flavor.n)
    throw std::invalid_argument("need one image per presentation generator");
  auto eval = [&](const FreeWord& w) {
    SemidirectElement out = SemidirectElement::identity(flavor);
    for (const Letter& l : w.letters()) {
      const SemidirectElement& im = images[static_cast<std::size_t>(l.sym.index - 1)];
      out = sd_multiply(out, l.sign > 0 ? im : sd_invert(im));
    }
    return out;
  };
  for (const auto& [lhs, rhs] : presentation_relations(flavor)) {
    if (!sd_equal(eval(lhs), eval(rhs))) return false;
  }
  return true;
}

SemidirectElement center_element(const GroupFlavor& flavor) {
  switch (flavor.tag) {
    case FlavorTag::ArtinB: {
      FreeWord u0;
      for (int i = 1; i <= flavor.n; ++i) u0.push(Letter{GenSym{Family::U, i}, 1});
      return SemidirectElement(flavor, u0, zeta(flavor.n));
    }
    case FlavorTag::ArtinD: {
      if (flavor.n % 2 == 0) {
        const FreeWord fiber = *express_in_g(delta_word(flavor.n));
        return SemidirectElement(flavor, fiber, zeta(flavor.n));
      }
      const FreeWord fiber = *express_in_g(k_power(delta_word(flavor.n), 2));
      return SemidirectElement(flavor, fiber, braid_power(zeta(flavor.n), 2));
    }
    case FlavorTag::KSemidirect:
      return SemidirectElement(flavor, delta_word(flavor.n), zeta(flavor.n));
  }
  throw std::logic_error("bad flavor");
}

namespace {

FreeWord invert_presentation_letters(const FreeWord& w) {
  FreeWord out;
  for (const Letter& l : w.letters()) out.push(l.inverse());
  return out;
}

FreeWord swap_fork_letters(const FreeWord& w) {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    int index = l.sym.index;
    if (index == 1)
      index = 2;
    else if (index == 2)
      index = 1;
    out.push(Letter{GenSym{l.sym.family, index}, l.sign});
  }
  return out;
}

BraidWord invert_braid_letters(const BraidWord& b) {
  BraidWord out(b.n());
  for (const BraidLetter& l : b.letters()) out.push(l.inverse());
  return out;
}

// x_j -> x_1 x_2 .. x_{j-1} x_j x_{j-1} .. x_1, the involution fixing x_1
// and inverting every braid generator.
InvolutiveWord eps_k_image(int j, int n) {
  InvolutiveWord w(n);
  for (int i = 1; i <= j; ++i) w.push(i);
  for (int i = j - 1; i >= 1; --i) w.push(i);
  return w;
}

}  // namespace

SemidirectElement eps_auto(const SemidirectElement& e) {
  switch (e.flavor().tag) {
    case FlavorTag::ArtinB:
    case FlavorTag::ArtinD:
      return phi(invert_presentation_letters(psi(e)), e.flavor());
    case FlavorTag::KSemidirect: {
      const int n = e.flavor().n;
      std::vector<InvolutiveWord> images;
      images.reserve(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) images.push_back(eps_k_image(j, n));
      return SemidirectElement(e.flavor(), k_apply_endomorphism(e.k_fiber(), images),
                               invert_braid_letters(e.braid()));
    }
  }
  throw std::logic_error("bad flavor");
}

SemidirectElement tau_auto(const SemidirectElement& e) {
  switch (e.flavor().tag) {
    case FlavorTag::ArtinD:
      return phi(swap_fork_letters(psi(e)), e.flavor());
    case FlavorTag::KSemidirect: {
      InvolutiveWord x1(e.flavor().n);
      x1.push(1);
      return sd_conjugate(SemidirectElement::from_fiber(e.flavor(), x1), e);
    }
    case FlavorTag::ArtinB: break;
  }
  throw std::invalid_argument("graph involution needs a type D or free product flavor");
}

SignedPermutation sp_identity(int n) {
  return SignedPermutation{std::vector<int>(static_cast<std::size_t>(n), 1), Permutation(n)};
}

SignedPermutation sp_multiply(const SignedPermutation& s1, const SignedPermutation& s2) {
  const int n = s1.perm.n();
  if (s2.perm.n() != n) throw std::invalid_argument("degree mismatch");
  SignedPermutation out = sp_identity(n);
  for (int i = 1; i <= n; ++i)
    out.signs[static_cast<std::size_t>(s1.perm.map(i) - 1)] =
        s2.signs[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i < n; ++i) out.signs[static_cast<std::size_t>(i)] *= s1.signs[static_cast<std::size_t>(i)];
  out.perm = compose(s1.perm, s2.perm);
  return out;
}

bool sp_even(const SignedPermutation& s) {
  int minus = 0;
  for (int v : s.signs) minus += v < 0 ? 1 : 0;
  return minus % 2 == 0;
}

SignedPermutation coxeter_project(const SemidirectElement& e) {
  const int n = e.flavor().n;
  SignedPermutation out = sp_identity(n);
  auto flip = [&](int i) {
    out.signs[static_cast<std::size_t>(i - 1)] = -out.signs[static_cast<std::size_t>(i - 1)];
  };
  switch (e.flavor().tag) {
    case FlavorTag::ArtinB:
      for (const Letter& l : e.fiber().letters()) flip(l.sym.index);
      break;
    case FlavorTag::ArtinD: {
      const InvolutiveWord embedded = embed_g(e.fiber(), n);
      for (int l : embedded.letters()) flip(l);
      break;
    }
    case FlavorTag::KSemidirect:
      for (int l : e.k_fiber().letters()) flip(l);
      break;
  }
  out.perm = perm_image(e.braid());
  return out;
}

FreeWord x0_word(int n) {
  if (n < 4) throw std::invalid_argument("x0 needs n >= 4");
  FreeWord w;
  auto alternating = [&](int first_sign) {
    int sign = first_sign;
    for (int i = 1; i <= n - 1; ++i) {
      w.push(Letter{GenSym{Family::V, i}, sign});
      sign = -sign;
    }
  };
  alternating(1);
  if (n % 2 == 1) alternating(-1);
  return w;
}

}  // namespace artinbd
