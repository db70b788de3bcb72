#pragma once

#include <utility>
#include <vector>

#include "artinbd/braid.hpp"
#include "artinbd/free_word.hpp"
#include "artinbd/involutive.hpp"
#include "artinbd/representation.hpp"

namespace artinbd {

enum class FlavorTag : unsigned char { ArtinB, ArtinD, KSemidirect };

struct GroupFlavor {
  FlavorTag tag;
  int n;
  GroupFlavor(FlavorTag tag, int n);
  friend bool operator==(const GroupFlavor&, const GroupFlavor&) = default;
};

// The braid action twisting the fiber of each flavor: rhoB on u-words,
// rhoDg on g-words, rhoPlus on the free product.
const Representation& fiber_representation(const GroupFlavor& flavor);

// Element (fiber, braid) of F_n x| B_n, F_{n-1} x| B_n or K x| B_n, with the
// fiber stored as a reduced u-word, g-word or free product word.
class SemidirectElement {
 public:
  SemidirectElement(GroupFlavor flavor, FreeWord fiber, BraidWord braid);
  SemidirectElement(GroupFlavor flavor, InvolutiveWord fiber, BraidWord braid);

  static SemidirectElement identity(GroupFlavor flavor);
  static SemidirectElement from_fiber(GroupFlavor flavor, const FreeWord& w);
  static SemidirectElement from_fiber(GroupFlavor flavor, const InvolutiveWord& w);
  static SemidirectElement from_braid(GroupFlavor flavor, const BraidWord& b);

  const GroupFlavor& flavor() const { return flavor_; }
  bool has_k_fiber() const { return flavor_.tag == FlavorTag::KSemidirect; }
  const FreeWord& fiber() const;
  const InvolutiveWord& k_fiber() const;
  const BraidWord& braid() const { return braid_; }

 private:
  GroupFlavor flavor_;
  FreeWord fiber_free_;
  InvolutiveWord fiber_k_;
  BraidWord braid_;
};

SemidirectElement sd_multiply(const SemidirectElement& e1, const SemidirectElement& e2);
SemidirectElement sd_invert(const SemidirectElement& e);
SemidirectElement sd_conjugate(const SemidirectElement& c, const SemidirectElement& e);

// Fibers compare as reduced words; braids through the faithful rhoB oracle.
bool sd_equal(const SemidirectElement& e1, const SemidirectElement& e2);
bool sd_commutes(const SemidirectElement& e1, const SemidirectElement& e2);

// Projection killing the fiber, and its section.
BraidWord pi(const SemidirectElement& e);
SemidirectElement section(const BraidWord& b, const GroupFlavor& flavor);

// Number of standard generators in the presentation of the flavor's group.
int presentation_rank(const GroupFlavor& flavor);
Alphabet presentation_alphabet(const GroupFlavor& flavor);

// Evaluates a word in the standard presentation generators to semidirect
// coordinates: b_1 -> (u_1, e), b_i -> (e, a_{i-1}); d_1 -> (g_1, a_1),
// d_2 -> (e, a_1), d_i -> (e, a_{i-1}).
SemidirectElement phi(const FreeWord& presentation_word, const GroupFlavor& flavor);
SemidirectElement phi_generator(const GroupFlavor& flavor, int index, int sign = 1);

// A presentation word mapping back to the element under phi.
FreeWord psi(const SemidirectElement& e);

// Defining relation pairs w(i,j:m) = w(j,i:m) read off the Coxeter graph of
// the flavor (the 4-labelled end at b_1 for type B, the fork at d_1, d_2
// attached to d_3 for type D).
int coxeter_label(const GroupFlavor& flavor, int i, int j);
std::vector<std::pair<FreeWord, FreeWord>> presentation_relations(const GroupFlavor& flavor);

// Every defining relation maps to an sd_equal pair under the given
// generator images (indexed by generator, 1-based).
bool verify_presentation(const std::vector<SemidirectElement>& images,
                         const GroupFlavor& flavor);

// u_1..u_n zeta for type B; delta zeta (n even) or delta^2 zeta^2 (n odd)
// for type D; delta zeta for the free product flavor.
SemidirectElement center_element(const GroupFlavor& flavor);

// The involution inverting every standard generator, and the graph
// involution swapping the type D fork (equal to conjugation by x_1 inside
// the free product flavor, where it is also defined).
SemidirectElement eps_auto(const SemidirectElement& e);
SemidirectElement tau_auto(const SemidirectElement& e);

struct SignedPermutation {
  std::vector<int> signs;  // entries +1 / -1
  Permutation perm;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

SignedPermutation sp_identity(int n);
SignedPermutation sp_multiply(const SignedPermutation& s1, const SignedPermutation& s2);
bool sp_even(const SignedPermutation& s);

// Image in the signed permutation group (sign changes from the fiber letters,
// permutation from the braid).
SignedPermutation coxeter_project(const SemidirectElement& e);

// The nontrivial v-word fixed by the rank n-1 action of every generator.
FreeWord x0_word(int n);

}  // namespace artinbd
