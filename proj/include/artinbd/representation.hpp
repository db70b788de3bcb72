#pragma once

#include <array>
#include <vector>

#include "artinbd/braid.hpp"
#include "artinbd/free_word.hpp"
#include "artinbd/involutive.hpp"

namespace artinbd {

enum class RepKind : unsigned char {
  RhoB,     // n-strand action on the free group <u_1..u_n>
  RhoDv,    // rank n-1 action in the v-basis
  RhoDg,    // rank n-1 action in the g-basis
  RhoPlus,  // action on the free product of n copies of C2
};

// One of the four braid actions, stored as generator image tables for both
// a_i and a_i^-1. The tables follow the standard formulas
//   rhoB:    u_i -> u_{i+1},      u_{i+1} -> u_{i+1}^-1 u_i u_{i+1}
//   rhoDv:   a_1: v_j -> v_1^-1 v_j (j != 1);
//            a_i: v_{i-1} -> v_i,  v_i -> v_i v_{i-1}^-1 v_i
//   rhoDg:   g_{i-1} -> g_{i-1} g_i, g_{i+1} -> g_i^-1 g_{i+1}
//   rhoPlus: x_i -> x_{i+1},      x_{i+1} -> x_{i+1} x_i x_{i+1}
// with the inverse tables solved from these.
class Representation {
 public:
  static Representation make(RepKind kind, int n);

  // Custom free-word tables, for corruption tests. tables[i-1][s] lists the
  // images of the fiber generators under a_i (s = 0) and a_i^-1 (s = 1).
  static Representation from_free_tables(
      RepKind kind, int n,
      std::vector<std::array<std::vector<FreeWord>, 2>> tables);
  static Representation from_k_tables(
      int n, std::vector<std::array<std::vector<InvolutiveWord>, 2>> tables);

  RepKind kind() const { return kind_; }
  int n() const { return n_; }
  bool acts_on_k() const { return kind_ == RepKind::RhoPlus; }
  int fiber_rank() const;
  Family fiber_family() const;  // U, V or G (free-word kinds only)

  FreeWord fiber_generator(int j) const;
  InvolutiveWord k_generator(int j) const;

  // Left action: apply(b1 b2, w) = apply(b1, apply(b2, w)).
  FreeWord apply(const BraidWord& b, const FreeWord& w) const;
  InvolutiveWord apply(const BraidWord& b, const InvolutiveWord& w) const;

  FreeWord apply_letter(BraidLetter l, const FreeWord& w) const;
  InvolutiveWord apply_letter(BraidLetter l, const InvolutiveWord& w) const;

 private:
  Representation(RepKind kind, int n) : kind_(kind), n_(n) {}

  RepKind kind_;
  int n_;
  // indexed [i-1][sign01][j-1], sign01 = 0 for a_i, 1 for a_i^-1
  std::vector<std::array<std::vector<FreeWord>, 2>> ftab_;
  std::vector<std::array<std::vector<InvolutiveWord>, 2>> ktab_;
};

// Shared immutable table for a given kind and strand count; safe to use from
// any thread.
const Representation& cached_representation(RepKind kind, int n);

// Braid relations hold on every fiber generator, distant generators commute,
// and the inverse tables really invert the generator tables.
bool verify_braid_relations(const Representation& rep);

// Group equality of braid words through the faithful rhoB action: true iff
// both words act identically on u_1..u_n.
bool braid_equal(const BraidWord& b1, const BraidWord& b2);

struct IntMatrix {
  int dim = 0;
  std::vector<long long> a;  // row-major

  static IntMatrix identity(int dim);
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r * dim + c)]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r * dim + c)]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);
long long det(const IntMatrix& m);
IntMatrix permutation_matrix(const Permutation& p);

// Action on the abelianized fiber; column j holds the exponent vector of the
// image of the j-th generator. Defined for RhoB and RhoDg.
IntMatrix homology_matrix(const Representation& rep, const BraidWord& b);

// phi given by generator images commutes with the action of every listed
// braid on every fiber generator.
bool check_equivariant(const std::vector<FreeWord>& images, const Representation& rep,
                       const std::vector<BraidWord>& braids);
bool check_equivariant(const std::vector<InvolutiveWord>& images, const Representation& rep,
                       const std::vector<BraidWord>& braids);

// embed_g intertwines the rank n-1 action in the g-basis with the free
// product action: embed_g(rhoDg(b)(w)) = rhoPlus(b)(embed_g(w)).
bool compat_embed(const BraidWord& b, const FreeWord& g_word, int n);

}  // namespace artinbd
