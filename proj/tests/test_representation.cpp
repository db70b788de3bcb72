#include <doctest.h>

#include <random>

#include "artinbd/random_words.hpp"
#include "artinbd/representation.hpp"
#include "artinbd/text.hpp"

using namespace artinbd;

namespace {

FreeWord parse_u(const std::string& t) { return parse_free_word(t, Alphabet::U); }
FreeWord parse_v(const std::string& t) { return parse_free_word(t, Alphabet::V); }
FreeWord parse_g(const std::string& t) { return parse_free_word(t, Alphabet::G); }

}  // namespace

TEST_CASE("generator images") {
  const Representation& rb = cached_representation(RepKind::RhoB, 3);
  CHECK(rb.apply(parse_braid_word("a1", 3), parse_u("u2")) == parse_u("u2^-1 u1 u2"));
  CHECK(rb.apply(parse_braid_word("a1^-1", 3), parse_u("u1")) == parse_u("u1 u2 u1^-1"));
  const Representation& rv = cached_representation(RepKind::RhoDv, 4);
  CHECK(rv.apply(parse_braid_word("a1", 4), parse_v("v3")) == parse_v("v1^-1 v3"));
  const Representation& rg = cached_representation(RepKind::RhoDg, 4);
  CHECK(rg.apply(parse_braid_word("a2", 4), parse_g("g1")) == parse_g("g1 g2"));
  const Representation& rp = cached_representation(RepKind::RhoPlus, 4);
  CHECK(rp.apply(parse_braid_word("a1", 4), parse_involutive_word("x1", 4)) ==
        parse_involutive_word("x2", 4));
  CHECK(rp.apply(parse_braid_word("a1", 4), parse_involutive_word("x2", 4)) ==
        parse_involutive_word("x2 x1 x2", 4));
}

TEST_CASE("left action composition") {
  std::mt19937_64 rng(8);
  const Representation& rb = cached_representation(RepKind::RhoB, 4);
  for (int t = 0; t < 100; ++t) {
    const BraidWord b1 = random_braid_word(rng, 4, 5);
    const BraidWord b2 = random_braid_word(rng, 4, 5);
    const FreeWord w = random_free_word(rng, Family::U, 4, 6);
    CHECK(rb.apply(braid_multiply(b1, b2), w) == rb.apply(b1, rb.apply(b2, w)));
  }
}

TEST_CASE("well-definedness of all four actions") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(verify_braid_relations(Representation::make(RepKind::RhoB, n)));
    CHECK(verify_braid_relations(Representation::make(RepKind::RhoPlus, n)));
  }
  for (int n = 4; n <= 6; ++n) {
    CHECK(verify_braid_relations(Representation::make(RepKind::RhoDv, n)));
    CHECK(verify_braid_relations(Representation::make(RepKind::RhoDg, n)));
  }
}

TEST_CASE("a corrupted table fails the relations") {
  // u_{i+1} -> u_i u_{i+1} instead of the twisted conjugate
  const int n = 3;
  std::vector<std::array<std::vector<FreeWord>, 2>> tables(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      FreeWord fwd = FreeWord::generator(Family::U, j);
      FreeWord bwd = fwd;
      if (j == i) {
        fwd = FreeWord::generator(Family::U, i + 1);
        bwd = multiply(FreeWord::generator(Family::U, i),
                       FreeWord::generator(Family::U, i + 1),
                       FreeWord::generator(Family::U, i, -1));
      } else if (j == i + 1) {
        fwd = multiply(FreeWord::generator(Family::U, i), FreeWord::generator(Family::U, i + 1));
        bwd = FreeWord::generator(Family::U, i);
      }
      tables[static_cast<std::size_t>(i - 1)][0].push_back(fwd);
      tables[static_cast<std::size_t>(i - 1)][1].push_back(bwd);
    }
  }
  CHECK_FALSE(verify_braid_relations(Representation::from_free_tables(RepKind::RhoB, n, tables)));
}

TEST_CASE("braid equality oracle") {
  CHECK(braid_equal(parse_braid_word("a1 a2 a1", 3), parse_braid_word("a2 a1 a2", 3)));
  CHECK_FALSE(braid_equal(parse_braid_word("a1", 3), parse_braid_word("a2", 3)));
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const BraidWord conj = random_braid_word(rng, 3, 4);
    BraidWord lhs = conj;
    lhs.push_word(zeta(3));
    lhs.push_word_inverse(conj);
    CHECK(braid_equal(lhs, zeta(3)));
  }
}

TEST_CASE("homology matrices") {
  const Representation& rb = cached_representation(RepKind::RhoB, 3);
  const IntMatrix h1 = homology_matrix(rb, parse_braid_word("a1", 3));
  CHECK(h1 == permutation_matrix(Permutation({2, 1, 3})));
  // pure braids act trivially
  CHECK(homology_matrix(rb, zeta(3)) == IntMatrix::identity(3));
  const Representation& rg = cached_representation(RepKind::RhoDg, 4);
  IntMatrix expected = IntMatrix::identity(3);
  expected.at(1, 0) = 1;   // g1 -> g1 + g2
  expected.at(1, 2) = -1;  // g3 -> g3 - g2
  CHECK(homology_matrix(rg, parse_braid_word("a2", 4)) == expected);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const BraidWord b = random_braid_word(rng, 4, 6);
    const IntMatrix hb = homology_matrix(cached_representation(RepKind::RhoB, 4), b);
    CHECK(hb == permutation_matrix(perm_image(b)));
    const IntMatrix hd = homology_matrix(rg, b);
    const long long d = det(hd);
    CHECK((d == 1 || d == -1));
    const BraidWord b2 = random_braid_word(rng, 4, 6);
    CHECK(homology_matrix(rg, braid_multiply(b, b2)) ==
          matmul(hd, homology_matrix(rg, b2)));
  }
}

TEST_CASE("equivariance checks") {
  // conjugation by the full product intertwines with every generator
  const int n = 3;
  const Representation& rb = cached_representation(RepKind::RhoB, n);
  FreeWord u0;
  for (int i = 1; i <= n; ++i) u0.push(Letter{GenSym{Family::U, i}, 1});
  std::vector<FreeWord> conj_images;
  for (int i = 1; i <= n; ++i)
    conj_images.push_back(conjugate(invert(u0), FreeWord::generator(Family::U, i)));
  std::vector<BraidWord> gens;
  for (int i = 1; i < n; ++i) gens.push_back(BraidWord(n, {BraidLetter{i, 1}}));
  CHECK(check_equivariant(conj_images, rb, gens));
  // swapping two letters is not equivariant
  std::vector<FreeWord> swap_images = {FreeWord::generator(Family::U, 2),
                                       FreeWord::generator(Family::U, 1),
                                       FreeWord::generator(Family::U, 3)};
  CHECK_FALSE(check_equivariant(swap_images, rb, {BraidWord(n, {BraidLetter{2, 1}})}));

  const int kn = 4;
  const Representation& rp = cached_representation(RepKind::RhoPlus, kn);
  const InvolutiveWord delta = delta_word(kn);
  std::vector<InvolutiveWord> delta_conj;
  for (int i = 1; i <= kn; ++i) {
    InvolutiveWord x(kn);
    x.push(i);
    delta_conj.push_back(k_conjugate_by(k_invert(delta), x));
  }
  std::vector<BraidWord> kgens;
  for (int i = 1; i < kn; ++i) kgens.push_back(BraidWord(kn, {BraidLetter{i, 1}}));
  CHECK(check_equivariant(delta_conj, rp, kgens));
}

TEST_CASE("embedding compatibility") {
  CHECK(compat_embed(parse_braid_word("a2", 4), parse_g("g1"), 4));
  CHECK(compat_embed(BraidWord(4), parse_g("g1 g3^-1"), 4));
  std::mt19937_64 rng(23);
  for (int n = 4; n <= 6; ++n) {
    for (int t = 0; t < 250; ++t) {
      const BraidWord b = random_braid_word(rng, n, 6);
      const FreeWord w = random_free_word(rng, Family::G, n - 1, 6);
      CHECK(compat_embed(b, w, n));
    }
  }
}
