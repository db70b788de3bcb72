#include <doctest.h>

#include <random>

#include "artinbd/random_words.hpp"
#include "artinbd/semidirect.hpp"
#include "artinbd/text.hpp"

using namespace artinbd;

namespace {

const GroupFlavor kB3(FlavorTag::ArtinB, 3);
const GroupFlavor kD4(FlavorTag::ArtinD, 4);
const GroupFlavor kK4(FlavorTag::KSemidirect, 4);

SemidirectElement elem_b(const std::string& fiber, const std::string& braid, int n = 3) {
  return SemidirectElement(GroupFlavor(FlavorTag::ArtinB, n),
                           parse_free_word(fiber, Alphabet::U), parse_braid_word(braid, n));
}

FreeWord beta_word(const std::string& text) { return parse_free_word(text, Alphabet::Beta); }
FreeWord delta_letters(const std::string& text) { return parse_free_word(text, Alphabet::Delta); }

}  // namespace

TEST_CASE("twisted multiplication") {
  CHECK(sd_equal(sd_multiply(elem_b("u1", "e"), elem_b("e", "a1")), elem_b("u1", "a1")));
  CHECK(sd_equal(sd_multiply(elem_b("e", "a1"), elem_b("u1", "e")), elem_b("u2", "a1")));
  CHECK(sd_equal(sd_invert(elem_b("e", "a1")), elem_b("e", "a1^-1")));
  std::mt19937_64 rng(1);
  for (const GroupFlavor& flavor : {kB3, kD4, kK4}) {
    for (int t = 0; t < 60; ++t) {
      const SemidirectElement e1 = random_element(rng, flavor, 5);
      const SemidirectElement e2 = random_element(rng, flavor, 5);
      const SemidirectElement e3 = random_element(rng, flavor, 5);
      CHECK(sd_equal(sd_multiply(sd_multiply(e1, e2), e3), sd_multiply(e1, sd_multiply(e2, e3))));
      CHECK(sd_equal(sd_multiply(e1, sd_invert(e1)), SemidirectElement::identity(flavor)));
    }
  }
}

TEST_CASE("syntactically different equal braids compare equal") {
  CHECK(sd_equal(elem_b("e", "a1 a2 a1"), elem_b("e", "a2 a1 a2")));
  CHECK_FALSE(sd_equal(elem_b("u1", "e"), elem_b("u2", "e")));
}

TEST_CASE("projection and section") {
  CHECK(pi(phi(beta_word("b1"), kB3)).is_empty_word());
  CHECK(braid_equal(pi(phi(delta_letters("d1"), kD4)), parse_braid_word("a1", 4)));
  CHECK(braid_equal(pi(phi(delta_letters("d2"), kD4)), parse_braid_word("a1", 4)));
  CHECK(sd_equal(section(parse_braid_word("a1", 3), kB3), phi(beta_word("b2"), kB3)));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const BraidWord b = random_braid_word(rng, 4, 6);
    CHECK(braid_equal(pi(section(b, kD4)), b));
    const SemidirectElement e1 = random_element(rng, kD4, 5);
    const SemidirectElement e2 = random_element(rng, kD4, 5);
    CHECK(braid_equal(pi(sd_multiply(e1, e2)), braid_multiply(pi(e1), pi(e2))));
  }
}

TEST_CASE("phi on presentation generators") {
  CHECK(sd_equal(phi(beta_word("b1"), kB3),
                 SemidirectElement::from_fiber(kB3, parse_free_word("u1", Alphabet::U))));
  CHECK(sd_equal(phi(beta_word("b2 b1 b2^-1"), kB3),
                 SemidirectElement::from_fiber(kB3, parse_free_word("u2", Alphabet::U))));
  CHECK(sd_equal(phi(delta_letters("d1"), kD4),
                 SemidirectElement(kD4, parse_free_word("g1", Alphabet::G),
                                   parse_braid_word("a1", 4))));
}

TEST_CASE("psi spells elements in presentation letters") {
  CHECK(psi(SemidirectElement::from_fiber(kB3, parse_free_word("u2", Alphabet::U))) ==
        beta_word("b2 b1 b2^-1"));
  const SemidirectElement v1 =
      SemidirectElement::from_fiber(kD4, parse_free_word("g1", Alphabet::G));
  CHECK(psi(v1) == delta_letters("d1 d2^-1"));
  const SemidirectElement v2 =
      SemidirectElement::from_fiber(kD4, v_to_g(parse_free_word("v2", Alphabet::V)));
  CHECK(psi(v2) == delta_letters("d3 d1 d2^-1 d3^-1"));
}

TEST_CASE("phi and psi invert each other") {
  std::mt19937_64 rng(3);
  for (const GroupFlavor& flavor :
       {kB3, GroupFlavor(FlavorTag::ArtinB, 5), kD4, GroupFlavor(FlavorTag::ArtinD, 6)}) {
    for (int i = 1; i <= flavor.n; ++i) {
      const SemidirectElement e = phi_generator(flavor, i);
      CHECK(sd_equal(phi(psi(e), flavor), e));
    }
    for (int t = 0; t < 40; ++t) {
      const SemidirectElement e = random_element(rng, flavor, 5);
      CHECK(sd_equal(phi(psi(e), flavor), e));
    }
  }
}

TEST_CASE("defining relations map to the identity") {
  for (const GroupFlavor& flavor : {kB3, GroupFlavor(FlavorTag::ArtinB, 4), kD4,
                                    GroupFlavor(FlavorTag::ArtinD, 5)}) {
    std::vector<SemidirectElement> images;
    for (int i = 1; i <= flavor.n; ++i) images.push_back(phi_generator(flavor, i));
    CHECK(verify_presentation(images, flavor));
  }
  // corrupting one image breaks a relation
  std::vector<SemidirectElement> bad;
  bad.push_back(SemidirectElement::from_fiber(kB3, parse_free_word("u2", Alphabet::U)));
  for (int i = 2; i <= 3; ++i) bad.push_back(phi_generator(kB3, i));
  CHECK_FALSE(verify_presentation(bad, kB3));
}

TEST_CASE("centre elements commute with the generators") {
  for (const GroupFlavor& flavor : {kB3, kD4, GroupFlavor(FlavorTag::ArtinD, 5), kK4}) {
    const SemidirectElement z = center_element(flavor);
    if (flavor.tag == FlavorTag::KSemidirect) {
      for (int i = 1; i <= flavor.n; ++i) {
        InvolutiveWord x(flavor.n);
        x.push(i);
        CHECK(sd_commutes(z, SemidirectElement::from_fiber(flavor, x)));
      }
      for (int i = 1; i < flavor.n; ++i)
        CHECK(sd_commutes(z, section(BraidWord(flavor.n, {BraidLetter{i, 1}}), flavor)));
    } else {
      for (int i = 1; i <= flavor.n; ++i)
        CHECK(sd_commutes(z, phi_generator(flavor, i)));
    }
  }
  // the type B centre at n = 3 is (u1 u2 u3, zeta)
  const SemidirectElement zb = center_element(kB3);
  CHECK(zb.fiber() == parse_free_word("u1 u2 u3", Alphabet::U));
  CHECK(zb.braid() == zeta(3));
  // even-rank type D stores g1 g3, odd rank the double twist
  CHECK(center_element(kD4).fiber() == parse_free_word("g1 g3", Alphabet::G));
  CHECK(center_element(GroupFlavor(FlavorTag::ArtinD, 5)).braid() == braid_power(zeta(5), 2));
}

TEST_CASE("generator inverting involution") {
  CHECK(sd_equal(eps_auto(phi(beta_word("b1"), kB3)), phi(beta_word("b1^-1"), kB3)));
  CHECK(sd_equal(eps_auto(phi(delta_letters("d3"), kD4)), phi(delta_letters("d3^-1"), kD4)));
  std::mt19937_64 rng(4);
  for (const GroupFlavor& flavor : {kB3, kD4, kK4}) {
    for (int t = 0; t < 30; ++t) {
      const SemidirectElement e1 = random_element(rng, flavor, 4);
      const SemidirectElement e2 = random_element(rng, flavor, 4);
      CHECK(sd_equal(eps_auto(eps_auto(e1)), e1));
      CHECK(sd_equal(eps_auto(sd_multiply(e1, e2)),
                     sd_multiply(eps_auto(e1), eps_auto(e2))));
    }
  }
}

TEST_CASE("graph involution") {
  CHECK(sd_equal(tau_auto(phi(delta_letters("d1"), kD4)), phi(delta_letters("d2"), kD4)));
  CHECK(sd_equal(tau_auto(phi(delta_letters("d2"), kD4)), phi(delta_letters("d1"), kD4)));
  CHECK(sd_equal(tau_auto(phi(delta_letters("d3"), kD4)), phi(delta_letters("d3"), kD4)));
  CHECK_THROWS_AS(tau_auto(SemidirectElement::identity(kB3)), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const SemidirectElement e = random_element(rng, kD4, 5);
    CHECK(sd_equal(tau_auto(tau_auto(e)), e));
  }
}

TEST_CASE("signed permutation projection") {
  const SignedPermutation p1 = coxeter_project(phi(beta_word("b1"), kB3));
  CHECK(p1.signs == std::vector<int>{-1, 1, 1});
  CHECK(p1.perm.is_identity());
  const SignedPermutation p2 = coxeter_project(phi(beta_word("b2"), kB3));
  CHECK(p2.signs == std::vector<int>{1, 1, 1});
  CHECK(p2.perm == Permutation({2, 1, 3}));
  const SignedPermutation p3 = coxeter_project(phi(delta_letters("d1"), kD4));
  CHECK(p3.signs == std::vector<int>{-1, -1, 1, 1});
  CHECK(p3.perm == Permutation({2, 1, 3, 4}));
  CHECK(sp_even(p3));

  std::mt19937_64 rng(6);
  for (const GroupFlavor& flavor : {kB3, kD4, kK4}) {
    for (int t = 0; t < 80; ++t) {
      const SemidirectElement e1 = random_element(rng, flavor, 5);
      const SemidirectElement e2 = random_element(rng, flavor, 5);
      CHECK(coxeter_project(sd_multiply(e1, e2)) ==
            sp_multiply(coxeter_project(e1), coxeter_project(e2)));
      if (flavor.tag == FlavorTag::ArtinD) CHECK(sp_even(coxeter_project(e1)));
    }
  }
  // the projection is well-defined on the presented group
  for (const GroupFlavor& flavor : {kB3, kD4}) {
    for (const auto& [lhs, rhs] : presentation_relations(flavor)) {
      CHECK(coxeter_project(phi(lhs, flavor)) == coxeter_project(phi(rhs, flavor)));
    }
  }
}

TEST_CASE("the distinguished fixed word") {
  CHECK(x0_word(4) == parse_free_word("v1 v2^-1 v3", Alphabet::V));
  CHECK(x0_word(5) ==
        parse_free_word("v1 v2^-1 v3 v4^-1 v1^-1 v2 v3^-1 v4", Alphabet::V));
  CHECK(abelianize(x0_word(4), 3) == AbelianVector{3, {1, -1, 1}});
  CHECK_THROWS_AS(x0_word(3), std::invalid_argument);
}
