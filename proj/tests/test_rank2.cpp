#include <doctest.h>

#include <random>

#include "artinbd/random_words.hpp"
#include "artinbd/rank2.hpp"
#include "artinbd/text.hpp"

using namespace artinbd;

namespace {

FreeWord ab(const std::string& text) { return parse_free_word(text, Alphabet::AB); }

FreeWord random_ab_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len), fam(0, 1), sig(0, 1);
  FreeWord w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    w.push(Letter{GenSym{fam(rng) ? Family::A : Family::B, 1}, sig(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("coordinate changes") {
  const Rank2Group m3(3);
  CHECK(std_to_ab(m3, ab("a")) == ab("a^-1 b"));
  const Rank2Group m4(4);
  CHECK(std_to_ab(m4, ab("b")) == ab("b"));
  CHECK(std_to_ab(m4, ab("a")) == ab("a b^-1"));
  std::mt19937_64 rng(1);
  for (int m : {3, 4, 5, 6}) {
    const Rank2Group grp(m);
    for (int t = 0; t < 100; ++t) {
      const FreeWord w = random_ab_word(rng, 8);
      CHECK(ab_to_std(grp, std_to_ab(grp, w)) == w);
      CHECK(std_to_ab(grp, ab_to_std(grp, w)) == w);
    }
  }
}

TEST_CASE("normal forms") {
  const Rank2Group m3(3);
  CHECK(normal_form(m3, ab("a a a")) == Rank2NormalForm{1, FreeProductWord({3, 2})});
  CHECK(normal_form(m3, ab("a a a a")) ==
        Rank2NormalForm{1, FreeProductWord({3, 2}, {{0, 1}})});
  CHECK(normal_form(m3, ab("b b")) == Rank2NormalForm{1, FreeProductWord({3, 2})});
  const Rank2Group m4(4);
  CHECK(normal_form(m4, ab("b a a b^-1")) == Rank2NormalForm{1, FreeProductWord({2, 0})});
  CHECK(nf_equal(m3, ab("a a a"), ab("b b")));
  CHECK_FALSE(nf_equal(m3, ab("a b"), ab("b a")));
  CHECK(nf_equal(m4, ab("a a b"), ab("b a a")));
  // the defining relation in std letters
  for (int m : {3, 4, 5, 6}) {
    const Rank2Group grp(m);
    FreeWord lhs, rhs;
    for (int i = 0; i < m; ++i) {
      lhs.push(Letter{GenSym{i % 2 ? Family::B : Family::A, 1}, 1});
      rhs.push(Letter{GenSym{i % 2 ? Family::A : Family::B, 1}, 1});
    }
    CHECK(nf_equal(grp, std_to_ab(grp, lhs), std_to_ab(grp, rhs)));
  }
  // round trips through the lift
  std::mt19937_64 rng(2);
  for (int m : {3, 4, 5, 6}) {
    const Rank2Group grp(m);
    for (int t = 0; t < 200; ++t) {
      const FreeWord w = random_ab_word(rng, 10);
      const Rank2NormalForm nf = normal_form(grp, w);
      CHECK(normal_form(grp, nf_lift(grp, nf)) == nf);
      CHECK(nf_equal(grp, w, nf_lift(grp, nf)));
    }
  }
}

TEST_CASE("special automorphisms") {
  const Rank2Group m3(3);
  CHECK(special_auto_apply(m3, SpecialAuto::Eps, ab("a"), Rank2Coords::Std) == ab("a^-1"));
  const Rank2Group m4(4);
  CHECK(special_auto_apply(m4, SpecialAuto::Eta, ab("b"), Rank2Coords::AB) == ab("b a"));
  // tau.eps sends the first coordinate generator to its inverse (odd case)
  const FreeWord te =
      special_auto_apply(m3, SpecialAuto::Tau,
                         special_auto_apply(m3, SpecialAuto::Eps, ab("a"), Rank2Coords::AB),
                         Rank2Coords::AB);
  CHECK(nf_equal(m3, te, ab("a^-1")));
  CHECK_THROWS_AS(special_auto_apply(m3, SpecialAuto::Eta, ab("a"), Rank2Coords::Std),
                  std::invalid_argument);
  // eta is an automorphism: eta . eta_inv = id up to the relation
  std::mt19937_64 rng(3);
  for (int m : {4, 6}) {
    const Rank2Group grp(m);
    for (int t = 0; t < 60; ++t) {
      const FreeWord w = random_ab_word(rng, 6);
      const FreeWord back = special_auto_apply(
          grp, SpecialAuto::EtaInv, special_auto_apply(grp, SpecialAuto::Eta, w, Rank2Coords::AB),
          Rank2Coords::AB);
      CHECK(nf_equal(grp, back, w));
    }
  }
  // tau equals conjugation by the half twist when m is odd
  for (int m : {3, 5}) {
    const Rank2Group grp(m);
    for (const char* g : {"a", "b"}) {
      CHECK(nf_equal(grp,
                     special_auto_apply(grp, SpecialAuto::Tau, ab(g), Rank2Coords::AB),
                     special_auto_apply(grp, SpecialAuto::DeltaConj, ab(g), Rank2Coords::AB)));
    }
  }
}

TEST_CASE("quotient classification in C2 * Cm") {
  const std::vector<long long> orders = {2, 5};
  FreeProductWord u_img(orders), v_img(orders);
  u_img.push(0, 1);
  v_img.push(1, 2);
  const auto q = classify_quotient_c2_cm(u_img, v_img);
  REQUIRE(q.has_value());
  CHECK(q->r == 2);
  CHECK(q->conjugator.is_identity());

  FreeProductWord v_id(orders);
  v_id.push(1, 1);
  const auto q_id = classify_quotient_c2_cm(u_img, v_id);
  REQUIRE(q_id.has_value());
  CHECK(q_id->r == 1);
  CHECK(q_id->conjugator.is_identity());

  // conjugated images classify with the same twist exponent
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    FreeProductWord w(orders);
    std::uniform_int_distribution<int> fac(0, 1), e5(1, 4), len(0, 5);
    const int L = len(rng);
    for (int i = 0; i < L; ++i) {
      const int f = fac(rng);
      w.push(f, f == 0 ? 1 : e5(rng));
    }
    for (long long r : {1, 2, 3, 4}) {
      FreeProductWord vu(orders), vv(orders);
      vu = fp_conjugate_by(w, u_img);
      vv = fp_conjugate_by(w, fp_power(v_id, r));
      const auto qc = classify_quotient_c2_cm(vu, vv);
      REQUIRE(qc.has_value());
      CHECK(qc->r == r);
    }
  }
  // a non-automorphism: v maps to v^0-like garbage
  FreeProductWord bad(orders);
  bad.push(0, 1);
  bad.push(1, 1);
  CHECK_FALSE(classify_quotient_c2_cm(u_img, bad).has_value());
}

TEST_CASE("quotient classification in Ck * Z") {
  const std::vector<long long> orders = {2, 0};
  FreeProductWord u_img(orders), v_img(orders);
  u_img.push(0, 1);
  v_img.push(1, -1);
  v_img.push(0, 1);
  const auto q = classify_quotient_ck_z(u_img, v_img);
  REQUIRE(q.has_value());
  CHECK(q->eps == -1);
  CHECK(q->r == 1);
  CHECK(q->s == 1);
  CHECK(q->conjugator.is_identity());

  // exact reconstruction on random inner twists
  std::mt19937_64 rng(5);
  const std::vector<long long> o3 = {3, 0};
  for (int t = 0; t < 100; ++t) {
    FreeProductWord w(o3);
    std::uniform_int_distribution<int> fac(0, 1), e3(1, 2), ez(-2, 2), len(0, 5);
    const int L = len(rng);
    for (int i = 0; i < L; ++i) {
      const int f = fac(rng);
      w.push(f, f == 0 ? e3(rng) : (ez(rng) == 0 ? 1 : ez(rng)));
    }
    std::uniform_int_distribution<int> rr(1, 2), ss(0, 2), ee(0, 1);
    const long long r = rr(rng), s = ss(rng);
    const int eps = ee(rng) ? 1 : -1;
    FreeProductWord nu_u(o3), nu_v(o3);
    nu_u.push(0, r);
    nu_v.push(1, eps);
    nu_v.push(0, s);
    const auto back = classify_quotient_ck_z(fp_conjugate_by(w, nu_u), fp_conjugate_by(w, nu_v));
    REQUIRE(back.has_value());
    CHECK(back->r == r);
    CHECK(back->eps == eps);
  }
}

TEST_CASE("full automorphism classification") {
  for (int m : {3, 4, 5, 6}) {
    const Rank2Group grp(m);
    const AutoDescriptor id_desc =
        classify_auto(grp, FreeWord::generator(Family::A, 1), FreeWord::generator(Family::B, 1));
    CHECK(id_desc == AutoDescriptor{});

    const AutoDescriptor eps_desc = classify_auto(grp, ab("a^-1"), ab("b^-1"));
    CHECK(eps_desc == AutoDescriptor{FreeWord(), 1, 0, 0});
  }
  const Rank2Group m4(4);
  const AutoDescriptor eta_desc = classify_auto(m4, ab("b^-1"), ab("b a b"));
  CHECK(eta_desc == AutoDescriptor{FreeWord(), 0, 0, 1});

  // center violation: alpha and beta map to commuting words
  CHECK_THROWS_AS(classify_auto(m4, ab("a"), ab("a")), Rank2ClassifyError);

  // round trips over random descriptors
  std::mt19937_64 rng(6);
  for (int m : {3, 4, 5, 6}) {
    const Rank2Group grp(m);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<long long> eta_dist(-5, 5);
    for (int t = 0; t < 60; ++t) {
      AutoDescriptor d;
      d.e_eps = bit(rng);
      if (!grp.odd()) {
        d.e_tau = bit(rng);
        d.e_eta = eta_dist(rng);
      }
      d.inner_witness = residue_lift(grp, normal_form(grp, random_ab_word(rng, 6)).residue);
      const auto [a_img, b_img] = build_auto(grp, d);
      const AutoDescriptor back = classify_auto(grp, a_img, b_img);
      CHECK(back == d);
    }
  }
}

TEST_CASE("closure oracle agrees with the normal form") {
  for (int m : {3, 4}) {
    const Rank2Group grp(m);
    const ClosureAgreement agreement = closure_agreement(grp, 4, 9);
    CHECK(agreement.pass());
    CHECK(agreement.words_checked == 341);  // all strings of length <= 4
  }
}
