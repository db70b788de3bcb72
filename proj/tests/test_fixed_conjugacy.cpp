#include <doctest.h>

#include "artinbd/fixed_conjugacy.hpp"
#include "artinbd/semidirect.hpp"
#include "artinbd/text.hpp"

using namespace artinbd;

namespace {

InvolutiveWord kw(const std::string& text, int n) { return parse_involutive_word(text, n); }

bool literal_delta_power(const InvolutiveWord& w) {
  const int n = w.n();
  if (w.is_identity()) return true;
  if (w.size() % static_cast<std::size_t>(n) != 0) return false;
  const long long k = static_cast<long long>(w.size() / static_cast<std::size_t>(n));
  return w == k_power(delta_word(n), k) || w == k_power(delta_word(n), -k);
}

}  // namespace

TEST_CASE("fixed subgroup generators") {
  const auto g1 = fixed_gens(CutSet(3, {1}));
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == kw("x1", 3));
  CHECK(g1[1] == kw("x2 x3", 3));
  const auto g2 = fixed_gens(CutSet(4, {}));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == kw("x1 x2 x3 x4", 4));
  const auto g3 = fixed_gens(CutSet(5, {2}));
  REQUIRE(g3.size() == 2);
  CHECK(g3[0] == kw("x1 x2", 5));
  CHECK(g3[1] == kw("x3 x4 x5", 5));
}

TEST_CASE("fixedness under single generators") {
  const Representation& rp4 = cached_representation(RepKind::RhoPlus, 4);
  for (int i = 1; i <= 3; ++i)
    CHECK(is_fixed(rp4, BraidWord(4, {BraidLetter{i, 1}}), delta_word(4)));
  CHECK(is_fixed(rp4, BraidWord(4, {BraidLetter{1, 1}}), kw("x1 x2", 4)));
  const Representation& rp3 = cached_representation(RepKind::RhoPlus, 3);
  CHECK_FALSE(is_fixed(rp3, BraidWord(3, {BraidLetter{2, 1}}), kw("x1 x2", 3)));
}

TEST_CASE("conjugacy into the powers of the full product") {
  CHECK(conj_to_delta_power(kw("x2 x3 x1 x2 x3 x1", 3)) == 2);
  CHECK(conj_to_delta_power(InvolutiveWord(3)) == 0);
  CHECK_FALSE(conj_to_delta_power(kw("x1 x2", 3)).has_value());
  CHECK(conj_to_delta_power(kw("x3 x2 x1", 3)) == -1);

  CHECK(conj_to_u0_power(parse_free_word("u3 u1 u2", Alphabet::U), 3) == 1);
  CHECK_FALSE(conj_to_u0_power(parse_free_word("u1 u2^-1", Alphabet::U), 3).has_value());

  const auto c1 = dyer_grossman_classify(parse_free_word("u2^-1 u1 u1 u1 u2", Alphabet::U), 3);
  CHECK(c1 == U0Classification{U0Classification::Kind::GeneratorPower, 1, 3});
  const auto c2 = dyer_grossman_classify(parse_free_word("u1 u2^-1", Alphabet::U), 3);
  CHECK(c2.kind == U0Classification::Kind::Other);
  const auto c3 = dyer_grossman_classify(parse_free_word("u3 u1 u2", Alphabet::U), 3);
  CHECK(c3 == U0Classification{U0Classification::Kind::ProductPower, 0, 1});
}

TEST_CASE("braid invariance classification") {
  const Representation& rp3 = cached_representation(RepKind::RhoPlus, 3);
  for (long long k = -2; k <= 2; ++k)
    CHECK(braid_invariant(rp3, k_power(delta_word(3), k)));
  CHECK_FALSE(braid_invariant(rp3, kw("x1 x2", 3)));
  const Representation& rv4 = cached_representation(RepKind::RhoDv, 4);
  CHECK(braid_invariant(rv4, x0_word(4)));
}

TEST_CASE("enumeration order and counts") {
  std::vector<std::string> kwords;
  for_each_k_word(3, 2, [&](const InvolutiveWord& w) { kwords.push_back(to_text(w)); });
  CHECK(kwords == std::vector<std::string>{"e", "x1", "x2", "x3", "x1 x2", "x1 x3", "x2 x1",
                                           "x2 x3", "x3 x1", "x3 x2"});
  std::vector<std::string> fwords;
  for_each_free_word(Family::U, 2, 1, [&](const FreeWord& w) { fwords.push_back(to_text(w)); });
  CHECK(fwords == std::vector<std::string>{"e", "u1", "u1^-1", "u2", "u2^-1"});
  std::vector<std::string> bwords;
  for_each_braid_word(3, 1, [&](const BraidWord& b) { bwords.push_back(to_text(b)); });
  CHECK(bwords == std::vector<std::string>{"e", "a1", "a1^-1", "a2", "a2^-1"});
  long long count = 0;
  for_each_k_word(3, 8, [&](const InvolutiveWord&) { ++count; });
  CHECK(count == 1 + 3 * (255));  // 3 * 2^(L-1) words per length L
}

TEST_CASE("fixed subgroup membership by interval syllables") {
  const CutSet cut(4, {2});
  CHECK(in_fixed_subgroup(kw("x1 x2 x3 x4 x1 x2", 4), cut));
  CHECK(in_fixed_subgroup(InvolutiveWord(4), cut));
  CHECK_FALSE(in_fixed_subgroup(kw("x1 x3", 4), cut));
  CHECK(in_fixed_subgroup(kw("x2 x1", 4), cut));  // inverse of the first range word
  CHECK_FALSE(in_fixed_subgroup(kw("x1 x2 x1", 4), cut));

  // membership agrees with fixedness under the kept generators, exhaustively
  for (const CutSet& c : {CutSet(3, {1}), CutSet(3, {2}), CutSet(4, {2}), CutSet(4, {1, 3})}) {
    const Representation& rep = cached_representation(RepKind::RhoPlus, c.n);
    for_each_k_word(c.n, 6, [&](const InvolutiveWord& w) {
      bool fixed = true;
      for (int i : c.kept_generators())
        fixed = fixed && is_fixed(rep, BraidWord(c.n, {BraidLetter{i, 1}}), w);
      CHECK(fixed == in_fixed_subgroup(w, c));
    });
  }
}

TEST_CASE("exhaustive classification sweeps at small rank") {
  // braid invariance matches delta-power conjugacy on short words
  const Representation& rp3 = cached_representation(RepKind::RhoPlus, 3);
  for_each_k_word(3, 6, [&](const InvolutiveWord& w) {
    CHECK(braid_invariant(rp3, w) == conj_to_delta_power(w).has_value());
    CHECK(fixed_by_all(rp3, w) == literal_delta_power(w));
  });
  const Representation& rb3 = cached_representation(RepKind::RhoB, 3);
  for_each_free_word(Family::U, 3, 4, [&](const FreeWord& w) {
    CHECK(braid_invariant(rb3, w) == conj_to_u0_power(w, 3).has_value());
    if (braid_square_invariant(rb3, w))
      CHECK(dyer_grossman_classify(w, 3).kind != U0Classification::Kind::Other);
  });
}
