#pragma once

#include <random>
#include <stdexcept>

#include "artinbd/braid.hpp"
#include "artinbd/free_word.hpp"
#include "artinbd/involutive.hpp"
#include "artinbd/semidirect.hpp"

namespace artinbd {

// Seeded generators used by the random sweeps; lengths are uniform in
// [0, max_len], letters uniform over the reduced continuations.

inline FreeWord random_free_word(std::mt19937_64& rng, Family family, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, rank);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  FreeWord w;
  while (static_cast<int>(w.size()) < len) {
    w.push(Letter{GenSym{family, idx_dist(rng)}, sign_dist(rng) == 0 ? 1 : -1});
  }
  return w;
}

inline InvolutiveWord random_k_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, n);
  const int len = len_dist(rng);
  InvolutiveWord w(n);
  while (static_cast<int>(w.size()) < len) w.push(idx_dist(rng));
  return w;
}

inline BraidWord random_braid_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, n - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  BraidWord b(n);
  while (static_cast<int>(b.size()) < len) {
    b.push(BraidLetter{idx_dist(rng), sign_dist(rng) == 0 ? 1 : -1});
  }
  return b;
}

inline SemidirectElement random_element(std::mt19937_64& rng, const GroupFlavor& flavor,
                                        int max_len) {
  const BraidWord braid = random_braid_word(rng, flavor.n, max_len);
  switch (flavor.tag) {
    case FlavorTag::ArtinB:
      return SemidirectElement(flavor, random_free_word(rng, Family::U, flavor.n, max_len), braid);
    case FlavorTag::ArtinD:
      return SemidirectElement(flavor, random_free_word(rng, Family::G, flavor.n - 1, max_len),
                               braid);
    case FlavorTag::KSemidirect:
      return SemidirectElement(flavor, random_k_word(rng, flavor.n, max_len), braid);
  }
  throw std::logic_error("bad flavor");
}

}  // namespace artinbd
