#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace artinbd {

// Generator symbol families. A word may only mix families belonging to the
// same alphabet (see alphabet_of): {x,y}, {a,b} and {s,t} are two-letter
// alphabets, every other family stands alone.
enum class Family : std::uint8_t { U, V, G, X, Y, A, B, S, T, Beta, Delta };

enum class Alphabet : std::uint8_t { U, V, G, XY, AB, ST, Beta, Delta };

Alphabet alphabet_of(Family f);
const char* family_prefix(Family f);

struct GenSym {
  Family family;
  int index = 1;  // >= 1
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

struct Letter {
  GenSym sym;
  int sign = 1;  // +1 or -1
  Letter inverse() const { return Letter{sym, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in a finitely generated free group. Immutable value
// type; every constructor reduces, so no adjacent inverse pairs survive.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter>& raw);

  static FreeWord generator(Family f, int index, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Appends one letter, cancelling against the back. Used by all builders.
  void push(Letter l);
  void push_word(const FreeWord& w);
  void push_word_inverse(const FreeWord& w);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Throws std::invalid_argument when the two words use different alphabets.
FreeWord multiply(const FreeWord& w1, const FreeWord& w2);
FreeWord multiply(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3);
FreeWord invert(const FreeWord& w);
FreeWord power(const FreeWord& w, long long k);
FreeWord conjugate(const FreeWord& c, const FreeWord& w);  // c w c^-1

// w = conjugator . core . conjugator^-1 with core cyclically reduced.
std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& w);

// Witness c with c w1 c^-1 = w2, when the words are conjugate. The witness
// is the canonical one built from cyclic reduction and the smallest cyclic
// shift aligning the two cores.
std::optional<FreeWord> conjugating_witness(const FreeWord& w1, const FreeWord& w2);
bool is_conjugate(const FreeWord& w1, const FreeWord& w2);

struct AbelianVector {
  int rank = 0;
  std::vector<long long> coords;
  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;
};

AbelianVector abelianize(const FreeWord& w, int rank);
AbelianVector add(const AbelianVector& a, const AbelianVector& b);

// Exact k with w = base^k; base must be nontrivial. k = 0 iff w is trivial.
std::optional<long long> power_of(const FreeWord& w, const FreeWord& base);

// Substitutes an image for every generator occurring in w and reduces.
// Throws when a generator of w has no image.
FreeWord apply_endomorphism(const FreeWord& w, const std::map<GenSym, FreeWord>& images);

// Shape y^k x^eps y^l for words over the {x,y} alphabet.
struct AxisForm {
  long long k = 0;
  int eps = 1;
  long long l = 0;
  friend bool operator==(const AxisForm&, const AxisForm&) = default;
};
std::optional<AxisForm> match_axis_form(const FreeWord& w);

// For w(s,t) over the {s,t} alphabet, the product w(x,xy).w(y,xy) in the
// free group on {x,y}, reduced, together with its triviality flag. The
// product is trivial only for the trivial w.
std::pair<FreeWord, bool> substitution_product_xy(const FreeWord& w);

}  // namespace artinbd
