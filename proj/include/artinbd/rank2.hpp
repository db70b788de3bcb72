#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artinbd/free_word.hpp"
#include "artinbd/involutive.hpp"

namespace artinbd {

// The rank 2 group <alpha, beta | w(alpha,beta:m) = w(beta,alpha:m)>, m >= 3.
// Std words use letters a = alpha, b = beta; coordinate words use the
// generators a = alpha beta and b = (alpha beta)^k alpha (m = 2k+1 odd) or
// b = beta (m = 2k even), in which the presentation becomes a^m = b^2,
// respectively a^k b = b a^k, with central c = a^m = b^2 or c = a^k.
class Rank2Group {
 public:
  explicit Rank2Group(int m);
  int m() const { return m_; }
  bool odd() const { return m_ % 2 == 1; }
  int k() const { return odd() ? (m_ - 1) / 2 : m_ / 2; }
  // central exponent collected per a-run overflow: m for odd, k for even
  long long c_period() const { return odd() ? m_ : k(); }
  // residue factor orders, factor 0 = a, factor 1 = b
  std::vector<long long> residue_orders() const;

 private:
  int m_;
};

// Whether a rank 2 word is spelled in the standard generators or in the
// central coordinates.
enum class Rank2Coords { Std, AB };

// Unique representative c^{c_exp} . lift(residue) of a group element.
struct Rank2NormalForm {
  long long c_exp = 0;
  FreeProductWord residue;
  friend bool operator==(const Rank2NormalForm&, const Rank2NormalForm&) = default;
};

Rank2NormalForm normal_form(const Rank2Group& grp, const FreeWord& ab_word);
bool nf_equal(const Rank2Group& grp, const FreeWord& w1, const FreeWord& w2);
// letter count of the representative: |c_exp| . c_period + residue exponents
long long nf_length(const Rank2Group& grp, const Rank2NormalForm& nf);
// the representative as an {a,b} word, and the residue lift alone
FreeWord nf_lift(const Rank2Group& grp, const Rank2NormalForm& nf);
FreeWord residue_lift(const Rank2Group& grp, const FreeProductWord& residue);

// Mutually inverse free rewritings between the two generating sets.
FreeWord std_to_ab(const Rank2Group& grp, const FreeWord& std_word);
FreeWord ab_to_std(const Rank2Group& grp, const FreeWord& ab_word);

// alpha beta alpha ... of length m.
FreeWord half_twist_word(const Rank2Group& grp);
// the central generator as a coordinate word (a^m odd, a^k even)
FreeWord center_word_ab(const Rank2Group& grp);

enum class SpecialAuto { Eps, Tau, Eta, EtaInv, DeltaConj };

// eps inverts both standard generators, tau swaps them, eta (m even) sends
// alpha to beta^-1 and beta to beta alpha beta, delta_conj conjugates by the
// half twist.
FreeWord special_auto_apply(const Rank2Group& grp, SpecialAuto which, const FreeWord& w,
                            Rank2Coords coords);

// ---------------------------------------------------------------------------
// Automorphism classification of the central quotients (C_2 * C_m with
// factor 0 = u of order 2, and C_k * Z with factor 0 = u of order k) in the
// form phi = nu . inner(conjugator).

struct QuotientAutoC2Cm {
  FreeProductWord conjugator;
  long long r = 1;  // nu_r: u -> u, v -> v^r
};
std::optional<QuotientAutoC2Cm> classify_quotient_c2_cm(const FreeProductWord& u_img,
                                                        const FreeProductWord& v_img);

struct QuotientAutoCkZ {
  FreeProductWord conjugator;
  int eps = 1;       // nu: v -> v^eps u^s
  long long r = 1;   // nu: u -> u^r
  long long s = 0;
};
std::optional<QuotientAutoCkZ> classify_quotient_ck_z(const FreeProductWord& u_img,
                                                      const FreeProductWord& v_img);

// ---------------------------------------------------------------------------
// Full automorphism decomposition inner(witness) . eps^e . tau^e . eta^e.

struct AutoDescriptor {
  FreeWord inner_witness;  // {a,b} coordinate word, central part dropped
  int e_eps = 0;
  int e_tau = 0;       // 0 when m is odd (folded into the inner part)
  long long e_eta = 0; // 0 when m is odd
  friend bool operator==(const AutoDescriptor&, const AutoDescriptor&) = default;
};

class Rank2ClassifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Images of the standard generators under the described automorphism.
std::pair<FreeWord, FreeWord> build_auto(const Rank2Group& grp, const AutoDescriptor& d);

// Decomposes the automorphism given by std-generator images; throws
// Rank2ClassifyError when the images violate the center or fail to define an
// automorphism.
AutoDescriptor classify_auto(const Rank2Group& grp, const FreeWord& alpha_img,
                             const FreeWord& beta_img);

// ---------------------------------------------------------------------------
// Independent word problem oracle: union-find closure of free cancellation
// and the defining relation over all letter strings of length <= cap.

struct ClosureAgreement {
  long long words_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Compares normal-form equality with the rewriting closure on every word of
// length <= word_len.
ClosureAgreement closure_agreement(const Rank2Group& grp, int word_len, int cap);

}  // namespace artinbd
