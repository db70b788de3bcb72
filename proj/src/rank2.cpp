#include "artinbd/rank2.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "artinbd/text.hpp"

namespace artinbd {

namespace {

constexpr int kFactorA = 0;
constexpr int kFactorB = 1;

FreeWord ab_gen(Family f, int sign = 1) { return FreeWord::generator(f, 1, sign); }

Letter ab_letter(Family f, int sign) { return Letter{GenSym{f, 1}, sign}; }

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long mod_inverse(long long r, long long m) {
  long long t = 0, new_t = 1, a = m, b = ((r % m) + m) % m;
  while (b != 0) {
    const long long q = a / b;
    t -= q * new_t;
    std::swap(t, new_t);
    a -= q * b;
    std::swap(a, b);
  }
  if (a != 1) throw std::invalid_argument("not invertible");
  return ((t % m) + m) % m;
}

}  // namespace

Rank2Group::Rank2Group(int m) : m_(m) {
  if (m < 3) throw std::invalid_argument("edge label must be >= 3");
}

std::vector<long long> Rank2Group::residue_orders() const {
  if (odd()) return {m_, 2};
  return {k(), 0};
}

Rank2NormalForm normal_form(const Rank2Group& grp, const FreeWord& ab_word) {
  const long long period = grp.c_period();
  long long c_exp = 0;
  std::vector<FpSyllable> stack;
  auto push_a = [&](int sign) {
    long long e = sign;
    if (!stack.empty() && stack.back().factor == kFactorA) {
      e += stack.back().exp;
      stack.pop_back();
    }
    const long long carry = floor_div(e, period);
    c_exp += carry;
    e -= carry * period;
    if (e != 0) stack.push_back(FpSyllable{kFactorA, e});
  };
  auto push_b = [&](int sign) {
    if (grp.odd()) {
      if (!stack.empty() && stack.back().factor == kFactorB) {
        stack.pop_back();
        if (sign > 0) c_exp += 1;  // b.b = c
      } else {
        if (sign < 0) c_exp -= 1;  // b^-1 = c^-1 b
        stack.push_back(FpSyllable{kFactorB, 1});
      }
    } else {
      if (!stack.empty() && stack.back().factor == kFactorB) {
        const long long e = stack.back().exp + sign;
        stack.pop_back();
        if (e != 0) stack.push_back(FpSyllable{kFactorB, e});
      } else {
        stack.push_back(FpSyllable{kFactorB, sign});
      }
    }
  };
  for (const Letter& l : ab_word.letters()) {
    if (l.sym.family == Family::A)
      push_a(l.sign);
    else if (l.sym.family == Family::B)
      push_b(l.sign);
    else
      throw std::invalid_argument("expected a word over the {a,b} alphabet");
  }
  Rank2NormalForm nf{c_exp, FreeProductWord(grp.residue_orders())};
  for (const FpSyllable& s : stack) nf.residue.push(s.factor, s.exp);
  return nf;
}

bool nf_equal(const Rank2Group& grp, const FreeWord& w1, const FreeWord& w2) {
  return normal_form(grp, w1) == normal_form(grp, w2);
}

long long nf_length(const Rank2Group& grp, const Rank2NormalForm& nf) {
  long long len = std::llabs(nf.c_exp) * grp.c_period();
  for (const FpSyllable& s : nf.residue.syllables()) len += std::llabs(s.exp);
  return len;
}

FreeWord residue_lift(const Rank2Group& grp, const FreeProductWord& residue) {
  if (residue.orders() != grp.residue_orders())
    throw std::invalid_argument("residue from a different group");
  FreeWord w;
  for (const FpSyllable& s : residue.syllables()) {
    const Family fam = s.factor == kFactorA ? Family::A : Family::B;
    const int sign = s.exp > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(s.exp); ++i) w.push(ab_letter(fam, sign));
  }
  return w;
}

FreeWord nf_lift(const Rank2Group& grp, const Rank2NormalForm& nf) {
  FreeWord w;
  const int sign = nf.c_exp > 0 ? 1 : -1;
  for (long long i = 0; i < std::llabs(nf.c_exp) * grp.c_period(); ++i)
    w.push(ab_letter(Family::A, sign));
  w.push_word(residue_lift(grp, nf.residue));
  return w;
}

FreeWord std_to_ab(const Rank2Group& grp, const FreeWord& std_word) {
  FreeWord alpha_img, beta_img;
  if (grp.odd()) {
    // alpha = a^-k b, beta = b^-1 a^{k+1}
    alpha_img = power(ab_gen(Family::A), -grp.k());
    alpha_img.push(ab_letter(Family::B, 1));
    beta_img.push(ab_letter(Family::B, -1));
    beta_img.push_word(power(ab_gen(Family::A), grp.k() + 1));
  } else {
    alpha_img = multiply(ab_gen(Family::A), ab_gen(Family::B, -1));
    beta_img = ab_gen(Family::B);
  }
  return apply_endomorphism(std_word, {{GenSym{Family::A, 1}, alpha_img},
                                       {GenSym{Family::B, 1}, beta_img}});
}

FreeWord ab_to_std(const Rank2Group& grp, const FreeWord& ab_word) {
  const FreeWord a_img = multiply(ab_gen(Family::A), ab_gen(Family::B));  // alpha beta
  FreeWord b_img;
  if (grp.odd()) {
    b_img = power(a_img, grp.k());
    b_img.push(ab_letter(Family::A, 1));
  } else {
    b_img = ab_gen(Family::B);
  }
  return apply_endomorphism(ab_word, {{GenSym{Family::A, 1}, a_img},
                                      {GenSym{Family::B, 1}, b_img}});
}

FreeWord half_twist_word(const Rank2Group& grp) {
  FreeWord w;
  for (int i = 0; i < grp.m(); ++i)
    w.push(ab_letter(i % 2 == 0 ? Family::A : Family::B, 1));
  return w;
}

FreeWord center_word_ab(const Rank2Group& grp) {
  return power(ab_gen(Family::A), grp.c_period());
}

FreeWord special_auto_apply(const Rank2Group& grp, SpecialAuto which, const FreeWord& w,
                            Rank2Coords coords) {
  if ((which == SpecialAuto::Eta || which == SpecialAuto::EtaInv) && grp.odd())
    throw std::invalid_argument("eta needs an even edge label");
  if (coords == Rank2Coords::AB)
    return std_to_ab(grp, special_auto_apply(grp, which, ab_to_std(grp, w), Rank2Coords::Std));

  const GenSym alpha{Family::A, 1}, beta{Family::B, 1};
  switch (which) {
    case SpecialAuto::Eps:
      return apply_endomorphism(w, {{alpha, ab_gen(Family::A, -1)}, {beta, ab_gen(Family::B, -1)}});
    case SpecialAuto::Tau:
      return apply_endomorphism(w, {{alpha, ab_gen(Family::B)}, {beta, ab_gen(Family::A)}});
    case SpecialAuto::Eta:
      return apply_endomorphism(
          w, {{alpha, ab_gen(Family::B, -1)},
              {beta, multiply(ab_gen(Family::B), ab_gen(Family::A), ab_gen(Family::B))}});
    case SpecialAuto::EtaInv:
      return apply_endomorphism(
          w, {{alpha, multiply(ab_gen(Family::A), ab_gen(Family::B), ab_gen(Family::A))},
              {beta, ab_gen(Family::A, -1)}});
    case SpecialAuto::DeltaConj:
      return conjugate(half_twist_word(grp), w);
  }
  throw std::logic_error("bad automorphism tag");
}

// --- quotient classification ----------------------------------------------

namespace {

FreeProductWord fp_single(const std::vector<long long>& orders, int factor, long long exp) {
  FreeProductWord w(orders);
  w.push(factor, exp);
  return w;
}

bool check_orders_c2_cm(const FreeProductWord& w) {
  const auto& o = w.orders();
  return o.size() == 2 && o[0] == 2 && o[1] >= 3;
}

bool check_orders_ck_z(const FreeProductWord& w) {
  const auto& o = w.orders();
  return o.size() == 2 && o[0] >= 2 && o[1] == 0;
}

FreeProductWord sandwich(const FreeProductWord& p, const FreeProductWord& w) {
  FreeProductWord out = fp_invert(p);
  out.push_word(w);
  out.push_word(p);
  return out;
}

}  // namespace

std::optional<QuotientAutoC2Cm> classify_quotient_c2_cm(const FreeProductWord& u_img,
                                                        const FreeProductWord& v_img) {
  if (!check_orders_c2_cm(u_img) || u_img.orders() != v_img.orders()) return std::nullopt;
  const auto orders = u_img.orders();
  const long long m = orders[1];

  auto [p, core] = fp_cyclic_reduce(u_img);
  if (core.syllables() != std::vector<FpSyllable>{FpSyllable{0, 1}}) return std::nullopt;

  const FreeProductWord q = sandwich(p, v_img);
  const auto& syl = q.syllables();
  long long r = 0;
  int eps = 0;
  if (syl.size() == 1 && syl[0].factor == 1) {
    r = syl[0].exp;
    eps = 0;
  } else if (syl.size() == 3 && syl[0] == FpSyllable{0, 1} && syl[1].factor == 1 &&
             syl[2] == FpSyllable{0, 1}) {
    r = syl[1].exp;
    eps = 1;
  } else {
    return std::nullopt;
  }
  if (std::gcd(r, m) != 1) return std::nullopt;

  FreeProductWord pu = p;
  if (eps) pu.push(0, 1);
  const long long r_inv = mod_inverse(r, m);
  const std::vector<FreeProductWord> nu_inv = {fp_single(orders, 0, 1),
                                               fp_single(orders, 1, r_inv)};
  const QuotientAutoC2Cm result{fp_apply_endomorphism(pu, nu_inv), r};

  // verify phi = nu_r . inner(conjugator) on both generators
  const std::vector<FreeProductWord> nu = {fp_single(orders, 0, 1), fp_single(orders, 1, r)};
  const auto check = [&](int factor, const FreeProductWord& img) {
    const FreeProductWord conj =
        fp_conjugate_by(result.conjugator, fp_single(orders, factor, 1));
    return fp_apply_endomorphism(conj, nu) == img;
  };
  if (!check(0, u_img) || !check(1, v_img)) return std::nullopt;
  return result;
}

std::optional<QuotientAutoCkZ> classify_quotient_ck_z(const FreeProductWord& u_img,
                                                      const FreeProductWord& v_img) {
  if (!check_orders_ck_z(u_img) || u_img.orders() != v_img.orders()) return std::nullopt;
  const auto orders = u_img.orders();
  const long long k = orders[0];

  auto [p, core] = fp_cyclic_reduce(u_img);
  if (core.syllable_length() != 1 || core.syllables()[0].factor != 0) return std::nullopt;
  const long long r = core.syllables()[0].exp;
  if (std::gcd(r, k) != 1) return std::nullopt;

  const FreeProductWord q = sandwich(p, v_img);
  const auto& syl = q.syllables();
  long long n0 = 0, n1 = 0;
  int eps = 0;
  std::size_t i = 0;
  if (i < syl.size() && syl[i].factor == 0) n0 = syl[i++].exp;
  if (i < syl.size() && syl[i].factor == 1 && (syl[i].exp == 1 || syl[i].exp == -1))
    eps = static_cast<int>(syl[i++].exp);
  else
    return std::nullopt;
  if (i < syl.size() && syl[i].factor == 0) n1 = syl[i++].exp;
  if (i != syl.size()) return std::nullopt;

  const long long s = ((n0 + n1) % k + k) % k;
  const long long r_inv = mod_inverse(r, k);
  FreeProductWord nu_inv_v(orders);
  if (eps == 1) {
    nu_inv_v.push(1, 1);
    nu_inv_v.push(0, -s * r_inv);
  } else {
    nu_inv_v.push(0, s * r_inv);
    nu_inv_v.push(1, -1);
  }
  const std::vector<FreeProductWord> nu_inv = {fp_single(orders, 0, r_inv), nu_inv_v};

  FreeProductWord pu = p;
  pu.push(0, n0);
  const QuotientAutoCkZ result{fp_apply_endomorphism(pu, nu_inv), eps, r, s};

  FreeProductWord nu_v(orders);
  nu_v.push(1, eps);
  nu_v.push(0, s);
  const std::vector<FreeProductWord> nu = {fp_single(orders, 0, r), nu_v};
  const auto check = [&](int factor, const FreeProductWord& img) {
    const FreeProductWord conj =
        fp_conjugate_by(result.conjugator, fp_single(orders, factor, 1));
    return fp_apply_endomorphism(conj, nu) == img;
  };
  if (!check(0, u_img) || !check(1, v_img)) return std::nullopt;
  return result;
}

// --- full classification ----------------------------------------------------

namespace {

FreeWord substitute_std(const FreeWord& w, const FreeWord& alpha_img, const FreeWord& beta_img) {
  return apply_endomorphism(
      w, {{GenSym{Family::A, 1}, alpha_img}, {GenSym{Family::B, 1}, beta_img}});
}

long long b_exponent_sum(const FreeWord& ab_word) {
  long long sum = 0;
  for (const Letter& l : ab_word.letters())
    if (l.sym.family == Family::B) sum += l.sign;
  return sum;
}

// relabel between residue convention (a first) and the C2 * Cm classifier
// convention (order-2 factor first)
FreeProductWord swap_factors(const FreeProductWord& w) {
  std::vector<long long> orders = {w.orders()[1], w.orders()[0]};
  FreeProductWord out(orders);
  for (const FpSyllable& s : w.syllables()) out.push(1 - s.factor, s.exp);
  return out;
}

}  // namespace

std::pair<FreeWord, FreeWord> build_auto(const Rank2Group& grp, const AutoDescriptor& d) {
  if (grp.odd() && (d.e_tau != 0 || d.e_eta != 0))
    throw std::invalid_argument("odd edge label admits no tau or eta part");
  FreeWord a = FreeWord::generator(Family::A, 1);
  FreeWord b = FreeWord::generator(Family::B, 1);
  const SpecialAuto eta_dir = d.e_eta > 0 ? SpecialAuto::Eta : SpecialAuto::EtaInv;
  for (long long i = 0; i < std::llabs(d.e_eta); ++i) {
    a = special_auto_apply(grp, eta_dir, a, Rank2Coords::Std);
    b = special_auto_apply(grp, eta_dir, b, Rank2Coords::Std);
  }
  if (d.e_tau) {
    a = special_auto_apply(grp, SpecialAuto::Tau, a, Rank2Coords::Std);
    b = special_auto_apply(grp, SpecialAuto::Tau, b, Rank2Coords::Std);
  }
  if (d.e_eps) {
    a = special_auto_apply(grp, SpecialAuto::Eps, a, Rank2Coords::Std);
    b = special_auto_apply(grp, SpecialAuto::Eps, b, Rank2Coords::Std);
  }
  const FreeWord w_std = ab_to_std(grp, d.inner_witness);
  return {conjugate(w_std, a), conjugate(w_std, b)};
}

AutoDescriptor classify_auto(const Rank2Group& grp, const FreeWord& alpha_img,
                             const FreeWord& beta_img) {
  const FreeWord c_std = ab_to_std(grp, center_word_ab(grp));
  const Rank2NormalForm c_nf =
      normal_form(grp, std_to_ab(grp, substitute_std(c_std, alpha_img, beta_img)));
  if (!c_nf.residue.is_identity() || (c_nf.c_exp != 1 && c_nf.c_exp != -1))
    throw Rank2ClassifyError("center violated: the central generator must map to c or c^-1");

  AutoDescriptor d;
  d.e_eps = c_nf.c_exp < 0 ? 1 : 0;
  FreeWord a1 = d.e_eps ? invert(alpha_img) : alpha_img;
  FreeWord b1 = d.e_eps ? invert(beta_img) : beta_img;

  const FreeWord a_std = ab_to_std(grp, FreeWord::generator(Family::A, 1));
  const FreeWord b_std = ab_to_std(grp, FreeWord::generator(Family::B, 1));
  auto residue_of = [&](const FreeWord& std_w, const FreeWord& ai, const FreeWord& bi) {
    return normal_form(grp, std_to_ab(grp, substitute_std(std_w, ai, bi))).residue;
  };

  if (grp.odd()) {
    const auto q = classify_quotient_c2_cm(swap_factors(residue_of(b_std, a1, b1)),
                                           swap_factors(residue_of(a_std, a1, b1)));
    if (!q.has_value() || q->r != 1)
      throw Rank2ClassifyError("images do not define an automorphism");
    d.inner_witness = residue_lift(grp, swap_factors(q->conjugator));
  } else {
    const long long bs = b_exponent_sum(std_to_ab(grp, b1));
    if (bs != 1 && bs != -1)
      throw Rank2ClassifyError("images do not define an automorphism");
    d.e_tau = bs < 0 ? 1 : 0;
    if (d.e_tau) std::swap(a1, b1);

    const auto q = classify_quotient_ck_z(residue_of(a_std, a1, b1), residue_of(b_std, a1, b1));
    if (!q.has_value() || q->r != 1 || q->eps != 1)
      throw Rank2ClassifyError("images do not define an automorphism");
    // witness for phi2 = inner(W) . eta^t: W = nu_{1,1,s}(conjugator)
    const auto orders = grp.residue_orders();
    FreeProductWord nu_v(orders);
    nu_v.push(1, 1);
    nu_v.push(0, q->s);
    const std::vector<FreeProductWord> nu = {fp_single(orders, 0, 1), nu_v};
    d.inner_witness = residue_lift(grp, fp_apply_endomorphism(q->conjugator, nu));

    const FreeWord w_std = ab_to_std(grp, d.inner_witness);
    const FreeWord xi_b =
        multiply(invert(w_std), substitute_std(b_std, a1, b1), w_std);
    const Rank2NormalForm nf = normal_form(grp, std_to_ab(grp, xi_b));
    const auto& syl = nf.residue.syllables();
    long long tail = 0;
    bool shape_ok = false;
    if (syl.size() == 1 && syl[0] == FpSyllable{kFactorB, 1}) {
      shape_ok = true;
    } else if (syl.size() == 2 && syl[0] == FpSyllable{kFactorB, 1} && syl[1].factor == kFactorA) {
      shape_ok = true;
      tail = syl[1].exp;
    }
    if (!shape_ok) throw Rank2ClassifyError("images do not define an automorphism");
    const long long t_prime = grp.k() * nf.c_exp + tail;
    d.e_eta = d.e_tau ? -t_prime : t_prime;
  }

  const auto [a_check, b_check] = build_auto(grp, d);
  if (!nf_equal(grp, std_to_ab(grp, a_check), std_to_ab(grp, alpha_img)) ||
      !nf_equal(grp, std_to_ab(grp, b_check), std_to_ab(grp, beta_img)))
    throw Rank2ClassifyError("images do not define an automorphism");
  return d;
}

// --- rewriting closure oracle ------------------------------------------------

namespace {

// letter codes 0 = a, 1 = a^-1, 2 = b, 3 = b^-1
int inverse_code(int c) { return c ^ 1; }

struct Rule {
  std::vector<int> lhs, rhs;
};

std::vector<Rule> relation_rules(const Rank2Group& grp) {
  std::vector<Rule> rules;
  if (grp.odd()) {
    rules.push_back(Rule{std::vector<int>(static_cast<std::size_t>(grp.m()), 0), {2, 2}});
    rules.push_back(Rule{std::vector<int>(static_cast<std::size_t>(grp.m()), 1), {3, 3}});
  } else {
    Rule fwd;  // a^k b -> b a^k
    fwd.lhs.assign(static_cast<std::size_t>(grp.k()), 0);
    fwd.lhs.push_back(2);
    fwd.rhs.push_back(2);
    fwd.rhs.insert(fwd.rhs.end(), static_cast<std::size_t>(grp.k()), 0);
    rules.push_back(fwd);
    Rule inv;  // b^-1 a^-k -> a^-k b^-1
    inv.lhs.push_back(3);
    inv.lhs.insert(inv.lhs.end(), static_cast<std::size_t>(grp.k()), 1);
    inv.rhs.assign(static_cast<std::size_t>(grp.k()), 1);
    inv.rhs.push_back(3);
    rules.push_back(inv);
  }
  return rules;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = static_cast<std::int32_t>(i);
  }
  std::int32_t find(std::int32_t x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<std::int32_t> parent_;
};

std::string letters_text(const std::vector<int>& w) {
  static const char* names[] = {"a", "a^-1", "b", "b^-1"};
  if (w.empty()) return "e";
  std::string out;
  for (int c : w) {
    if (!out.empty()) out += ' ';
    out += names[c];
  }
  return out;
}

std::string nf_key(const Rank2Group& grp, const std::vector<int>& w) {
  FreeWord word;
  for (int c : w)
    word.push(ab_letter(c < 2 ? Family::A : Family::B, c % 2 == 0 ? 1 : -1));
  const Rank2NormalForm nf = normal_form(grp, word);
  std::string key = std::to_string(nf.c_exp);
  for (const FpSyllable& s : nf.residue.syllables())
    key += "|" + std::to_string(s.factor) + "^" + std::to_string(s.exp);
  return key;
}

}  // namespace

ClosureAgreement closure_agreement(const Rank2Group& grp, int word_len, int cap) {
  if (cap < word_len) throw std::invalid_argument("cap must be at least the word length");
  if (cap > 12) throw std::invalid_argument("closure budget exceeded (cap > 12)");

  std::vector<std::size_t> offset(static_cast<std::size_t>(cap) + 2, 0);
  for (int len = 0; len <= cap; ++len)
    offset[static_cast<std::size_t>(len) + 1] =
        offset[static_cast<std::size_t>(len)] + (static_cast<std::size_t>(1) << (2 * len));
  const std::size_t total = offset[static_cast<std::size_t>(cap) + 1];

  auto encode = [&](const std::vector<int>& w) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      code |= static_cast<std::size_t>(w[i]) << (2 * i);
    return static_cast<std::int32_t>(offset[w.size()] + code);
  };

  UnionFind uf(total);
  const std::vector<Rule> rules = relation_rules(grp);
  std::vector<int> w, target;
  for (int len = 1; len <= cap; ++len) {
    const std::size_t count = static_cast<std::size_t>(1) << (2 * len);
    w.assign(static_cast<std::size_t>(len), 0);
    for (std::size_t code = 0; code < count; ++code) {
      for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>((code >> (2 * i)) & 3);
      const std::int32_t self = static_cast<std::int32_t>(offset[static_cast<std::size_t>(len)] + code);
      // free cancellation
      for (int i = 0; i + 1 < len; ++i) {
        if (w[static_cast<std::size_t>(i)] != inverse_code(w[static_cast<std::size_t>(i + 1)])) continue;
        target.clear();
        for (int j = 0; j < len; ++j)
          if (j != i && j != i + 1) target.push_back(w[static_cast<std::size_t>(j)]);
        uf.unite(self, encode(target));
      }
      // defining relation
      for (const Rule& rule : rules) {
        const int ll = static_cast<int>(rule.lhs.size());
        if (len < ll) continue;
        const int new_len = len - ll + static_cast<int>(rule.rhs.size());
        if (new_len > cap) continue;
        for (int pos = 0; pos + ll <= len; ++pos) {
          bool match = true;
          for (int j = 0; j < ll && match; ++j)
            match = w[static_cast<std::size_t>(pos + j)] == rule.lhs[static_cast<std::size_t>(j)];
          if (!match) continue;
          target.clear();
          target.insert(target.end(), w.begin(), w.begin() + pos);
          target.insert(target.end(), rule.rhs.begin(), rule.rhs.end());
          target.insert(target.end(), w.begin() + pos + ll, w.end());
          uf.unite(self, encode(target));
        }
      }
    }
  }

  ClosureAgreement result;
  std::unordered_map<std::int32_t, std::string> root_to_nf;
  std::unordered_map<std::string, std::int32_t> nf_to_root;
  std::unordered_map<std::int32_t, std::string> root_to_word;
  std::unordered_map<std::string, std::string> nf_to_word;
  for (int len = 0; len <= word_len; ++len) {
    const std::size_t count = static_cast<std::size_t>(1) << (2 * len);
    for (std::size_t code = 0; code < count; ++code) {
      w.assign(static_cast<std::size_t>(len), 0);
      for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>((code >> (2 * i)) & 3);
      const std::int32_t root = uf.find(static_cast<std::int32_t>(offset[static_cast<std::size_t>(len)] + code));
      const std::string key = nf_key(grp, w);
      ++result.words_checked;
      if (result.failures.size() >= 8) continue;
      if (auto it = root_to_nf.find(root); it != root_to_nf.end()) {
        if (it->second != key)
          result.failures.push_back("closure identifies '" + letters_text(w) + "' with '" +
                                    root_to_word[root] + "' but normal forms differ");
      } else {
        root_to_nf.emplace(root, key);
        root_to_word.emplace(root, letters_text(w));
      }
      if (auto it = nf_to_root.find(key); it != nf_to_root.end()) {
        if (it->second != root)
          result.failures.push_back("normal forms match for '" + letters_text(w) + "' and '" +
                                    nf_to_word[key] + "' but the closure separates them");
      } else {
        nf_to_root.emplace(key, root);
        nf_to_word.emplace(key, letters_text(w));
      }
    }
  }
  return result;
}

}  // namespace artinbd
