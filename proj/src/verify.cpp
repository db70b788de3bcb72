#include "artinbd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "artinbd/fixed_conjugacy.hpp"
#include "artinbd/random_words.hpp"
#include "artinbd/rank2.hpp"
#include "artinbd/semidirect.hpp"
#include "artinbd/text.hpp"

namespace artinbd {

namespace {

constexpr std::size_t kMaxFailures = 20;

void fail(VerifyReport& report, const std::string& message) {
  if (report.failures.size() < kMaxFailures) report.failures.push_back(message);
}

void check(VerifyReport& report, bool ok, const std::string& message) {
  ++report.checked;
  if (!ok) fail(report, message);
}

std::vector<int> n_range(const VerifyOptions& opt, int lo, int hi) {
  if (opt.n != 0) return {opt.n};
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<int> m_range(const VerifyOptions& opt) {
  if (opt.m != 0) return {opt.m};
  return {3, 4, 5, 6};
}

// --- suites ---------------------------------------------------------------

void suite_braid_relations(const VerifyOptions& opt, VerifyReport& report) {
  struct Config {
    RepKind kind;
    const char* name;
    int lo, hi;
  };
  const Config configs[] = {{RepKind::RhoB, "rhoB", 3, 6},
                            {RepKind::RhoDv, "rhoDv", 4, 6},
                            {RepKind::RhoDg, "rhoDg", 4, 6},
                            {RepKind::RhoPlus, "rhoPlus", 3, 6}};
  for (const Config& cfg : configs) {
    if (!opt.rep.empty() && opt.rep != cfg.name) continue;
    for (int n : n_range(opt, cfg.lo, cfg.hi)) {
      check(report, verify_braid_relations(Representation::make(cfg.kind, n)),
            std::string(cfg.name) + " n=" + std::to_string(n) + ": braid relations fail");
    }
  }
}

std::vector<GroupFlavor> selected_flavors(const VerifyOptions& opt, bool include_k,
                                          int b_lo, int b_hi, int d_lo, int d_hi,
                                          int k_lo = 3, int k_hi = 5) {
  std::vector<GroupFlavor> out;
  auto want = [&](const char* tag) { return opt.flavor.empty() || opt.flavor == tag; };
  if (want("B"))
    for (int n : n_range(opt, b_lo, b_hi)) out.emplace_back(FlavorTag::ArtinB, n);
  if (want("D"))
    for (int n : n_range(opt, d_lo, d_hi)) out.emplace_back(FlavorTag::ArtinD, n);
  if (include_k && want("K"))
    for (int n : n_range(opt, k_lo, k_hi)) out.emplace_back(FlavorTag::KSemidirect, n);
  return out;
}

std::string flavor_name(const GroupFlavor& flavor) {
  switch (flavor.tag) {
    case FlavorTag::ArtinB: return "B" + std::to_string(flavor.n);
    case FlavorTag::ArtinD: return "D" + std::to_string(flavor.n);
    case FlavorTag::KSemidirect: return "K" + std::to_string(flavor.n);
  }
  return "?";
}

void suite_phi_psi(const VerifyOptions& opt, VerifyReport& report) {
  const int count = opt.count ? opt.count : 500;
  std::mt19937_64 rng(opt.seed);
  for (const GroupFlavor& flavor : selected_flavors(opt, false, 3, 6, 4, 6)) {
    const std::string tag = flavor_name(flavor);
    std::vector<SemidirectElement> images;
    for (int i = 1; i <= flavor.n; ++i) images.push_back(phi_generator(flavor, i));
    check(report, verify_presentation(images, flavor),
          tag + ": defining relations not mapped to the identity");
    for (int i = 1; i <= flavor.n; ++i) {
      const SemidirectElement e = images[static_cast<std::size_t>(i - 1)];
      check(report, sd_equal(phi(psi(e), flavor), e),
            tag + ": psi then phi moves generator " + std::to_string(i));
    }
    for (int t = 0; t < count; ++t) {
      const SemidirectElement e = random_element(rng, flavor, 6);
      check(report, sd_equal(phi(psi(e), flavor), e),
            tag + ": phi(psi(e)) != e for a random element");
    }
  }
}

void suite_zeta_inner(const VerifyOptions& opt, VerifyReport& report) {
  const int count = opt.count ? opt.count : 500;
  const int len = opt.len ? opt.len : 8;
  std::mt19937_64 rng(opt.seed);
  for (int n : n_range(opt, 3, 6)) {
    const std::string tag = "n=" + std::to_string(n);
    const BraidWord z = zeta(n);
    check(report, length_hom(z) == static_cast<long long>(n) * (n - 1),
          tag + ": zeta length is not n(n-1)");
    check(report, perm_image(z).is_identity(), tag + ": zeta is not a pure braid");

    const Representation& rb = cached_representation(RepKind::RhoB, n);
    FreeWord u0;
    for (int i = 1; i <= n; ++i) u0.push(Letter{GenSym{Family::U, i}, 1});
    auto conj_u0 = [&](const FreeWord& w) { return conjugate(invert(u0), w); };
    for (int i = 1; i <= n; ++i) {
      const FreeWord u = rb.fiber_generator(i);
      check(report, rb.apply(z, u) == conj_u0(u), tag + ": zeta != conjugation on u generators");
    }
    const Representation& rp = cached_representation(RepKind::RhoPlus, n);
    const InvolutiveWord delta = delta_word(n);
    auto conj_delta = [&](const InvolutiveWord& w) {
      return k_conjugate_by(k_invert(delta), w);
    };
    for (int i = 1; i <= n; ++i) {
      const InvolutiveWord x = rp.k_generator(i);
      check(report, rp.apply(z, x) == conj_delta(x), tag + ": zeta != conjugation on x letters");
    }
    for (int t = 0; t < count; ++t) {
      const FreeWord w = random_free_word(rng, Family::U, n, len);
      check(report, rb.apply(z, w) == conj_u0(w),
            tag + ": zeta != conjugation by u0^-1 on " + to_text(w));
      const InvolutiveWord kw = random_k_word(rng, n, len);
      check(report, rp.apply(z, kw) == conj_delta(kw),
            tag + ": zeta != conjugation by delta^-1 on " + to_text(kw));
    }
  }
}

void suite_center(const VerifyOptions& opt, VerifyReport& report) {
  for (const GroupFlavor& flavor : selected_flavors(opt, true, 3, 5, 4, 6)) {
    const std::string tag = flavor_name(flavor);
    const SemidirectElement z = center_element(flavor);
    std::vector<SemidirectElement> gens;
    if (flavor.tag == FlavorTag::KSemidirect) {
      for (int i = 1; i <= flavor.n; ++i) {
        InvolutiveWord x(flavor.n);
        x.push(i);
        gens.push_back(SemidirectElement::from_fiber(flavor, x));
      }
      for (int i = 1; i < flavor.n; ++i)
        gens.push_back(section(BraidWord(flavor.n, {BraidLetter{i, 1}}), flavor));
    } else {
      for (int i = 1; i <= flavor.n; ++i) gens.push_back(phi_generator(flavor, i));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      check(report, sd_commutes(z, gens[i]),
            tag + ": centre candidate fails to commute with generator " + std::to_string(i + 1));
    }
  }
}

bool literal_delta_power(const InvolutiveWord& w) {
  const int n = w.n();
  if (w.is_identity()) return true;
  if (w.size() % static_cast<std::size_t>(n) != 0) return false;
  const long long k = static_cast<long long>(w.size() / static_cast<std::size_t>(n));
  const InvolutiveWord delta = delta_word(n);
  return w == k_power(delta, k) || w == k_power(delta, -k);
}

void suite_deltakey(const VerifyOptions& opt, VerifyReport& report) {
  const int n = opt.n ? opt.n : 3;
  const int len = opt.len ? opt.len : 8;
  const Representation& rep = cached_representation(RepKind::RhoPlus, n);
  for_each_k_word(n, len, [&](const InvolutiveWord& w) {
    ++report.checked;
    const bool invariant = braid_invariant(rep, w);
    const bool delta_conj = conj_to_delta_power(w).has_value();
    if (invariant != delta_conj)
      fail(report, "invariance/delta-power mismatch at " + to_text(w));
    const bool fixed = fixed_by_all(rep, w);
    if (fixed != literal_delta_power(w))
      fail(report, "fixed/delta-power mismatch at " + to_text(w));
  });
}

void suite_dyer_grossman(const VerifyOptions& opt, VerifyReport& report) {
  const int n = opt.n ? opt.n : 3;
  const int len = opt.len ? opt.len : 6;
  const Representation& rep = cached_representation(RepKind::RhoB, n);
  for_each_free_word(Family::U, n, len, [&](const FreeWord& w) {
    ++report.checked;
    const bool invariant = braid_invariant(rep, w);
    const bool u0_conj = conj_to_u0_power(w, n).has_value();
    if (invariant != u0_conj)
      fail(report, "invariance/u0-power mismatch at " + to_text(w));
    if (braid_square_invariant(rep, w)) {
      const U0Classification cls = dyer_grossman_classify(w, n);
      if (cls.kind == U0Classification::Kind::Other)
        fail(report, "square-invariant word outside the expected classes: " + to_text(w));
    }
  });
}

void suite_faithfulness(const VerifyOptions& opt, VerifyReport& report) {
  const int n = opt.n ? opt.n : 4;
  const int len = opt.len ? opt.len : 6;
  const Representation& rb = cached_representation(RepKind::RhoB, n);
  const Representation& rd = cached_representation(RepKind::RhoDg, n);
  long long trivial_both = 0;
  for_each_braid_word(n, len, [&](const BraidWord& b) {
    ++report.checked;
    bool triv_b = true;
    for (int j = 1; j <= n && triv_b; ++j) {
      const FreeWord u = rb.fiber_generator(j);
      triv_b = rb.apply(b, u) == u;
    }
    bool triv_d = true;
    for (int j = 1; j <= n - 1 && triv_d; ++j) {
      const FreeWord g = rd.fiber_generator(j);
      triv_d = rd.apply(b, g) == g;
    }
    if (triv_b != triv_d)
      fail(report, "kernel sets differ at braid word " + to_text(b));
    if (triv_b && triv_d) ++trivial_both;
  });
  report.params.emplace_back("trivially_acting_words", std::to_string(trivial_both));
}

void suite_x0_fixed(const VerifyOptions& opt, VerifyReport& report) {
  for (int n : n_range(opt, 4, 6)) {
    const Representation& rep = cached_representation(RepKind::RhoDv, n);
    const FreeWord x0 = x0_word(n);
    check(report, !x0.is_identity(), "n=" + std::to_string(n) + ": x0 is trivial");
    check(report, fixed_by_all(rep, x0),
          "n=" + std::to_string(n) + ": x0 moved by a generator");
  }
}

void suite_beta0(const VerifyOptions& opt, VerifyReport& report) {
  (void)opt;
  const Representation& rep = cached_representation(RepKind::RhoDg, 4);
  const FreeWord delta_g =
      multiply(FreeWord::generator(Family::G, 1), FreeWord::generator(Family::G, 3));
  for (int i = 1; i <= 3; ++i) {
    const FreeWord expected = multiply(FreeWord::generator(Family::G, i, -1), delta_g);
    check(report, rep.apply(beta0(), rep.fiber_generator(i)) == expected,
          "beta0 image of g" + std::to_string(i) + " is not g" + std::to_string(i) +
              "^-1 g1 g3");
  }
  for (int n : {5, 7}) {
    const Representation& rd = cached_representation(RepKind::RhoDg, n);
    const BraidWord b = beta_chain(n);
    for (int i = 1; i <= n - 3; ++i) {
      check(report, rd.apply(b, rd.fiber_generator(i)) == rd.fiber_generator(i + 1),
            "n=" + std::to_string(n) + ": chain braid does not shift g" + std::to_string(i));
    }
    FreeWord x;
    for (int i = 1; i <= n - 2; i += 2) x.push(Letter{GenSym{Family::G, i}, 1});
    check(report, rd.apply(b, x) == x,
          "n=" + std::to_string(n) + ": chain braid moves the odd-index product");
  }
}

void suite_lemma_fourth(const VerifyOptions& opt, VerifyReport& report) {
  const int len = opt.len ? opt.len : 6;
  for_each_free_word(Family::S, 2, len, [&](const FreeWord& coded) {
    FreeWord w;
    for (const Letter& l : coded.letters())
      w.push(Letter{GenSym{l.sym.index == 1 ? Family::S : Family::T, 1}, l.sign});
    ++report.checked;
    const auto [product, trivial] = substitution_product_xy(w);
    if (trivial != w.is_identity())
      fail(report, "substitution product trivial for nontrivial word " + to_text(w));
  });
}

void suite_rank2_closure(const VerifyOptions& opt, VerifyReport& report) {
  const int len = opt.len ? opt.len : 6;
  const int cap = opt.cap ? opt.cap : 10;
  for (int m : m_range(opt)) {
    const Rank2Group grp(m);
    const ClosureAgreement agreement = closure_agreement(grp, len, cap);
    report.checked += agreement.words_checked;
    for (const std::string& msg : agreement.failures)
      fail(report, "m=" + std::to_string(m) + ": " + msg);
  }
}

FreeWord canonical_witness(const Rank2Group& grp, const FreeWord& ab_word) {
  return residue_lift(grp, normal_form(grp, ab_word).residue);
}

void suite_rank2_out(const VerifyOptions& opt, VerifyReport& report) {
  const int count = opt.count ? opt.count : 200;
  std::mt19937_64 rng(opt.seed);
  for (int m : m_range(opt)) {
    const Rank2Group grp(m);
    const std::string tag = "m=" + std::to_string(m);
    const FreeWord alpha = FreeWord::generator(Family::A, 1);
    const FreeWord beta = FreeWord::generator(Family::B, 1);
    auto eq_std = [&](const FreeWord& w1, const FreeWord& w2) {
      return nf_equal(grp, std_to_ab(grp, w1), std_to_ab(grp, w2));
    };
    auto apply = [&](SpecialAuto which, const FreeWord& w) {
      return special_auto_apply(grp, which, w, Rank2Coords::Std);
    };

    for (const FreeWord& g : {alpha, beta}) {
      check(report, eq_std(apply(SpecialAuto::Eps, apply(SpecialAuto::Eps, g)), g),
            tag + ": eps is not an involution");
      check(report, eq_std(apply(SpecialAuto::Tau, apply(SpecialAuto::Tau, g)), g),
            tag + ": tau is not an involution");
      check(report,
            eq_std(apply(SpecialAuto::Eps, apply(SpecialAuto::Tau, g)),
                   apply(SpecialAuto::Tau, apply(SpecialAuto::Eps, g))),
            tag + ": eps and tau fail to commute");
      if (grp.odd()) {
        check(report, eq_std(apply(SpecialAuto::Tau, g), apply(SpecialAuto::DeltaConj, g)),
              tag + ": tau differs from conjugation by the half twist");
      } else {
        check(report, eq_std(apply(SpecialAuto::EtaInv, apply(SpecialAuto::Eta, g)), g),
              tag + ": eta inverse fails");
        check(report,
              eq_std(apply(SpecialAuto::Tau, apply(SpecialAuto::Eta, apply(SpecialAuto::Tau, g))),
                     apply(SpecialAuto::EtaInv, g)),
              tag + ": tau eta tau != eta^-1");
        check(report,
              eq_std(apply(SpecialAuto::Eps, apply(SpecialAuto::Eta, g)),
                     apply(SpecialAuto::Eta, apply(SpecialAuto::Eps, g))),
              tag + ": eps and eta fail to commute");
      }
    }

    // relation preservation: the two sides of the defining relation stay equal
    FreeWord lhs, rhs;
    for (int i = 0; i < m; ++i) {
      lhs.push(Letter{GenSym{i % 2 == 0 ? Family::A : Family::B, 1}, 1});
      rhs.push(Letter{GenSym{i % 2 == 0 ? Family::B : Family::A, 1}, 1});
    }
    for (SpecialAuto which : {SpecialAuto::Eps, SpecialAuto::Tau, SpecialAuto::Eta}) {
      if (which == SpecialAuto::Eta && grp.odd()) continue;
      check(report, eq_std(apply(which, lhs), apply(which, rhs)),
            tag + ": automorphism breaks the defining relation");
    }

    if (m == 4) {
      FreeWord w = FreeWord::generator(Family::B, 1);
      long long prev = nf_length(grp, normal_form(grp, w));
      bool growing = true;
      for (int t = 1; t <= 10; ++t) {
        w = special_auto_apply(grp, SpecialAuto::Eta, w, Rank2Coords::AB);
        const long long cur = nf_length(grp, normal_form(grp, w));
        growing = growing && cur > prev;
        prev = cur;
      }
      check(report, growing, tag + ": eta iterates of b do not grow");
    }

    // descriptor round trips
    std::set<std::pair<int, std::pair<int, long long>>> outer_seen;
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<long long> eta_dist(-5, 5);
    for (int t = 0; t < count; ++t) {
      AutoDescriptor d;
      // make sure both outer classes of the odd case appear
      d.e_eps = t == 0 ? 0 : t == 1 ? 1 : bit(rng);
      if (!grp.odd()) {
        d.e_tau = bit(rng);
        d.e_eta = eta_dist(rng);
      }
      FreeWord w;
      std::uniform_int_distribution<int> len_dist(0, 6);
      std::uniform_int_distribution<int> fam(0, 1);
      const int len = len_dist(rng);
      for (int i = 0; i < len; ++i)
        w.push(Letter{GenSym{fam(rng) == 0 ? Family::A : Family::B, 1},
                      bit(rng) == 0 ? 1 : -1});
      d.inner_witness = canonical_witness(grp, w);
      ++report.checked;
      try {
        const auto [a_img, b_img] = build_auto(grp, d);
        const AutoDescriptor back = classify_auto(grp, a_img, b_img);
        outer_seen.insert({back.e_eps, {back.e_tau, back.e_eta}});
        if (!(back.e_eps == d.e_eps && back.e_tau == d.e_tau && back.e_eta == d.e_eta &&
              back.inner_witness == d.inner_witness))
          fail(report, tag + ": descriptor round trip changed the automorphism class");
      } catch (const Rank2ClassifyError& err) {
        fail(report, tag + ": classification failed on a built automorphism: " + err.what());
      }
    }
    if (grp.odd()) {
      std::set<std::pair<int, std::pair<int, long long>>> expected = {{0, {0, 0}}, {1, {0, 0}}};
      check(report, outer_seen == expected,
            tag + ": realized outer classes differ from {id, eps}");
    }
  }
}

SemidirectElement tau_via_free_product(const SemidirectElement& e) {
  const GroupFlavor k_flavor(FlavorTag::KSemidirect, e.flavor().n);
  const SemidirectElement lifted(k_flavor, embed_g(e.fiber(), e.flavor().n), e.braid());
  InvolutiveWord x1(e.flavor().n);
  x1.push(1);
  const SemidirectElement conj =
      sd_conjugate(SemidirectElement::from_fiber(k_flavor, x1), lifted);
  const auto g_word = express_in_g(conj.k_fiber());
  if (!g_word.has_value()) throw std::logic_error("conjugate left the even-parity subgroup");
  return SemidirectElement(e.flavor(), *g_word, conj.braid());
}

void suite_special_autos(const VerifyOptions& opt, VerifyReport& report) {
  const int count = opt.count ? opt.count : 200;
  std::mt19937_64 rng(opt.seed);
  for (const GroupFlavor& flavor : selected_flavors(opt, true, 3, 4, 4, 5, 3, 4)) {
    const std::string tag = flavor_name(flavor);
    const bool has_tau = flavor.tag != FlavorTag::ArtinB;
    for (int t = 0; t < count; ++t) {
      const SemidirectElement e1 = random_element(rng, flavor, 5);
      const SemidirectElement e2 = random_element(rng, flavor, 5);
      ++report.checked;
      if (!sd_equal(eps_auto(sd_multiply(e1, e2)), sd_multiply(eps_auto(e1), eps_auto(e2))))
        fail(report, tag + ": eps is not a homomorphism");
      if (!sd_equal(eps_auto(eps_auto(e1)), e1))
        fail(report, tag + ": eps is not an involution");
      if (has_tau) {
        if (!sd_equal(tau_auto(sd_multiply(e1, e2)), sd_multiply(tau_auto(e1), tau_auto(e2))))
          fail(report, tag + ": tau is not a homomorphism");
        if (!sd_equal(tau_auto(tau_auto(e1)), e1))
          fail(report, tag + ": tau is not an involution");
      }
    }
  }
  // the graph involution agrees with conjugation by x_1 in the larger group
  for (int n : n_range(opt, 4, 6)) {
    const GroupFlavor flavor(FlavorTag::ArtinD, n);
    for (int i = 1; i <= n; ++i) {
      const SemidirectElement gen = phi_generator(flavor, i);
      check(report, sd_equal(tau_auto(gen), tau_via_free_product(gen)),
            "D" + std::to_string(n) + ": graph involution differs from x1 conjugation on d" +
                std::to_string(i));
    }
  }
}

using SuiteFn = void (*)(const VerifyOptions&, VerifyReport&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"braid-relations", suite_braid_relations},
    {"phi-psi", suite_phi_psi},
    {"zeta-inner", suite_zeta_inner},
    {"center", suite_center},
    {"deltakey", suite_deltakey},
    {"dyer-grossman", suite_dyer_grossman},
    {"faithfulness", suite_faithfulness},
    {"x0-fixed", suite_x0_fixed},
    {"beta0", suite_beta0},
    {"lemma-fourth", suite_lemma_fourth},
    {"rank2-closure", suite_rank2_closure},
    {"rank2-out", suite_rank2_out},
    {"special-autos", suite_special_autos},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const SuiteEntry& s : kSuites)
    if (name == s.name) return true;
  return false;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const SuiteEntry& s : kSuites) {
    if (name != s.name) continue;
    VerifyReport report;
    report.suite = name;
    if (opt.n) report.params.emplace_back("n", std::to_string(opt.n));
    if (opt.m) report.params.emplace_back("m", std::to_string(opt.m));
    if (opt.len) report.params.emplace_back("len", std::to_string(opt.len));
    if (opt.count) report.params.emplace_back("count", std::to_string(opt.count));
    if (!opt.rep.empty()) report.params.emplace_back("rep", opt.rep);
    if (!opt.flavor.empty()) report.params.emplace_back("flavor", opt.flavor);
    const auto start = std::chrono::steady_clock::now();
    s.fn(opt, report);
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace artinbd
