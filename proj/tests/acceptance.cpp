// Acceptance suite: one line per criterion, exit status 0 only when every
// criterion passes at its stated parameters.

#include <cstdio>
#include <string>
#include <vector>

#include "artinbd/verify.hpp"

using artinbd::run_suite;
using artinbd::VerifyOptions;
using artinbd::VerifyReport;

namespace {

struct SuiteRun {
  std::string suite;
  VerifyOptions opt;
};

struct Criterion {
  int id;
  std::string description;
  std::vector<SuiteRun> runs;
};

}  // namespace

int main() {
  VerifyOptions defaults;

  std::vector<Criterion> criteria;
  criteria.push_back({1,
                      "well-definedness of rhoB (n=3..6), rhoDv/rhoDg (n=4..6), rhoPlus (n=3..6)",
                      {{"braid-relations", defaults}}});
  criteria.push_back({2,
                      "phi/psi mutually inverse on generators and 500 random elements; "
                      "defining relations map to the identity",
                      {{"phi-psi", defaults}}});
  criteria.push_back({3,
                      "zeta acts as conjugation by u0^-1 and delta^-1; l(zeta) = n(n-1)",
                      {{"zeta-inner", defaults}}});
  criteria.push_back({4,
                      "centres: u0 zeta (B, n=3..5), delta zeta / delta^2 zeta^2 (D, n=4..6), "
                      "delta zeta (free product flavor, n=3..5)",
                      {{"center", defaults}}});
  {
    VerifyOptions opt;
    opt.n = 3;
    opt.len = 8;
    criteria.push_back({5,
                        "exhaustive n=3, len<=8: braid invariance <=> conjugate delta power; "
                        "fixed by all <=> literal delta power",
                        {{"deltakey", opt}}});
  }
  {
    VerifyOptions opt;
    opt.n = 3;
    opt.len = 6;
    criteria.push_back({6,
                        "exhaustive n=3, len<=6: braid invariance <=> conjugate u0 power; "
                        "square-invariant words classify as generator or product powers",
                        {{"dyer-grossman", opt}}});
  }
  {
    VerifyOptions opt;
    opt.n = 4;
    opt.len = 6;
    criteria.push_back({7,
                        "faithfulness evidence at n=4: kernel word sets of rhoB and rhoDg "
                        "coincide over all braid words of length <= 6",
                        {{"faithfulness", opt}}});
  }
  criteria.push_back({8, "x0 is fixed by every generator action, n = 4, 5, 6",
                      {{"x0-fixed", defaults}}});
  criteria.push_back({9, "the double chain twist realizes g_i -> g_i^-1 g1 g3 at n = 4",
                      {{"beta0", defaults}}});
  criteria.push_back({10,
                      "no nontrivial word w(s,t) of length <= 6 has trivial substitution product",
                      {{"lemma-fourth", defaults}}});
  criteria.push_back({11,
                      "rank 2: normal form agrees with the rewriting closure (m=3..6, len<=6); "
                      "eps/tau/eta relations; eta growth; 200 descriptor round trips; "
                      "odd m realizes exactly {id, eps}",
                      {{"rank2-closure", defaults}, {"rank2-out", defaults}}});
  criteria.push_back({12,
                      "eps/tau are involutive homomorphisms on 200 random elements per flavor; "
                      "the graph involution equals x1 conjugation, n = 4..6",
                      {{"special-autos", defaults}}});

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> messages;
    double ms = 0;
    for (const SuiteRun& run : c.runs) {
      const VerifyReport report = run_suite(run.suite, run.opt);
      pass = pass && report.pass();
      checked += report.checked;
      ms += report.wall_ms;
      for (const std::string& f : report.failures)
        messages.push_back(run.suite + ": " + f);
    }
    std::printf("[%s] criterion %2d: %s (%lld checks, %.0f ms)\n", pass ? "PASS" : "FAIL", c.id,
                c.description.c_str(), checked, ms);
    for (const std::string& msg : messages) std::printf("         %s\n", msg.c_str());
    if (!pass) ++failures;
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
