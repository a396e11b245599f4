// Acceptance suite: runs every exit criterion at its stated order, case
// count, tolerance, and wall-time budget, printing one line per criterion.
// Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ncprob/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  std::vector<std::pair<std::string, ncprob::VerifyOptions>> runs;
};

ncprob::VerifyOptions opts(int order, int cases, std::uint64_t seed = 20240811) {
  ncprob::VerifyOptions o;
  o.order = order;
  o.cases = cases;
  o.seed = seed;
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  std::vector<Criterion> criteria = {
      {1, "eta-diagonality equals the moment conditions, both directions (N=8, 25 pairs)", 30.0,
       {{"thm-2.8", opts(8, 25)}}},
      {2, "product eta-series read off the determining sequences (n<=4, 25 pairs)", 5.0,
       {{"prop-2.12", opts(8, 25)}}},
      {3, "moment/eta/R conversions agree with the partition sums (words up to length 8)", 60.0,
       {{"eq-2.3", opts(8, 3)}, {"eq-3.2", opts(8, 2)}}},
      {4, "product R-transforms: partition sums vs composition, listed coefficients (n<=5)", 30.0,
       {{"eq-3.4a", opts(5, 30)}, {"prop-3.6", opts(5, 20)}}},
      {5, "KMS pairs: vanishing defects and the converse (orders up to 8)", 60.0,
       {{"prop-3.7", opts(8, 10)}, {"rem-3.8", opts(8, 10)}}},
      {6, "change of variables intertwines M, R, eta and free convolution (N=5)", 10.0,
       {{"lem-4.8", opts(5, 5)}, {"lem-4.9", opts(5, 5)}}},
      {7, "operator model reproduces the parametrized law within 1e-10 (510 words, 10 pairs)",
       60.0,
       {{"thm-5.2", opts(8, 10)}}},
      {8, "free Poisson image and the lambda-circular example, lambda in {1/2, 1, 3}", 10.0,
       {{"eq-6.4a", opts(6, 1)}, {"ex-6.8", opts(5, 1)}}},
      {9, "product R-transform compositions and the KMS measure formulas (N=6)", 60.0,
       {{"thm-6.2", opts(6, 10)}, {"prop-6.6", opts(6, 5)}}},
      {10, "three routes to the product determining pair agree (n<=5, 30 pairs)", 120.0,
       {{"eq-7.1a-vs-7.2a", opts(5, 30)}, {"cor-7.3", opts(5, 10)}, {"rem-7.10", opts(5, 10)}}},
      {11, "products of divisible R-diagonal laws stay divisible (N=6, 10 pairs)", 60.0,
       {{"thm-7.8", opts(6, 10)}}},
      {12, "lambda-circular power ladder: recursion vs measure products, k<=4", 120.0,
       {{"prop-7.13", opts(6, 1)}, {"eq-6.4b", opts(6, 10)}}},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = clock::now();
    std::vector<std::string> failures;
    for (const auto& [id, o] : c.runs) {
      ncprob::VerifyReport rep = ncprob::run_verify(id, o);
      for (const auto& f : rep.failures) failures.push_back(id + ": " + f);
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool ok = failures.empty() && secs < c.budget_seconds;
    std::printf("[%s] criterion %2d: %s (%.1fs of %.0fs budget)\n", ok ? "PASS" : "FAIL",
                c.number, c.description.c_str(), secs, c.budget_seconds);
    if (secs >= c.budget_seconds) {
      std::printf("       time budget exceeded\n");
    }
    for (const auto& f : failures) std::printf("       %s\n", f.c_str());
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::printf("all 12 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failed);
  }
  return failed == 0 ? 0 : 1;
}
