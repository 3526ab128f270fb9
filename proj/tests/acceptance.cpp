// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <cstdio>
#include <string>
#include <vector>

#include "catkit/suites.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

constexpr std::uint64_t kSeed = 7;

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hankel shape of binary catalecticants", {"hankel-shape"}},
      {2, "transpose identity", {"transpose-identity"}},
      {3, "PS(2) discrimination and classification", {"ps2-discrimination"}},
      {4, "Hilbert stratification T_{2,s}", {"hilbert-stratification"}},
      {5, "dimension formula for V_r", {"dimension-formula"}},
      {6, "corank-1 product slice count", {"step3-identity"}},
      {7, "chordal-variety generators", {"chordal-generators"}},
      {8, "smooth and singular loci of PS(2)", {"singular-loci"}},
      {9, "product-formula tangent vs Jacobian", {"tangent-cross-oracle"}},
      {10, "binary Waring and GAD round trip", {"binary-waring", "binary-gad"}},
      {11, "Eagon-Northcott alternating sum", {"eagon-northcott"}},
  };

  bool all = true;
  bool generators_ok = true;
  double total = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    std::size_t trials = 0;
    std::string first_failure;
    double seconds = 0;
    for (const auto& name : c.suites) {
      const auto rep = catkit::run_suite(name, 0, kSeed);
      trials += rep.trials;
      seconds += rep.wall_seconds;
      if (!rep.passed()) {
        ok = false;
        if (first_failure.empty() && !rep.failures.empty()) {
          const auto& f = rep.failures.front();
          first_failure = name + " trial " + std::to_string(f.trial) + " seed " + std::to_string(f.seed) + ": " + f.detail;
        }
      }
    }
    total += seconds;
    if (c.number >= 7 && c.number <= 9) generators_ok = generators_ok && ok;
    all = all && ok;
    std::printf("%s %2d %s (%zu trials, %.1fs)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), trials, seconds);
    if (!ok) std::printf("       first failure: %s\n", first_failure.c_str());
    std::fflush(stdout);
  }

  // Ideal equality is not decided here. Its stand-in is criteria 7-9 together
  // with an exact export/import round trip of the generator sets.
  const auto rep = catkit::run_suite("export-roundtrip", 0, kSeed);
  total += rep.wall_seconds;
  const bool ok = rep.passed() && generators_ok;
  all = all && ok;
  std::printf("%s 12 ideal-equality stand-in: criteria 7-9 plus generator export round trip (%zu trials, %.1fs)\n",
              ok ? "PASS" : "FAIL", rep.trials, rep.wall_seconds);
  if (!rep.failures.empty()) std::printf("       first failure: %s\n", rep.failures.front().detail.c_str());
  std::printf("total %.1fs\n", total);
  return all ? 0 : 1;
}
