// Runs every verification suite at its default trial counts and prints one
// PASS/FAIL line per acceptance criterion.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "eao/verify.hpp"

namespace {

constexpr std::array<const char*, 12> kTitles{
    "supporting properties",
    "invariance under the group action",
    "quotient dimension n(p+q)",
    "regular semisimple fiber dimension",
    "reconstruction round trip",
    "coregularity count at p = 1 or q = 1",
    "n+1 maximal unstable classes",
    "component and null cone dimensions",
    "classifier and certificates vs sampler",
    "stabilizer formula and largest orbits",
    "SL_n relation D1 D2 = Hankel",
    "Psi symmetry and non-closed image",
};

struct Tally {
  std::size_t configs = 0, cells = 0, passes = 0, hard = 0, failed_configs = 0;
};

}  // namespace

int main(int argc, char** argv) {
  eao::verify::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  std::array<Tally, kTitles.size()> tallies{};
  double wall = 0;
  for (const auto& report : eao::verify::run_all(options)) {
    wall += report.wall_seconds;
    for (const auto& c : report.configs) {
      Tally& t = tallies.at(static_cast<std::size_t>(c.criterion));
      ++t.configs;
      t.cells += c.cells;
      t.passes += c.passes;
      t.hard += c.hard_failures;
      if (!c.ok()) {
        ++t.failed_configs;
        std::printf("  failing config [%s] %s: %zu/%zu passes, %zu hard\n", report.suite.c_str(),
                    c.config.c_str(), c.passes, c.cells, c.hard_failures);
      }
    }
  }

  bool all_ok = true;
  for (std::size_t i = 1; i < kTitles.size(); ++i) {
    const Tally& t = tallies[i];
    const bool ok = t.configs > 0 && t.failed_configs == 0;
    all_ok = all_ok && ok;
    std::printf("criterion %2zu %-40s %s  %zu/%zu cells, %zu configs, %zu hard failures\n", i,
                kTitles[i], ok ? "PASS" : "FAIL", t.passes, t.cells, t.configs, t.hard);
  }
  const Tally& extra = tallies[0];
  const bool extra_ok = extra.failed_configs == 0;
  all_ok = all_ok && extra_ok;
  std::printf("             %-40s %s  %zu/%zu cells, %zu configs\n", kTitles[0],
              extra_ok ? "PASS" : "FAIL", extra.passes, extra.cells, extra.configs);
  std::printf("seed %llu, %.1f s\n", static_cast<unsigned long long>(options.seed), wall);
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
