#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eao::verify {

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Trials per parameter configuration; 0 selects the suite default.
  std::size_t trials = 0;
  /// Restrict the parameter grid.
  std::optional<std::size_t> n, p, q, k;
};

/// Outcome tally for one parameter configuration of a suite.
struct ConfigTally {
  std::string config;
  /// Acceptance criterion this configuration feeds (0: supporting property).
  int criterion = 0;
  std::size_t cells = 0;
  std::size_t passes = 0;
  /// Violations that fail the suite regardless of any genericity threshold.
  std::size_t hard_failures = 0;
  /// Required passes / cells; 1 for exact identities.
  double required_fraction = 1.0;

  bool ok() const;
};

struct CellFailure {
  std::string config;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool hard = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t cells = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::vector<ConfigTally> configs;
  std::vector<CellFailure> failure_log;
  double wall_seconds = 0;

  bool ok() const;
};

/// invariance, jacobian, stabilizer, nullcone, classifier, certificates,
/// reconstruction, sl-relation, psi (and "all").
const std::vector<std::string>& suite_names();

std::size_t default_trials(std::string_view suite);

/// Runs one named suite. Throws Error(invalid_argument) for an unknown name.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

/// Every suite in order, at its default or the given trial count.
std::vector<VerifyReport> run_all(const VerifyOptions& options);

/// Deterministic per-cell seed.
std::uint64_t cell_seed(std::uint64_t seed, std::string_view config, std::size_t index);

}  // namespace eao::verify
