#include "eao/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "eao/error.hpp"
#include "eao/invariants.hpp"
#include "eao/linalg.hpp"
#include "eao/nullcone.hpp"
#include "eao/orbits.hpp"
#include "eao/random.hpp"

namespace eao::verify {

bool ConfigTally::ok() const {
  if (hard_failures != 0) return false;
  const auto needed =
      static_cast<std::size_t>(std::ceil(required_fraction * static_cast<double>(cells) - 1e-9));
  return passes >= needed;
}

bool VerifyReport::ok() const {
  return std::all_of(configs.begin(), configs.end(), [](const ConfigTally& c) { return c.ok(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "invariance", "jacobian",     "stabilizer",  "nullcone", "classifier",
      "certificates", "reconstruction", "sl-relation", "psi"};
  return names;
}

std::size_t default_trials(std::string_view suite) {
  if (suite == "invariance" || suite == "jacobian" || suite == "reconstruction") return 200;
  if (suite == "classifier" || suite == "certificates") return 1000;
  if (suite == "sl-relation") return 100;
  if (suite == "nullcone") return 20;
  if (suite == "stabilizer") return 5;
  if (suite == "psi") return 20;
  throw Error(ErrorCode::invalid_argument, "unknown suite: " + std::string(suite));
}

std::uint64_t cell_seed(std::uint64_t seed, std::string_view config, std::size_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : config) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer over the combined state.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1) + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Outcome {
  bool pass = false;
  bool hard = false;
  std::string detail;
};

Outcome pass() { return {true, false, {}}; }
Outcome soft_fail(std::string detail) { return {false, false, std::move(detail)}; }
Outcome hard_fail(std::string detail) { return {false, true, std::move(detail)}; }
Outcome check(bool ok, std::string detail) { return ok ? pass() : hard_fail(std::move(detail)); }

std::string label(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

class Runner {
 public:
  Runner(std::string suite, const VerifyOptions& options)
      : options_(options), trials_(options.trials ? options.trials : default_trials(suite)) {
    report_.suite = std::move(suite);
    report_.seed = options.seed;
    report_.trials = trials_;
  }

  std::size_t trials() const { return trials_; }

  bool selected(std::optional<std::size_t> n, std::optional<std::size_t> p = {},
                std::optional<std::size_t> q = {}, std::optional<std::size_t> k = {}) const {
    auto match = [](const std::optional<std::size_t>& want, const std::optional<std::size_t>& have) {
      return !want || !have || *want == *have;
    };
    return match(options_.n, n) && match(options_.p, p) && match(options_.q, q) &&
           match(options_.k, k);
  }

  void run(const std::string& config, int criterion, double fraction, std::size_t count,
           const std::function<Outcome(std::uint64_t, std::size_t)>& cell) {
    ConfigTally tally{config, criterion, 0, 0, 0, fraction};
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t seed = cell_seed(options_.seed, config, i);
      Outcome outcome;
      try {
        outcome = cell(seed, i);
      } catch (const std::exception& e) {
        outcome = hard_fail(std::string("exception: ") + e.what());
      }
      ++tally.cells;
      if (outcome.pass) {
        ++tally.passes;
      } else {
        if (outcome.hard) ++tally.hard_failures;
        report_.failure_log.push_back({config, i, seed, outcome.hard, outcome.detail});
      }
    }
    report_.cells += tally.cells;
    report_.passes += tally.passes;
    report_.failures += tally.cells - tally.passes;
    report_.configs.push_back(std::move(tally));
  }

  VerifyReport finish(std::chrono::steady_clock::time_point start) {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(report_);
  }

 private:
  VerifyOptions options_;
  std::size_t trials_;
  VerifyReport report_;
};

// Word length used by the invariance suite: 2n - 1 for one adjoint matrix,
// n + 1 for two.
std::size_t invariance_word_length(std::size_t n, std::size_t r) {
  return r == 1 ? 2 * n - 1 : n + 1;
}

void suite_invariance(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q)
        for (std::size_t r = 1; r <= 2; ++r) {
          if (!run.selected(n, p, q)) continue;
          run.run(label({{"n", n}, {"p", p}, {"q", q}, {"r", r}}), 1, 1.0, run.trials(),
                  [=](std::uint64_t seed, std::size_t) {
                    Sampler rng(seed);
                    const Point w = rng.point(n, p, q, r);
                    const Point moved = group_action(rng.invertible(n), w);
                    if (r == 1 && evaluate_invariants(w) != evaluate_invariants(moved))
                      return hard_fail("evaluate_invariants changed under the action");
                    const std::size_t len = invariance_word_length(n, r);
                    return check(word_invariants(w, len) == word_invariants(moved, len),
                                 "word invariants changed under the action");
                  });
        }
}

// Entry height for generic samples.
constexpr long kGenericHeight = 1000;

void suite_jacobian(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q) {
        if (!run.selected(n, p, q)) continue;
        const std::size_t expected = n * (p + q);
        const std::size_t bound = std::min(tangent_dim(n, p, q), invariant_dim(n, p, q));
        std::size_t full_rank_hits = 0;
        run.run(label({{"n", n}, {"p", p}, {"q", q}}), 2, 0.95, run.trials(),
                [&, n, p, q](std::uint64_t seed, std::size_t) {
                  Sampler rng(seed, kGenericHeight);
                  const std::size_t rk = jacobian_rank(rng.point(n, p, q));
                  if (rk == invariant_dim(n, p, q)) ++full_rank_hits;
                  if (rk > bound)
                    return hard_fail("rank " + std::to_string(rk) + " exceeds bound " +
                                     std::to_string(bound));
                  if (rk != expected)
                    return soft_fail("non-generic rank " + std::to_string(rk));
                  return pass();
                });
        if (p == 1 || q == 1) {
          run.run(label({{"coregular n", n}, {"p", p}, {"q", q}}), 5, 1.0, 1,
                  [&, n, p, q](std::uint64_t, std::size_t) {
                    if (expected != invariant_dim(n, p, q))
                      return hard_fail("n(p+q) differs from n + npq");
                    return check(full_rank_hits > 0,
                                 "no sample reached a surjective differential");
                  });
        }
      }
}

void suite_reconstruction(Runner& run) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q) {
        if (!run.selected(n, p, q)) continue;
        // Forward data computed directly from its definition.
        auto make_gamma = [](const std::vector<Rational>& t, const std::vector<Matrix>& x) {
          std::vector<Matrix> gamma;
          for (std::size_t k = 0; k < t.size(); ++k) {
            Matrix acc(x[0].rows(), x[0].cols());
            for (std::size_t r = 0; r < t.size(); ++r) {
              Rational tk = 1;
              for (std::size_t e = 0; e < k; ++e) tk *= t[r];
              acc = acc + tk * x[r];
            }
            gamma.push_back(std::move(acc));
          }
          return gamma;
        };
        auto power_sums_of = [](const std::vector<Rational>& t) {
          std::vector<Rational> out;
          for (std::size_t k = 1; k <= t.size(); ++k) {
            Rational s = 0;
            for (const auto& x : t) {
              Rational pw = 1;
              for (std::size_t e = 0; e < k; ++e) pw *= x;
              s += pw;
            }
            out.push_back(s);
          }
          return out;
        };
        run.run(label({{"roundtrip n", n}, {"p", p}, {"q", q}}), 4, 1.0, run.trials(),
                [=](std::uint64_t seed, std::size_t) {
                  Sampler rng(seed);
                  const auto t = rng.distinct(n);
                  std::vector<Matrix> x;
                  for (std::size_t r = 0; r < n; ++r)
                    x.push_back(rng.uniform(0, 9) == 0 ? Matrix(q, p) : rng.rank_one(q, p));
                  const auto gamma = make_gamma(t, x);
                  const Point w = reconstruct_fiber_point(t, gamma);
                  const InvariantVector expected{power_sums_of(t), gamma};
                  if (evaluate_invariants(w) != expected)
                    return hard_fail("reconstructed point has different invariants");
                  const Point moved = group_action(rng.invertible(n), w);
                  return check(same_closed_orbit(w, moved), "orbit comparison failed");
                });
        if (n > 4) continue;
        run.run(label({{"fiber n", n}, {"p", p}, {"q", q}}), 3, 1.0, run.trials(),
                [=](std::uint64_t seed, std::size_t) {
                  Sampler rng(seed);
                  const auto t = rng.distinct(n);
                  std::vector<Matrix> x;
                  for (std::size_t r = 0; r < n; ++r) x.push_back(rng.rank_one(q, p));
                  const Point w = reconstruct_fiber_point(t, make_gamma(t, x), true);
                  if (!is_regular_semisimple(w.a())) return hard_fail("A not regular semisimple");
                  const auto stab = stabilizer(w);
                  if (stab.stab_dim != 0)
                    return hard_fail("stab_dim " + std::to_string(stab.stab_dim));
                  const std::size_t fiber = tangent_dim(n, p, q) - jacobian_rank(w);
                  return check(fiber == n * n && stab.orbit_dim == n * n,
                               "fiber dimension " + std::to_string(fiber));
                });
      }
}

void suite_stabilizer(Runner& run) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
          if (!run.selected(n, p, q, k)) continue;
          if (k >= 1 && 2 * k >= n) {
            run.run(label({{"family n", n}, {"k", k}, {"p", p}, {"q", q}}), 9, 1.0, run.trials(),
                    [=](std::uint64_t seed, std::size_t) {
                      Sampler rng(seed);
                      const auto report = stabilizer(stabilizer_witness(n, p, q, k, rng));
                      return check(report.stab_dim == n - k,
                                   "stab_dim " + std::to_string(report.stab_dim));
                    });
          }
          run.run(label({{"witness n", n}, {"k", k}, {"p", p}, {"q", q}}), 9, 1.0, run.trials(),
                  [=](std::uint64_t seed, std::size_t) {
                    const auto witness = generic_orbit_witness(n, p, q, k, seed);
                    const std::size_t expected = n * n - std::min(k, n - k);
                    return check(witness.orbit_dim == expected,
                                 "orbit_dim " + std::to_string(witness.orbit_dim));
                  });
        }
}

bool nilpotent_with_vanishing_moments(const Point& w) {
  const std::size_t n = w.n();
  Polynomial xn{std::vector<Rational>(n + 1)};
  xn.coeffs[0] = 1;
  if (char_poly(w.a()) != xn) return false;
  Matrix ab = w.b();
  for (std::size_t j = 0; j < n; ++j) {
    if (!(w.c() * ab).is_zero()) return false;
    ab = w.a() * ab;
  }
  return true;
}

void suite_nullcone(Runner& run) {
  for (std::size_t n = 1; n <= 5; ++n) {
    if (!run.selected(n)) continue;
    run.run(label({{"maximal-unstable n", n}}), 6, 1.0, 1, [=](std::uint64_t, std::size_t) {
      const auto classes = enumerate_maximal_unstable(n, 1, 1, static_cast<long>(n));
      if (classes.size() != n + 1)
        return hard_fail(std::to_string(classes.size()) + " classes");
      for (std::size_t k = 0; k <= n; ++k)
        if (classes[k].k != static_cast<int>(k)) return hard_fail("class does not match X_k");
      const auto wider = enumerate_maximal_unstable(n, 2, 3, static_cast<long>(2 * n));
      if (wider.size() != classes.size()) return hard_fail("result changed with a wider box");
      for (std::size_t k = 0; k <= n; ++k)
        if (wider[k].weights != classes[k].weights) return hard_fail("wider box differs");
      return pass();
    });
  }
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q)
        for (std::size_t k = 0; k <= n; ++k) {
          if (!run.selected(n, p, q, k)) continue;
          const std::size_t formula = component_dim_formula(n, p, q, k);
          run.run(label({{"tangent n", n}, {"p", p}, {"q", q}, {"k", k}}), 7, 0.95, run.trials(),
                  [=](std::uint64_t seed, std::size_t) {
                    const std::size_t d = component_tangent_dim(n, p, q, k, seed);
                    if (d > formula) return hard_fail("dimension " + std::to_string(d) + " exceeds formula");
                    if (d != formula) return soft_fail("non-generic dimension " + std::to_string(d));
                    return pass();
                  });
        }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q) {
        if (!run.selected(n, p, q)) continue;
        run.run(label({{"summary n", n}, {"p", p}, {"q", q}}), 7, 1.0, 1,
                [=](std::uint64_t, std::size_t) {
                  const auto s = nullcone_summary(n, p, q);
                  if (s.component_dims.size() != n + 1) return hard_fail("component count");
                  if (s.nullcone_dim != n * n - n + n * std::max(p, q)) return hard_fail("max dimension");
                  if (s.equidimensional != (p == q)) return hard_fail("equidimensionality");
                  return check((s.nullcone_dim == n * n) == (p == 1 && q == 1),
                               "dimension n^2 criterion");
                });
      }
  // Membership by invariants agrees with nilpotency plus vanishing moments.
  // Even cells are component samples.
  for (std::size_t n = 1; n <= 4; ++n) {
    if (!run.selected(n)) continue;
    run.run(label({{"membership n", n}}), 0, 1.0, 125, [=](std::uint64_t seed, std::size_t i) {
      Sampler rng(seed);
      const std::size_t p = static_cast<std::size_t>(rng.uniform(1, 3));
      const std::size_t q = static_cast<std::size_t>(rng.uniform(1, 3));
      Point w;
      if (i % 2 == 0) {
        w = sample_component(n, p, q, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n))), seed);
      } else if (i % 4 == 1) {
        w = rng.point(n, p, q);
      } else {
        // Nilpotent A with generic B, C: null only when the moments vanish.
        const Point u = sample_u_k(n, p, q, 0, rng);
        w = group_action(rng.invertible(n), Point(rng.matrix(n, p), rng.matrix(q, n), u.a()));
      }
      const bool a = in_null_cone(w);
      if (a != nilpotent_with_vanishing_moments(w)) return hard_fail("membership tests disagree");
      return check(i % 2 != 0 || a, "component sample outside the null cone");
    });
  }
}

void suite_classifier(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q)
        for (std::size_t k = 0; k <= n; ++k) {
          if (!run.selected(n, p, q, k)) continue;
          run.run(label({{"n", n}, {"p", p}, {"q", q}, {"k", k}}), 8, 1.0, run.trials(),
                  [=](std::uint64_t seed, std::size_t) {
                    const Point w = sample_component(n, p, q, k, seed);
                    if (k == 0 && !w.b().is_zero()) return hard_fail("k = 0 sample has B != 0");
                    if (k == n && !w.c().is_zero()) return hard_fail("k = n sample has C != 0");
                    const auto interval = component_interval(w);
                    if (!interval.in_null_cone) return hard_fail("sample not in null cone");
                    return check(interval.contains(k),
                                 "k outside [" + std::to_string(interval.d_min) + ", " +
                                     std::to_string(interval.d_max) + "]");
                  });
        }
}

void suite_certificates(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q)
        for (std::size_t k = 0; k <= n; ++k) {
          if (!run.selected(n, p, q, k)) continue;
          run.run(label({{"n", n}, {"p", p}, {"q", q}, {"k", k}}), 8, 1.0, run.trials(),
                  [=](std::uint64_t seed, std::size_t) {
                    const Point w = sample_component(n, p, q, k, seed);
                    const auto interval = component_interval(w);
                    for (std::size_t kk = 0; kk <= n; ++kk) {
                      if (interval.contains(kk)) {
                        const auto cert = adapted_certificate(w, kk);
                        if (!certificate_valid(w, cert))
                          return hard_fail("invalid certificate for k = " + std::to_string(kk));
                      } else {
                        try {
                          adapted_certificate(w, kk);
                          return hard_fail("certificate issued outside the interval");
                        } catch (const Error& e) {
                          if (e.code() != ErrorCode::not_a_member)
                            return hard_fail("wrong error code outside the interval");
                        }
                      }
                    }
                    return pass();
                  });
        }
}

void suite_sl_relation(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n) {
    if (!run.selected(n)) continue;
    run.run(label({{"n", n}}), 10, 1.0, run.trials(), [=](std::uint64_t seed, std::size_t) {
      Sampler rng(seed);
      const Matrix u = rng.matrix(n, 1);
      const Matrix v = rng.matrix(1, n);
      const Matrix a = rng.matrix(n, n);
      return check(sl_relation_check(u, v, a).holds, "D1 D2 differs from the Hankel determinant");
    });
  }
}

void suite_psi(Runner& run) {
  for (std::size_t n = 1; n <= 4; ++n) {
    if (!run.selected(n)) continue;
    run.run(label({{"permutation n", n}}), 11, 1.0, run.trials(),
            [=](std::uint64_t seed, std::size_t) {
              Sampler rng(seed);
              const auto p = static_cast<std::size_t>(rng.uniform(1, 3));
              const auto q = static_cast<std::size_t>(rng.uniform(1, 3));
              std::vector<Rational> t;
              std::vector<Matrix> x;
              for (std::size_t i = 0; i < n; ++i) {
                t.emplace_back(rng.integer());
                x.push_back(rng.uniform(0, 4) == 0 ? Matrix(q, p) : rng.rank_one(q, p));
              }
              const auto base = psi_map(t, x);
              std::vector<std::size_t> perm(n);
              std::iota(perm.begin(), perm.end(), 0);
              do {
                std::vector<Rational> tp;
                std::vector<Matrix> xp;
                for (auto i : perm) {
                  tp.push_back(t[i]);
                  xp.push_back(x[i]);
                }
                if (psi_map(tp, xp) != base) return hard_fail("psi not permutation invariant");
              } while (std::next_permutation(perm.begin(), perm.end()));
              return pass();
            });
    run.run(label({{"nonclosed n", n}}), 11, 1.0, run.trials(),
            [=](std::uint64_t seed, std::size_t) {
              Sampler rng(seed);
              const auto p = static_cast<std::size_t>(rng.uniform(1, 3));
              const auto q = static_cast<std::size_t>(rng.uniform(1, 3));
              const Matrix u = rng.rank_one(q, p);
              Rational previous = -1;
              for (long denom : {10L, 20L, 40L}) {
                const auto demo = nonclosed_image_demo(n, u, Rational(1, denom));
                if (!demo.limit_absent) return hard_fail("limit point not certified absent");
                if (sgn(demo.gap) <= 0) return hard_fail("image point coincides with the limit");
                if (previous >= 0 && !(demo.gap < previous))
                  return hard_fail("gap did not decrease");
                previous = demo.gap;
              }
              return pass();
            });
  }
}

}  // namespace

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::invalid_argument, "unknown suite: " + std::string(suite));
  const auto start = std::chrono::steady_clock::now();
  Runner run(std::string(suite), options);
  if (suite == "invariance") suite_invariance(run);
  else if (suite == "jacobian") suite_jacobian(run);
  else if (suite == "reconstruction") suite_reconstruction(run);
  else if (suite == "stabilizer") suite_stabilizer(run);
  else if (suite == "nullcone") suite_nullcone(run);
  else if (suite == "classifier") suite_classifier(run);
  else if (suite == "certificates") suite_certificates(run);
  else if (suite == "sl-relation") suite_sl_relation(run);
  else if (suite == "psi") suite_psi(run);
  return run.finish(start);
}

std::vector<VerifyReport> run_all(const VerifyOptions& options) {
  std::vector<VerifyReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  return out;
}

}  // namespace eao::verify
