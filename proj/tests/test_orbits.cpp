#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eao/error.hpp"
#include "eao/nullcone.hpp"
#include "eao/orbits.hpp"
#include "eao/random.hpp"
#include "oracles.hpp"

using namespace eao;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("stabilizer of the zero point is everything") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = stabilizer(Point::zero(n, 2, 1));
    CHECK(rep.stab_dim == n * n);
    CHECK(rep.orbit_dim == 0);
  }
}

TEST_CASE("stabilizer of a regular semisimple point with full B and C") {
  const Point w(Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{1, 1}}),
                Matrix::from_rows({{1, 0}, {0, 2}}));
  const auto rep = stabilizer(w);
  CHECK(rep.stab_dim == 0);
  CHECK(rep.orbit_dim == 4);
}

TEST_CASE("stabilizer of diag(1,2) alone is the diagonal torus") {
  const Point w(Matrix(2, 1), Matrix(1, 2), Matrix::from_rows({{1, 0}, {0, 2}}));
  CHECK(stabilizer(w).stab_dim == 2);
}

TEST_CASE("stabilizer of the n = 3, k = 2 family") {
  Sampler rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Point w = stabilizer_witness(3, 2, 2, 2, rng);
    CHECK(stabilizer(w).stab_dim == 1);
  }
}

TEST_CASE("stabilizer kernel elements solve the defining equations") {
  Sampler rng(43, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto p = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto q = static_cast<std::size_t>(rng.uniform(1, 2));
    // Sparse points, often with a nontrivial centralizer.
    const Point w(trial % 3 ? rng.matrix(n, p) : Matrix(n, p), rng.matrix(q, n),
                  trial % 2 ? principal_nilpotent(n) : rng.matrix(n, n));
    const auto rep = stabilizer(w);
    CHECK(rep.stab_dim == oracle::centralizer_dim(w));
    CHECK(rep.stab_dim + rep.orbit_dim == n * n);
    CHECK(rep.kernel_basis.ambient_dim() == n * n);
  }
}

TEST_CASE("stabilizer dimension is constant along an orbit") {
  Sampler rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Point w = stabilizer_witness(4, 2, 2, 3, rng);
    const Point moved = group_action(rng.invertible(4), w);
    CHECK(stabilizer(moved).stab_dim == stabilizer(w).stab_dim);
  }
}

TEST_CASE("is_regular_semisimple") {
  CHECK(is_regular_semisimple(Matrix::from_rows({{1, 0}, {0, 2}})));
  CHECK_FALSE(is_regular_semisimple(Matrix::from_rows({{1, 0}, {0, 1}})));
  CHECK_FALSE(is_regular_semisimple(principal_nilpotent(3)));
  CHECK(is_regular_semisimple(Matrix::from_rows({{0, 1}, {-1, 0}})));
  CHECK(is_regular_semisimple(Matrix::from_rows({{7}})));
}

TEST_CASE("reconstruction example") {
  const std::vector<Rational> t{1, 2};
  const std::vector<Matrix> gamma{Matrix::from_rows({{2}}), Matrix::from_rows({{3}})};
  const auto data = reconstruction_data(t, gamma);
  REQUIRE(data.x.size() == 2);
  CHECK(data.x[0] == Matrix::from_rows({{1}}));
  CHECK(data.x[1] == Matrix::from_rows({{1}}));
  const Point w = reconstruct_fiber_point(t, gamma);
  CHECK(w.a() == Matrix::from_rows({{1, 0}, {0, 2}}));
  const auto v = evaluate_invariants(w);
  CHECK(v.tau == std::vector<Rational>{3, 5});
  CHECK(v.gamma == gamma);
}

TEST_CASE("reconstruction errors") {
  const std::vector<Matrix> gamma(2, Matrix::from_rows({{1}}));
  const std::vector<Rational> repeated{4, 4};
  CHECK(code_of([&] { reconstruction_data(repeated, gamma); }) == ErrorCode::degenerate_spectrum);

  // X_1 = identity has rank two.
  const std::vector<Rational> t{0, 1};
  const std::vector<Matrix> rank_two{Matrix::identity(2) + Matrix::from_rows({{1, 2}, {3, 4}}),
                                     Matrix::from_rows({{1, 2}, {3, 4}})};
  CHECK(code_of([&] { reconstruction_data(t, rank_two); }) ==
        ErrorCode::fiber_condition_violated);

  const std::vector<Matrix> zeros(2, Matrix(1, 1));
  CHECK(reconstruction_data(t, zeros).x[0].is_zero());
  CHECK(code_of([&] { reconstruction_data(t, zeros, true); }) ==
        ErrorCode::fiber_condition_violated);
}

TEST_CASE("rank_one_factors") {
  const Matrix x = Matrix::from_rows({{0, 2, 4}, {0, -1, -2}});
  const auto [c, b] = rank_one_factors(x);
  CHECK(c * b == x);
  CHECK(c == Matrix::from_rows({{2}, {-1}}));
  CHECK(b == Matrix::from_rows({{0, 1, 2}}));
  const auto [c0, b0] = rank_one_factors(Matrix(2, 3));
  CHECK(c0.is_zero());
  CHECK(b0.is_zero());
}

TEST_CASE("reconstruction round trip on random fibers") {
  Sampler rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto p = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto q = static_cast<std::size_t>(rng.uniform(1, 3));
    const Point w(rng.matrix(n, p), rng.matrix(q, n), Matrix::diagonal(rng.distinct(n)));
    const auto v = evaluate_invariants(w);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(w.a()(i, i));
    const Point rebuilt = reconstruct_fiber_point(t, v.gamma);
    CHECK(evaluate_invariants(rebuilt) == v);
    CHECK(same_closed_orbit(rebuilt, w));
  }
}

TEST_CASE("same_closed_orbit") {
  Sampler rng(59);
  const Point w = rng.point(3, 2, 2);
  CHECK(same_closed_orbit(w, group_action(rng.invertible(3), w)));
  const Point other(w.b(), w.c(), w.a() + Matrix::identity(3));
  CHECK_FALSE(same_closed_orbit(w, other));
}
