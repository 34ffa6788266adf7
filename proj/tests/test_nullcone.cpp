#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eao/error.hpp"
#include "eao/nullcone.hpp"
#include "eao/orbits.hpp"
#include "eao/random.hpp"

using namespace eao;

namespace {

std::size_t total_multiplicity(const std::vector<Weight>& ws) {
  std::size_t total = 0;
  for (const auto& w : ws) total += w.multiplicity;
  return total;
}

Point nilpotent_pair() {
  return Point(Matrix::from_rows({{1}, {0}}), Matrix::from_rows({{0, 1}}),
               Matrix::from_rows({{0, 1}, {0, 0}}));
}

}  // namespace

TEST_CASE("weights of W") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q)
        CHECK(total_multiplicity(weights_of_W(n, p, q)) == n * n + n * p + n * q);

  const auto ws = weights_of_W(2, 3, 1);
  const Weight zero{{0, 0}, 2};
  const Weight e1{{1, 0}, 3};
  const Weight minus_e2{{0, -1}, 1};
  const Weight root{{1, -1}, 1};
  for (const Weight& w : {zero, e1, minus_e2, root})
    CHECK(std::find(ws.begin(), ws.end(), w) != ws.end());
  CHECK(total_multiplicity(weights_of_W(2, 1, 1, 3)) == 3 * 4 + 2 + 2);
}

TEST_CASE("pairing") {
  const OnePSG lambda{{2, -1, 0}};
  const std::vector<int> w{1, 1, -1};
  CHECK(pairing(lambda, w) == 1);
}

TEST_CASE("standard lambda and U_k") {
  CHECK(standard_lambda(3, 1).lambda == std::vector<long>{1, -1, -2});
  CHECK(standard_lambda(2, 0).lambda == std::vector<long>{-1, -2});
  CHECK(standard_lambda(2, 2).lambda == std::vector<long>{2, 1});
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto u = u_k(n, 2, 3, k);
      CHECK(u.dim() == component_dim_formula(n, 2, 3, k) - (n * n - n) / 2);
      const auto v = unstable_subspace(standard_lambda(n, k), n, 2, 3);
      CHECK(v.b_rows == u.b_rows);
      CHECK(v.c_cols == u.c_cols);
      CHECK(v.a_entries == u.a_entries);
    }
}

TEST_CASE("unstable subspace agrees with the weight pairing") {
  Sampler rng(61, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    OnePSG lambda;
    for (std::size_t i = 0; i < n; ++i) lambda.lambda.push_back(rng.integer());
    const auto v = unstable_subspace(lambda, n, 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> ei(n, 0);
      ei[i] = 1;
      CHECK(v.b_rows[i] == (pairing(lambda, ei) > 0));
      ei[i] = -1;
      CHECK(v.c_cols[i] == (pairing(lambda, ei) > 0));
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> root(n, 0);
        root[i] += 1;
        root[j] -= 1;
        CHECK(v.a_entries[i * n + j] == (pairing(lambda, root) > 0));
      }
    }
  }
}

TEST_CASE("X_k") {
  const auto x0 = x_k(2, 0);
  const std::vector<std::vector<int>> expected0{{-1, 0}, {0, -1}, {1, -1}};
  CHECK(x0 == expected0);
  CHECK(x_k(3, 2).size() == 3 + 3);
}

TEST_CASE("maximal unstable subsets for small n") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto classes = enumerate_maximal_unstable(n, 1, 1, static_cast<long>(n));
    CHECK(classes.size() == n + 1);
    std::set<int> ks;
    for (const auto& c : classes) ks.insert(c.k);
    CHECK(ks.size() == n + 1);
    CHECK(ks.count(-1) == 0);
  }
  CHECK_THROWS(enumerate_maximal_unstable(3, 1, 1, 2));
}

TEST_CASE("canonical weight sets are permutation invariant") {
  const std::vector<std::vector<int>> a{{1, 0, -1}, {0, 1, 0}};
  const std::vector<std::vector<int>> b{{-1, 0, 1}, {0, 1, 0}};
  CHECK(canonical_weight_set(a, 3) == canonical_weight_set(b, 3));
  CHECK(canonical_weight_set(x_k(3, 1), 3) != canonical_weight_set(x_k(3, 2), 3));
}

TEST_CASE("null cone membership") {
  CHECK(in_null_cone(Point::zero(3, 2, 2)));
  CHECK(in_null_cone(nilpotent_pair()));
  CHECK_FALSE(in_null_cone(Point(Matrix(2, 1), Matrix(1, 2), Matrix::identity(2))));
  // Nilpotent A but C B != 0.
  CHECK_FALSE(in_null_cone(Point(Matrix::from_rows({{1}, {0}}), Matrix::from_rows({{1, 0}}),
                                 Matrix(2, 2))));
}

TEST_CASE("component interval examples") {
  const auto zero = component_interval(Point::zero(3, 1, 1));
  CHECK(zero.in_null_cone);
  CHECK(zero.d_min == 0);
  CHECK(zero.d_max == 3);

  const auto pair = component_interval(nilpotent_pair());
  CHECK(pair.in_null_cone);
  CHECK(pair.d_min == 1);
  CHECK(pair.d_max == 1);
  CHECK(pair.contains(1));
  CHECK_FALSE(pair.contains(0));

  const auto off = component_interval(Point(Matrix(2, 1), Matrix(1, 2), Matrix::identity(2)));
  CHECK_FALSE(off.in_null_cone);
  CHECK_FALSE(off.contains(0));
}

TEST_CASE("invariant hull and core") {
  const Matrix e = principal_nilpotent(3);
  const Subspace e3 = Subspace::span(Matrix::from_rows({{0}, {0}, {1}}));
  CHECK(invariant_hull(e, e3) == Subspace::full(3));
  CHECK(invariant_core(e, e3) == Subspace::zero(3));
  const Subspace e1 = Subspace::span(Matrix::from_rows({{1}, {0}, {0}}));
  CHECK(invariant_hull(e, e1) == e1);
  CHECK(invariant_core(e, e1) == e1);
}

TEST_CASE("certificates for sampled component points") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const Point w = sample_component(n, 2, 1, k, 1000 * n + k);
      CHECK(component_interval(w).contains(k));
      const auto cert = adapted_certificate(w, k);
      CHECK(cert.k == k);
      CHECK(certificate_valid(w, cert));
    }
}

TEST_CASE("certificate errors") {
  const Point off(Matrix(2, 1), Matrix(1, 2), Matrix::identity(2));
  try {
    adapted_certificate(off, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_in_null_cone);
  }
  try {
    adapted_certificate(nilpotent_pair(), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_member);
  }
}

TEST_CASE("a tampered certificate is rejected") {
  const Point w = sample_component(3, 1, 1, 1, 7);
  auto cert = adapted_certificate(w, 1);
  cert.lambda.lambda[0] = -5;
  CHECK_FALSE(certificate_valid(w, cert));
}

TEST_CASE("sample_u_k shape") {
  Sampler rng(67);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Point zero_k = sample_u_k(n, 2, 2, 0, rng);
    CHECK(zero_k.b().is_zero());
    const Point full_k = sample_u_k(n, 2, 2, n, rng);
    CHECK(full_k.c().is_zero());
    CHECK(u_k(n, 2, 2, 1).contains(sample_u_k(n, 2, 2, 1, rng)));
  }
}

TEST_CASE("component tangent dimensions") {
  for (std::size_t k = 0; k <= 2; ++k) CHECK(component_tangent_dim(2, 1, 1, k, 3) == 4);
  CHECK(component_tangent_dim(3, 2, 1, 3, 5) == 12);
  CHECK(component_tangent_dim(3, 2, 1, 0, 5) == 9);
  CHECK(component_dim_formula(3, 2, 1, 3) == 12);
}

TEST_CASE("null cone summaries") {
  const auto s211 = nullcone_summary(2, 1, 1);
  CHECK(s211.component_dims == std::vector<std::size_t>{4, 4, 4});
  CHECK(s211.nullcone_dim == 4);
  CHECK(s211.equidimensional);

  const auto s321 = nullcone_summary(3, 2, 1);
  CHECK(s321.component_dims == std::vector<std::size_t>{9, 10, 11, 12});
  CHECK(s321.nullcone_dim == 12);
  CHECK_FALSE(s321.equidimensional);

  CHECK(nullcone_summary(2, 3, 3).nullcone_dim == 8);
}

TEST_CASE("orbit witnesses") {
  const auto mid = generic_orbit_witness(4, 2, 2, 2);
  CHECK(mid.orbit_dim == 14);
  CHECK(stabilizer(mid.w).orbit_dim == 14);
  CHECK(component_interval(mid.w).contains(2));
  for (std::size_t k : {std::size_t{0}, std::size_t{4}}) {
    const auto edge = generic_orbit_witness(4, 2, 2, k);
    CHECK(edge.orbit_dim == 16);
    CHECK(component_interval(edge.w).contains(k));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto w = generic_orbit_witness(n, 2, 2, k, n + k);
      CHECK(w.orbit_dim == n * n - std::min(k, n - k));
      CHECK(stabilizer(w.w).stab_dim == std::min(k, n - k));
    }
}
