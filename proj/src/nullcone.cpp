#include "eao/nullcone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "eao/error.hpp"
#include "eao/orbits.hpp"

namespace eao {

long pairing(const OnePSG& lambda, std::span<const int> weight) {
  long sum = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) sum += lambda.lambda[i] * weight[i];
  return sum;
}

namespace {

std::vector<int> unit_weight(std::size_t n, std::size_t i, int sign) {
  std::vector<int> w(n, 0);
  w[i] = sign;
  return w;
}

std::vector<int> root(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<int> w(n, 0);
  w[i] = 1;
  w[j] = -1;
  return w;
}

}  // namespace

std::vector<Weight> weights_of_W(std::size_t n, std::size_t p, std::size_t q, std::size_t r) {
  std::vector<Weight> out;
  out.push_back({std::vector<int>(n, 0), n * r});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back({root(n, i, j), r});
  for (std::size_t i = 0; i < n; ++i) out.push_back({unit_weight(n, i, 1), p});
  for (std::size_t i = 0; i < n; ++i) out.push_back({unit_weight(n, i, -1), q});
  return out;
}

std::size_t CoordinateSelection::dim() const {
  const auto count = [](const std::vector<bool>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
  };
  return count(b_rows) * p + count(c_cols) * q + count(a_entries);
}

bool CoordinateSelection::contains(const Point& w) const {
  if (w.n() != n || w.p() != p || w.q() != q || w.r() != 1)
    throw Error(ErrorCode::shape_mismatch, "point does not match the coordinate selection");
  for (std::size_t i = 0; i < n; ++i) {
    if (b_rows[i]) continue;
    for (std::size_t l = 0; l < p; ++l)
      if (sgn(w.b()(i, l)) != 0) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (c_cols[j]) continue;
    for (std::size_t m = 0; m < q; ++m)
      if (sgn(w.c()(m, j)) != 0) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a_entries[i * n + j] && sgn(w.a()(i, j)) != 0) return false;
  return true;
}

CoordinateSelection unstable_subspace(const OnePSG& lambda, std::size_t n, std::size_t p,
                                      std::size_t q) {
  if (lambda.lambda.size() != n)
    throw Error(ErrorCode::shape_mismatch, "lambda must have n entries");
  CoordinateSelection sel{n, p, q, std::vector<bool>(n), std::vector<bool>(n),
                          std::vector<bool>(n * n)};
  const auto& l = lambda.lambda;
  for (std::size_t i = 0; i < n; ++i) {
    sel.b_rows[i] = l[i] > 0;
    sel.c_cols[i] = -l[i] > 0;
    for (std::size_t j = 0; j < n; ++j) sel.a_entries[i * n + j] = l[i] - l[j] > 0;
  }
  return sel;
}

OnePSG standard_lambda(std::size_t n, std::size_t k) {
  if (k > n) throw Error(ErrorCode::invalid_argument, "k must lie in 0..n");
  OnePSG out;
  for (std::size_t i = 0; i < k; ++i) out.lambda.push_back(static_cast<long>(k - i));
  for (std::size_t i = k; i < n; ++i) out.lambda.push_back(-static_cast<long>(i - k + 1));
  return out;
}

CoordinateSelection u_k(std::size_t n, std::size_t p, std::size_t q, std::size_t k) {
  return unstable_subspace(standard_lambda(n, k), n, p, q);
}

std::vector<std::vector<int>> x_k(std::size_t n, std::size_t k) {
  if (k > n) throw Error(ErrorCode::invalid_argument, "k must lie in 0..n");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(root(n, i, j));
  for (std::size_t i = 0; i < k; ++i) out.push_back(unit_weight(n, i, 1));
  for (std::size_t j = k; j < n; ++j) out.push_back(unit_weight(n, j, -1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> canonical_weight_set(std::vector<std::vector<int>> weights,
                                                   std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(weights.begin(), weights.end());
  auto best = weights;
  std::vector<std::vector<int>> moved(weights.size(), std::vector<int>(n));
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t w = 0; w < weights.size(); ++w)
      for (std::size_t i = 0; i < n; ++i) moved[w][perm[i]] = weights[w][i];
    std::sort(moved.begin(), moved.end());
    if (moved < best) best = moved;
  }
  return best;
}

std::vector<UnstableSubset> enumerate_maximal_unstable(std::size_t n, std::size_t p,
                                                       std::size_t q, long box) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (box < static_cast<long>(n)) throw Error(ErrorCode::invalid_argument, "box must be >= n");
  std::vector<std::vector<int>> distinct;
  for (const auto& w : weights_of_W(n, p, q))
    if (std::any_of(w.coeffs.begin(), w.coeffs.end(), [](int c) { return c != 0; }))
      distinct.push_back(w.coeffs);
  if (distinct.size() > 64)
    throw Error(ErrorCode::invalid_argument, "too many weights for the bitmask search");

  std::unordered_set<std::uint64_t> masks;
  OnePSG lambda{std::vector<long>(n, -box)};
  for (;;) {
    std::uint64_t mask = 0;
    for (std::size_t w = 0; w < distinct.size(); ++w)
      if (pairing(lambda, distinct[w]) > 0) mask |= std::uint64_t{1} << w;
    masks.insert(mask);
    std::size_t i = 0;
    while (i < n && lambda.lambda[i] == box) lambda.lambda[i++] = -box;
    if (i == n) break;
    ++lambda.lambda[i];
  }

  std::vector<std::uint64_t> all(masks.begin(), masks.end());
  std::sort(all.begin(), all.end());
  std::vector<std::vector<std::vector<int>>> x_canon;
  for (std::size_t k = 0; k <= n; ++k) x_canon.push_back(canonical_weight_set(x_k(n, k), n));

  std::set<std::vector<std::vector<int>>> classes;
  for (auto m : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [m](std::uint64_t other) {
      return other != m && (other & m) == m;
    });
    if (dominated || m == 0) continue;
    std::vector<std::vector<int>> set;
    for (std::size_t w = 0; w < distinct.size(); ++w)
      if (m >> w & 1) set.push_back(distinct[w]);
    classes.insert(canonical_weight_set(std::move(set), n));
  }

  std::vector<UnstableSubset> out;
  for (const auto& c : classes) {
    UnstableSubset subset{-1, c};
    for (std::size_t k = 0; k <= n; ++k)
      if (x_canon[k] == c) subset = {static_cast<int>(k), x_k(n, k)};
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(),
            [](const UnstableSubset& a, const UnstableSubset& b) { return a.k < b.k; });
  return out;
}

bool in_null_cone(const Point& w) { return evaluate_invariants(w).is_zero(); }

Subspace invariant_hull(const Matrix& a, const Subspace& s) {
  Subspace current = s;
  for (;;) {
    Subspace next = subspace_sum(current, image(a, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace invariant_core(const Matrix& a, const Subspace& s) {
  Subspace current = s;
  for (;;) {
    Subspace next = intersect(current, preimage(a, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

ComponentInterval component_interval(const Point& w) {
  if (!in_null_cone(w)) return {};
  const Subspace hull = invariant_hull(w.a(), Subspace::span(w.b()));
  const Subspace core = invariant_core(w.a(), rref_decompose(w.c()).kernel);
  if (hull.dim() > core.dim())
    throw std::logic_error("component interval is inverted on a null point");
  return {true, hull.dim(), core.dim()};
}

namespace {

// Extends `current` inside `target` one vector at a time up to dimension
// `until`, each new vector mapped by A into the span of the previous ones.
// Both subspaces must be A-invariant with A nilpotent on them.
void grow_flag(const Matrix& a, Subspace& current, const Subspace& target, std::size_t until,
               std::vector<Matrix>& flag) {
  while (current.dim() < until) {
    const Subspace candidates = intersect(preimage(a, current), target);
    bool grown = false;
    for (std::size_t c = 0; c < candidates.dim() && !grown; ++c) {
      Matrix v = candidates.basis().col_at(c);
      if (current.contains(v)) continue;
      current = subspace_sum(current, Subspace::span(v));
      flag.push_back(std::move(v));
      grown = true;
    }
    if (!grown) throw std::logic_error("flag refinement stalled; map is not nilpotent here");
  }
}

}  // namespace

Certificate adapted_certificate(const Point& w, std::size_t k) {
  const ComponentInterval interval = component_interval(w);
  if (!interval.in_null_cone)
    throw Error(ErrorCode::not_in_null_cone, "point is not in the null cone");
  if (!interval.contains(k))
    throw Error(ErrorCode::not_a_member,
                "k = " + std::to_string(k) + " outside [" + std::to_string(interval.d_min) +
                    ", " + std::to_string(interval.d_max) + "]");
  const Matrix& a = w.a();
  const std::size_t n = w.n();
  const Subspace hull = invariant_hull(a, Subspace::span(w.b()));
  const Subspace core = invariant_core(a, rref_decompose(w.c()).kernel);

  // F: A-invariant, hull <= F <= core, dim F = k.
  Subspace middle = hull;
  std::vector<Matrix> unused;
  grow_flag(a, middle, core, k, unused);

  std::vector<Matrix> flag;
  Subspace current = Subspace::zero(n);
  grow_flag(a, current, middle, k, flag);
  grow_flag(a, current, Subspace::full(n), n, flag);

  Matrix basis = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) { return flag[j](i, 0); });
  return {k, inverse(basis), standard_lambda(n, k)};
}

bool certificate_valid(const Point& w, const Certificate& cert) {
  const std::size_t n = w.n();
  if (cert.k > n || cert.g.rows() != n || cert.g.cols() != n || cert.lambda.lambda.size() != n)
    return false;
  if (sgn(determinant(cert.g)) == 0) return false;
  if (!u_k(n, w.p(), w.q(), cert.k).contains(group_action(cert.g, w))) return false;
  for (const auto& weight : x_k(n, cert.k))
    if (pairing(cert.lambda, weight) <= 0) return false;
  return true;
}

Point sample_u_k(std::size_t n, std::size_t p, std::size_t q, std::size_t k, Sampler& rng) {
  if (k > n) throw Error(ErrorCode::invalid_argument, "k must lie in 0..n");
  Matrix b = Matrix::generate(n, p, [&](std::size_t i, std::size_t) {
    return Rational(i < k ? rng.integer() : 0);
  });
  Matrix c = Matrix::generate(q, n, [&](std::size_t, std::size_t j) {
    return Rational(j >= k ? rng.integer() : 0);
  });
  Matrix a = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (j == i + 1) return Rational(rng.nonzero());
    return Rational(j > i ? rng.integer() : 0);
  });
  return Point(std::move(b), std::move(c), std::move(a));
}

Point sample_component(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                       std::uint64_t seed) {
  Sampler rng(seed);
  const Point u = sample_u_k(n, p, q, k, rng);
  return group_action(rng.invertible(n), u);
}

std::size_t component_dim_formula(std::size_t n, std::size_t p, std::size_t q, std::size_t k) {
  return (n * n - n) + p * k + q * (n - k);
}

std::size_t component_tangent_dim(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                                  std::uint64_t seed) {
  Sampler rng(seed);
  const Point u = sample_u_k(n, p, q, k, rng);
  const CoordinateSelection sel = u_k(n, p, q, k);
  const std::size_t dim_w = tangent_dim(n, p, q);

  std::vector<std::vector<Rational>> vectors;
  // Orbit directions (XB, -CX, [X, A]) for X = E_ij.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n * n);
      e[i * n + j] = 1;
      const Matrix x(n, n, std::move(e));
      const Matrix xb = x * u.b();
      const Matrix cx = -(u.c() * x);
      const Matrix bracket = x * u.a() - u.a() * x;
      std::vector<Rational> v;
      v.reserve(dim_w);
      for (const auto* m : {&xb, &cx, &bracket}) v.insert(v.end(), m->entries().begin(), m->entries().end());
      vectors.push_back(std::move(v));
    }
  }
  // Coordinate directions of U_k.
  auto unit = [&](std::size_t idx) {
    std::vector<Rational> v(dim_w);
    v[idx] = 1;
    vectors.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i)
    if (sel.b_rows[i])
      for (std::size_t l = 0; l < p; ++l) unit(i * p + l);
  for (std::size_t m = 0; m < q; ++m)
    for (std::size_t j = 0; j < n; ++j)
      if (sel.c_cols[j]) unit(n * p + m * n + j);
  for (std::size_t i = 0; i < n * n; ++i)
    if (sel.a_entries[i]) unit(n * p + q * n + i);

  std::vector<Rational> flat;
  flat.reserve(vectors.size() * dim_w);
  for (auto& v : vectors) flat.insert(flat.end(), v.begin(), v.end());
  return rank(Matrix(vectors.size(), dim_w, std::move(flat)));
}

NullconeSummary nullcone_summary(std::size_t n, std::size_t p, std::size_t q) {
  NullconeSummary out;
  for (std::size_t k = 0; k <= n; ++k) out.component_dims.push_back(component_dim_formula(n, p, q, k));
  out.nullcone_dim = *std::max_element(out.component_dims.begin(), out.component_dims.end());
  out.equidimensional = std::all_of(out.component_dims.begin(), out.component_dims.end(),
                                    [&](std::size_t d) { return d == out.component_dims[0]; });
  return out;
}

Matrix principal_nilpotent(std::size_t n) {
  return Matrix::generate(n, n, [](std::size_t i, std::size_t j) { return Rational(j == i + 1 ? 1 : 0); });
}

Point stabilizer_witness(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                         Sampler& rng) {
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in 1..n");
  Matrix xi = Matrix::generate(n, p, [&](std::size_t i, std::size_t l) {
    if (l == 0) return Rational(i + 1 == k ? 1 : 0);
    return Rational(i < k ? rng.integer() : 0);
  });
  Matrix eta = Matrix::generate(q, n, [&](std::size_t, std::size_t j) {
    return Rational(j >= k ? rng.integer() : 0);
  });
  return Point(std::move(xi), std::move(eta), principal_nilpotent(n));
}

OrbitWitness generic_orbit_witness(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                                   std::uint64_t seed) {
  if (n == 0 || k > n) throw Error(ErrorCode::invalid_argument, "need n >= 1 and 0 <= k <= n");
  Sampler rng(seed);
  Point w;
  if (2 * k >= n) {
    w = stabilizer_witness(n, p, q, k, rng);
  } else {
    // Dual construction: the first row of eta starts with 1 at column k+1.
    Matrix xi = Matrix::generate(n, p, [&](std::size_t i, std::size_t) {
      return Rational(i < k ? rng.integer() : 0);
    });
    Matrix eta = Matrix::generate(q, n, [&](std::size_t m, std::size_t j) {
      if (m == 0) return Rational(j == k ? 1 : 0);
      return Rational(j >= k ? rng.integer() : 0);
    });
    w = Point(std::move(xi), std::move(eta), principal_nilpotent(n));
  }
  const std::size_t orbit_dim = stabilizer(w).orbit_dim;
  return {std::move(w), orbit_dim};
}

}  // namespace eao
