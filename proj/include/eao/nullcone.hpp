#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eao/invariants.hpp"
#include "eao/linalg.hpp"
#include "eao/random.hpp"

namespace eao {

/// Character of the diagonal torus in the epsilon basis.
struct Weight {
  std::vector<int> coeffs;
  std::size_t multiplicity = 1;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Cocharacter lambda of the diagonal torus.
struct OnePSG {
  std::vector<long> lambda;
};

long pairing(const OnePSG& lambda, std::span<const int> weight);

/// Weights of W with multiplicity: 0 (n r), e_i - e_j (1 each), e_i (p), -e_i (q).
std::vector<Weight> weights_of_W(std::size_t n, std::size_t p, std::size_t q, std::size_t r = 1);

/// Coordinates of W kept by a torus-stable coordinate subspace.
struct CoordinateSelection {
  std::size_t n = 0, p = 0, q = 0;
  std::vector<bool> b_rows;     // row i of B
  std::vector<bool> c_cols;     // column j of C
  std::vector<bool> a_entries;  // entry (i, j) of A, row-major

  std::size_t dim() const;
  /// Every coordinate outside the selection vanishes.
  bool contains(const Point& w) const;
};

/// V(lambda): coordinates whose weight pairs strictly positively with lambda.
CoordinateSelection unstable_subspace(const OnePSG& lambda, std::size_t n, std::size_t p,
                                      std::size_t q);

/// (k, k-1, ..., 1, -1, ..., -(n-k)).
OnePSG standard_lambda(std::size_t n, std::size_t k);

/// U_k: B rows > k vanish, C columns <= k vanish, A strictly upper triangular.
CoordinateSelection u_k(std::size_t n, std::size_t p, std::size_t q, std::size_t k);

/// Positive roots, e_i for i <= k and -e_j for j > k (distinct weights, sorted).
std::vector<std::vector<int>> x_k(std::size_t n, std::size_t k);

struct UnstableSubset {
  /// Index of the matching X_k, or -1 if the class matches none of them.
  int k = -1;
  /// Canonical representative under coordinate permutations, sorted.
  std::vector<std::vector<int>> weights;
};

/// Maximal unstable weight subsets over all lambda in [-box, box]^n, up to S_n.
std::vector<UnstableSubset> enumerate_maximal_unstable(std::size_t n, std::size_t p,
                                                       std::size_t q, long box);

/// Least image of a weight set under coordinate permutations.
std::vector<std::vector<int>> canonical_weight_set(std::vector<std::vector<int>> weights,
                                                   std::size_t n);

bool in_null_cone(const Point& w);

struct ComponentInterval {
  bool in_null_cone = false;
  std::size_t d_min = 0;
  std::size_t d_max = 0;

  bool contains(std::size_t k) const { return in_null_cone && d_min <= k && k <= d_max; }
};

/// Smallest A-invariant subspace containing s.
Subspace invariant_hull(const Matrix& a, const Subspace& s);
/// Largest A-invariant subspace contained in s.
Subspace invariant_core(const Matrix& a, const Subspace& s);

/// {k : w in C_k} as [dim of the A-span of Im B, dim of the largest
/// A-invariant subspace of ker C]; empty off the null cone.
ComponentInterval component_interval(const Point& w);

struct Certificate {
  std::size_t k = 0;
  Matrix g;
  OnePSG lambda;
};

/// Flag-adapted change of basis with g.w in U_k and the standard lambda.
/// Throws Error(not_in_null_cone) or Error(not_a_member).
Certificate adapted_certificate(const Point& w, std::size_t k);

/// g invertible, g.w in U_k coordinate-exactly and <lambda, x> > 0 on X_k.
bool certificate_valid(const Point& w, const Certificate& cert);

/// Random point of U_k with every superdiagonal entry of A nonzero.
Point sample_u_k(std::size_t n, std::size_t p, std::size_t q, std::size_t k, Sampler& rng);
/// g.u for random u in U_k and random invertible g.
Point sample_component(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                       std::uint64_t seed);

/// dim(g.u + U_k) at a random principal u in U_k.
std::size_t component_tangent_dim(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                                  std::uint64_t seed);

/// (n^2 - n) + p k + q (n - k).
std::size_t component_dim_formula(std::size_t n, std::size_t p, std::size_t q, std::size_t k);

struct NullconeSummary {
  std::vector<std::size_t> component_dims;
  std::size_t nullcone_dim = 0;
  bool equidimensional = false;
};

NullconeSummary nullcone_summary(std::size_t n, std::size_t p, std::size_t q);

/// Principal nilpotent with ones on the superdiagonal.
Matrix principal_nilpotent(std::size_t n);

/// (xi, eta, e) with xi = (xi_1; 0), xi_1 = (e_k, free), eta = (0 | free).
/// Requires 1 <= k <= n; the free blocks are drawn from rng.
Point stabilizer_witness(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                         Sampler& rng);

struct OrbitWitness {
  Point w;
  std::size_t orbit_dim = 0;
};

/// Witness of the largest orbit dimension n^2 - min(k, n-k) in C_k. Uses the
/// xi construction when k >= n - k and the dual eta construction otherwise.
OrbitWitness generic_orbit_witness(std::size_t n, std::size_t p, std::size_t q, std::size_t k,
                                   std::uint64_t seed = 0);

}  // namespace eao
