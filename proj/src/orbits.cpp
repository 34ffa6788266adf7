#include "eao/orbits.hpp"

#include <stdexcept>

#include "eao/error.hpp"

namespace eao {

StabilizerReport stabilizer(const Point& w) {
  const Matrix& a = w.a();
  const std::size_t n = w.n(), p = w.p(), q = w.q();
  const std::size_t unknowns = n * n;
  // Unknown X_{ij} sits at column i*n + j.
  const std::size_t equations = n * p + q * n + n * n;
  std::vector<Rational> sys(equations * unknowns);
  std::size_t row = 0;
  // (XB)_{il} = sum_j X_ij B_jl
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < p; ++l, ++row)
      for (std::size_t j = 0; j < n; ++j) sys[row * unknowns + i * n + j] = w.b()(j, l);
  // (CX)_{mj} = sum_i C_mi X_ij
  for (std::size_t m = 0; m < q; ++m)
    for (std::size_t j = 0; j < n; ++j, ++row)
      for (std::size_t i = 0; i < n; ++i) sys[row * unknowns + i * n + j] = w.c()(m, i);
  // (XA - AX)_{il} = sum_j X_ij A_jl - sum_j A_ij X_jl
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l, ++row) {
      for (std::size_t j = 0; j < n; ++j) {
        sys[row * unknowns + i * n + j] += a(j, l);
        sys[row * unknowns + j * n + l] -= a(i, j);
      }
    }
  const Matrix system(equations, unknowns, std::move(sys));
  auto kernel = rref_decompose(system).kernel;

  for (std::size_t c = 0; c < kernel.dim(); ++c) {
    const Matrix x = Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
      return kernel.basis()(i * n + j, c);
    });
    if (!(x * w.b()).is_zero() || !(w.c() * x).is_zero() || !(x * a - a * x).is_zero())
      throw std::logic_error("stabilizer kernel failed re-substitution");
  }
  const std::size_t d = kernel.dim();
  return {d, n * n - d, std::move(kernel)};
}

bool is_regular_semisimple(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::shape_mismatch, "expected a square matrix");
  if (a.rows() <= 1) return true;
  return sgn(discriminant(char_poly(a))) != 0;
}

std::pair<Matrix, Matrix> rank_one_factors(const Matrix& x) {
  const std::size_t q = x.rows(), p = x.cols();
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < q; ++i) {
      if (sgn(x(i, j)) == 0) continue;
      const Rational scale = 1 / x(i, j);
      Matrix c = x.col_at(j);
      Matrix b = Matrix::generate(1, p, [&](std::size_t, std::size_t l) -> Rational {
        return x(i, l) * scale;
      });
      return {std::move(c), std::move(b)};
    }
  }
  return {Matrix(q, 1), Matrix(1, p)};
}

ReconstructionData reconstruction_data(std::span<const Rational> t,
                                       std::span<const Matrix> gamma, bool strict_rank1) {
  if (t.empty()) throw Error(ErrorCode::invalid_argument, "n must be positive");
  ReconstructionData out;
  out.t.assign(t.begin(), t.end());
  out.x = vandermonde_solve(t, gamma);
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    const std::size_t rk = rank(out.x[k]);
    if (rk > 1 || (strict_rank1 && rk == 0))
      throw Error(ErrorCode::fiber_condition_violated,
                  "X[" + std::to_string(k) + "] has rank " + std::to_string(rk));
    auto factors = rank_one_factors(out.x[k]);
    if (factors.first * factors.second != out.x[k])
      throw Error(ErrorCode::fiber_condition_violated, "rank-one factorization mismatch");
    out.factors.push_back(std::move(factors));
  }
  return out;
}

Point reconstruct_fiber_point(std::span<const Rational> t, std::span<const Matrix> gamma,
                              bool strict_rank1) {
  const auto data = reconstruction_data(t, gamma, strict_rank1);
  const std::size_t n = t.size();
  const std::size_t q = gamma[0].rows(), p = gamma[0].cols();
  // Row k of B is b_k, column k of C is c_k.
  Matrix b = Matrix::generate(n, p, [&](std::size_t k, std::size_t l) {
    return data.factors[k].second(0, l);
  });
  Matrix c = Matrix::generate(q, n, [&](std::size_t m, std::size_t k) {
    return data.factors[k].first(m, 0);
  });
  return Point(std::move(b), std::move(c), Matrix::diagonal(t));
}

bool same_closed_orbit(const Point& w1, const Point& w2) {
  if (w1.n() != w2.n() || w1.p() != w2.p() || w1.q() != w2.q())
    throw Error(ErrorCode::shape_mismatch, "points live in different spaces");
  return evaluate_invariants(w1) == evaluate_invariants(w2);
}

}  // namespace eao
