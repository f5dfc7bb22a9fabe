/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "skewbounds/eigen.hpp"
#include "skewbounds/quantum.hpp"

namespace skewbounds {

// Deterministic random source. The standard distributions are
// implementation-defined, so uniforms come straight from mt19937_64 bits
// and normals from Box-Muller; identical seeds give identical streams on
// every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0)
      u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586477 * u2);
    have_spare_ = true;
    return r * std::cos(6.283185307179586477 * u2);
  }

  cplx cnormal() { return cplx(normal(), normal()); }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline ComplexMatrix random_matrix(Rng &rng, std::size_t d, double scale = 1.0) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = scale * rng.cnormal();
  return m;
}

inline ComplexMatrix random_hermitian(Rng &rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  ComplexMatrix h = g + g.dagger();
  h *= 0.5;
  return h;
}

// Ginibre construction: GG† normalized to unit trace
inline DensityMatrix random_density(Rng &rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  ComplexMatrix m = g * g.dagger();
  m *= 1.0 / m.trace().real();
  return DensityMatrix(m);
}

inline DensityMatrix random_pure(Rng &rng, std::size_t d) {
  std::vector<cplx> v(d);
  double norm2 = 0.0;
  for (auto &x : v) {
    x = rng.cnormal();
    norm2 += std::norm(x);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = v[i] * std::conj(v[j]) * inv * inv;
  return DensityMatrix(m);
}

// eigenvector matrix of a random Hermitian: unitary by construction
inline ComplexMatrix random_unitary(Rng &rng, std::size_t d) {
  return hermitian_eigen(random_hermitian(rng, d)).eigenvectors;
}

// random CPTP channel with exactly n Kraus operators: n-1 random fragments
// scaled strictly inside the completeness budget, closed by the principal
// square root of the remainder
inline KrausChannel random_cptp(Rng &rng, std::size_t d, std::size_t n) {
  std::vector<ComplexMatrix> ops;
  if (n == 1) {
    ops.push_back(random_unitary(rng, d));
    return KrausChannel("random", std::move(ops));
  }
  ComplexMatrix gram(d, d);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ops.push_back(random_matrix(rng, d, 0.5));
    gram += ops.back().dagger() * ops.back();
  }
  const double lam_max = hermitian_eigen(gram).eigenvalues.back();
  const double target = rng.uniform(0.2, 0.9);
  const double alpha = std::sqrt(target / std::max(lam_max, 1e-12));
  for (auto &op : ops)
    op *= alpha;
  gram *= alpha * alpha;
  ComplexMatrix remainder = ComplexMatrix::identity(d);
  remainder -= gram;
  ops.push_back(psd_sqrt(remainder));
  return KrausChannel("random", std::move(ops));
}

} // namespace skewbounds
