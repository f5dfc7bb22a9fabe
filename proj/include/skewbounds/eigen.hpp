/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "skewbounds/matrix.hpp"

namespace skewbounds {

struct HermitianEigen {
  std::vector<double> eigenvalues; // ascending
  ComplexMatrix eigenvectors;      // columns, orthonormal
};

namespace detail {

// One complex Jacobi rotation zeroing B(p,q). The 2x2 pivot block
//   [ alpha     r*omega ]
//   [ r*conj(omega) beta ]
// is reduced to a real pivot by the phase omega and diagonalized by the
// classic stable rotation t = sgn(tau)/(|tau| + sqrt(1+tau^2)).
// The combined plane unitary has columns (c, -s*conj(omega)) and
// (s, c*conj(omega)); it is applied as B <- G^dagger B G, V <- V G.
inline void jacobi_rotate(ComplexMatrix &b, ComplexMatrix &v, std::size_t p,
                          std::size_t q) {
  const std::size_t d = b.rows();
  const cplx apq = b(p, q);
  const double r = std::abs(apq);
  if (r == 0.0)
    return;
  const cplx omega = apq / r;
  const double alpha = b(p, p).real();
  const double beta = b(q, q).real();
  const double tau = (beta - alpha) / (2.0 * r);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx womega = std::conj(omega);

  // columns: B <- B G
  for (std::size_t k = 0; k < d; ++k) {
    const cplx bkp = b(k, p);
    const cplx bkq = b(k, q);
    b(k, p) = c * bkp - s * womega * bkq;
    b(k, q) = s * bkp + c * womega * bkq;
  }
  // rows: B <- G^dagger B
  for (std::size_t k = 0; k < d; ++k) {
    const cplx bpk = b(p, k);
    const cplx bqk = b(q, k);
    b(p, k) = c * bpk - s * omega * bqk;
    b(q, k) = s * bpk + c * omega * bqk;
  }
  // pivot entries are known exactly
  b(p, q) = 0.0;
  b(q, p) = 0.0;
  b(p, p) = cplx(b(p, p).real(), 0.0);
  b(q, q) = cplx(b(q, q).real(), 0.0);

  for (std::size_t k = 0; k < d; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - s * womega * vkq;
    v(k, q) = s * vkp + c * womega * vkq;
  }
}

} // namespace detail

// Cyclic Jacobi diagonalization of a Hermitian matrix. Dimensions in this
// library stay small (<= 16), where Jacobi converges unconditionally and
// keeps eigenvectors orthonormal to machine precision by construction.
// Sweep cap 100, off-diagonal threshold 1e-14 * ||A||_F.
inline HermitianEigen hermitian_eigen(const ComplexMatrix &a) {
  if (!a.is_square())
    throw NotHermitian("matrix is not square");
  const double scale = std::max(1.0, frobenius_norm(a));
  if (hermiticity_defect(a) > 1e-10 * scale)
    throw NotHermitian("matrix is not Hermitian within tolerance");

  const std::size_t d = a.rows();
  ComplexMatrix b = a;
  // symmetrize roundoff and force a real diagonal before iterating
  for (std::size_t i = 0; i < d; ++i) {
    b(i, i) = cplx(b(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx m = 0.5 * (b(i, j) + std::conj(b(j, i)));
      b(i, j) = m;
      b(j, i) = std::conj(m);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double threshold = 1e-14 * frobenius_norm(a);
  constexpr int max_sweeps = 100;
  bool converged = (d < 2);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q)
        if (std::abs(b(p, q)) > threshold) {
          detail::jacobi_rotate(b, v, p, q);
          ++rotations;
        }
    converged = (rotations == 0);
  }
  if (!converged)
    throw NoConvergence("Jacobi sweep cap (100) exceeded");

  // ascending eigenvalues; stable sort keeps the sweep-induced order
  // inside degenerate clusters
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return b(i, i).real() < b(j, j).real();
  });

  HermitianEigen out;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    out.eigenvalues[j] = b(order[j], order[j]).real();
    for (std::size_t i = 0; i < d; ++i)
      out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-1e-10, 0) are clamped to 0; anything lower is rejected. Positive
// eigenvalues below 1e-13 are snapped to 0 as well: the square root is not
// Lipschitz at zero, so sqrt of roundoff noise on a rank-deficient input
// would inject ~1e-8 into S while the snap costs only ~1e-13 in S*S.
inline ComplexMatrix psd_sqrt(const ComplexMatrix &a) {
  const HermitianEigen eig = hermitian_eigen(a);
  const std::size_t d = a.rows();
  std::vector<double> roots(d);
  for (std::size_t i = 0; i < d; ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < -1e-10)
      throw NotPSD("eigenvalue " + std::to_string(lambda) + " below -1e-10");
    roots[i] = (lambda <= 1e-13) ? 0.0 : std::sqrt(lambda);
  }
  const ComplexMatrix &v = eig.eigenvectors;
  ComplexMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      cplx sij = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        sij += v(i, k) * roots[k] * std::conj(v(j, k));
      s(i, j) = sij;
      s(j, i) = std::conj(sij); // exactly Hermitian output
    }
  for (std::size_t i = 0; i < d; ++i)
    s(i, i) = cplx(s(i, i).real(), 0.0);
  return s;
}

} // namespace skewbounds
