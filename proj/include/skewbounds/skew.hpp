/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cmath>

#include "skewbounds/block_vector.hpp"
#include "skewbounds/matrix.hpp"
#include "skewbounds/quantum.hpp"

namespace skewbounds {

namespace detail {

// cancellation in ‖·‖² of near-commuting pairs can leave a tiny negative
inline double clamp_skew(double v) {
  if (v < 0.0 && v >= -1e-12)
    return 0.0;
  return v;
}

// ½ ‖[sqrt_rho, a]‖²_F with the square root already in hand
inline double skew_of(const ComplexMatrix &sqrt_rho, const ComplexMatrix &a) {
  if (!a.is_square() || a.rows() != sqrt_rho.rows())
    throw ShapeMismatch("operator dimension does not match the state");
  return clamp_skew(0.5 * frobenius_norm2(commutator(sqrt_rho, a)));
}

} // namespace detail

// skew information of an operator; A may be non-Hermitian (Kraus operators
// and unitaries are fed through here unchanged)
inline double skew_operator(const DensityMatrix &rho, const ComplexMatrix &a) {
  return detail::skew_of(rho.sqrt_rho(), a);
}

// the stacked commutator vector a = ([sqrt(rho),K_1], ..., [sqrt(rho),K_n])
inline BlockVector commutator_blocks(const DensityMatrix &rho,
                                     const KrausChannel &ch) {
  if (ch.dim() != rho.dim())
    throw ShapeMismatch("channel dimension does not match the state");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(ch.n());
  for (const auto &k : ch.kraus())
    blocks.push_back(commutator(rho.sqrt_rho(), k));
  return BlockVector(std::move(blocks));
}

// skew information of a channel: ½ ‖a‖² over the stacked commutator vector,
// equivalently the sum of the per-operator skew informations
inline double skew_channel(const DensityMatrix &rho, const KrausChannel &ch) {
  return detail::clamp_skew(0.5 * commutator_blocks(rho, ch).norm2());
}

// F = Σ_i |<psi|K_i|psi>|² for a rank-1 state; computed as Σ |tr(rho K_i)|²
inline double fidelity_pure(const DensityMatrix &psi, const KrausChannel &ch) {
  if (!is_pure(psi))
    throw NotPure("fidelity_pure needs a rank-1 state");
  if (ch.dim() != psi.dim())
    throw ShapeMismatch("channel dimension does not match the state");
  double f = 0.0;
  for (const auto &k : ch.kraus())
    f += std::norm((psi.rho() * k).trace());
  return f;
}

// quantum variance of a unitary in a pure state:
//   ½ <UU† + U†U> − <U><U†>  =  1 − |<psi|U|psi>|²
inline double unitary_variance_pure(const DensityMatrix &psi,
                                    const UnitaryChannel &u) {
  if (!is_pure(psi))
    throw NotPure("unitary_variance_pure needs a rank-1 state");
  if (u.dim() != psi.dim())
    throw ShapeMismatch("unitary dimension does not match the state");
  return 1.0 - std::norm((psi.rho() * u.u()).trace());
}

} // namespace skewbounds
