/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "skewbounds/eigen.hpp"
#include "skewbounds/matrix.hpp"

namespace skewbounds {

//=========================================================================
// Pauli matrices, standard basis |0> = (1,0)^T, |1> = (0,1)^T
//=========================================================================

inline ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}
inline ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}
inline ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

//=========================================================================
// DensityMatrix: validated state with cached principal square root
//=========================================================================

class DensityMatrix {
public:
  explicit DensityMatrix(const ComplexMatrix &rho) : rho_(rho) {
    if (!rho.is_square())
      throw ShapeMismatch("density matrix must be square");
    if (!all_finite(rho))
      throw ValidationError("density matrix has non-finite entries");
    const double scale = std::max(1.0, frobenius_norm(rho));
    if (hermiticity_defect(rho) > 1e-10 * scale)
      throw NotHermitian("density matrix is not Hermitian");
    const cplx tr = rho.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > 1e-10)
      throw ValidationError("density matrix trace differs from 1");
    sqrt_rho_ = psd_sqrt(rho); // also rejects eigenvalues below -1e-10
  }

  std::size_t dim() const { return rho_.rows(); }
  const ComplexMatrix &rho() const { return rho_; }
  const ComplexMatrix &sqrt_rho() const { return sqrt_rho_; }

private:
  ComplexMatrix rho_;
  ComplexMatrix sqrt_rho_;
};

// rank-1 test: largest eigenvalue within tol of 1
inline bool is_pure(const DensityMatrix &rho, double tol = 1e-9) {
  const auto eig = hermitian_eigen(rho.rho());
  return std::abs(eig.eigenvalues.back() - 1.0) <= tol;
}

// qubit state (I + r·σ)/2 from a Bloch vector with ‖r‖ <= 1
inline DensityMatrix bloch_state(const std::array<double, 3> &r) {
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0 + 1e-12)
    throw BlochVectorTooLong("|r| = " + std::to_string(len));
  ComplexMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + r[2]);
  rho(1, 1) = 0.5 * (1.0 - r[2]);
  rho(0, 1) = 0.5 * cplx(r[0], -r[1]);
  rho(1, 0) = 0.5 * cplx(r[0], r[1]);
  // a unit-length Bloch vector makes rho marginally PSD; the eigenvalue
  // clamp in psd_sqrt absorbs the roundoff
  return DensityMatrix(rho);
}

//=========================================================================
// Channels
//=========================================================================

class KrausChannel {
public:
  KrausChannel(std::string name, std::vector<ComplexMatrix> kraus)
      : name_(std::move(name)), kraus_(std::move(kraus)) {
    if (kraus_.empty())
      throw ValidationError("channel '" + name_ + "' has no Kraus operators");
    const std::size_t d = kraus_.front().rows();
    ComplexMatrix completeness(d, d);
    for (const auto &k : kraus_) {
      if (!k.is_square() || k.rows() != d)
        throw ShapeMismatch("channel '" + name_ + "' mixes operator dimensions");
      if (!all_finite(k))
        throw ValidationError("channel '" + name_ + "' has non-finite entries");
      completeness += k.dagger() * k;
    }
    if (distance(completeness, ComplexMatrix::identity(d)) > 1e-8)
      throw ValidationError("channel '" + name_ +
                            "' fails the CPTP completeness certificate");
  }

  const std::string &name() const { return name_; }
  const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
  std::size_t n() const { return kraus_.size(); }
  std::size_t dim() const { return kraus_.front().rows(); }

private:
  std::string name_;
  std::vector<ComplexMatrix> kraus_;
};

class UnitaryChannel {
public:
  UnitaryChannel(std::string name, const ComplexMatrix &u)
      : name_(std::move(name)), u_(u) {
    if (!u.is_square())
      throw ShapeMismatch("unitary must be square");
    if (!all_finite(u))
      throw ValidationError("unitary has non-finite entries");
    if (distance(u.dagger() * u, ComplexMatrix::identity(u.rows())) > 1e-10)
      throw ValidationError("matrix for channel '" + name_ + "' is not unitary");
  }

  const std::string &name() const { return name_; }
  const ComplexMatrix &u() const { return u_; }
  std::size_t dim() const { return u_.rows(); }

private:
  std::string name_;
  ComplexMatrix u_;
};

//=========================================================================
// Preset qubit channels. Each preset emits exactly two Kraus operators,
// including the degenerate q=0 cases, so the n=2 permutation bookkeeping
// is identical across every scenario.
//=========================================================================

namespace detail {
inline void require_q(double q) {
  if (!(q >= 0.0 && q < 1.0))
    throw ParamOutOfRange("q = " + std::to_string(q) + " outside [0, 1)");
}
} // namespace detail

// {|0><0| + sqrt(1-q)|1><1|, sqrt(q)|1><1|}
inline KrausChannel phase_damping(double q) {
  detail::require_q(q);
  ComplexMatrix a1(2, 2), a2(2, 2);
  a1(0, 0) = 1.0;
  a1(1, 1) = std::sqrt(1.0 - q);
  a2(1, 1) = std::sqrt(q);
  return KrausChannel("phase_damping", {a1, a2});
}

// {|0><0| + sqrt(1-q)|1><1|, sqrt(q)|0><1|}
inline KrausChannel amplitude_damping(double q) {
  detail::require_q(q);
  ComplexMatrix b1(2, 2), b2(2, 2);
  b1(0, 0) = 1.0;
  b1(1, 1) = std::sqrt(1.0 - q);
  b2(0, 1) = std::sqrt(q);
  return KrausChannel("amplitude_damping", {b1, b2});
}

// {sqrt(q) I, sqrt(1-q) sigma_x}
inline KrausChannel bit_flip(double q) {
  detail::require_q(q);
  ComplexMatrix c1 = ComplexMatrix::identity(2);
  c1 *= std::sqrt(q);
  ComplexMatrix c2 = pauli_x();
  c2 *= std::sqrt(1.0 - q);
  return KrausChannel("bit_flip", {c1, c2});
}

enum class PauliAxis { x, y, z };

inline const char *axis_name(PauliAxis axis) {
  switch (axis) {
  case PauliAxis::x:
    return "x";
  case PauliAxis::y:
    return "y";
  default:
    return "z";
  }
}

// U = exp(i * angle * sigma_axis) = cos(angle) I + i sin(angle) sigma_axis
inline UnitaryChannel pauli_rotation_unitary(PauliAxis axis, double angle) {
  ComplexMatrix sigma = (axis == PauliAxis::x)   ? pauli_x()
                        : (axis == PauliAxis::y) ? pauli_y()
                                                 : pauli_z();
  ComplexMatrix u = ComplexMatrix::identity(2);
  u *= std::cos(angle);
  sigma *= cplx(0.0, std::sin(angle));
  u += sigma;
  return UnitaryChannel(std::string("rot_") + axis_name(axis), u);
}

//=========================================================================
// Channel application
//=========================================================================

inline DensityMatrix apply_channel(const KrausChannel &ch,
                                   const DensityMatrix &rho) {
  if (ch.dim() != rho.dim())
    throw ShapeMismatch("channel dimension " + std::to_string(ch.dim()) +
                        " vs state dimension " + std::to_string(rho.dim()));
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto &k : ch.kraus())
    out += k * rho.rho() * k.dagger();
  return DensityMatrix(out);
}

inline KrausChannel as_kraus(const UnitaryChannel &u) {
  return KrausChannel(u.name(), {u.u()});
}

} // namespace skewbounds
