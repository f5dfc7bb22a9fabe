/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "skewbounds/errors.hpp"

namespace skewbounds {

using cplx = std::complex<double>;

//=========================================================================
// ComplexMatrix: dense row-major complex matrix
//=========================================================================

class ComplexMatrix {
public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }

  static ComplexMatrix identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix
  from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.begin()->size() : 0;
    ComplexMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto &row : rows) {
      if (row.size() != nc)
        throw ShapeMismatch("ragged row list in from_rows");
      std::size_t j = 0;
      for (const auto &v : row)
        m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  cplx &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx> &entries() const { return data_; }

  ComplexMatrix &operator+=(const ComplexMatrix &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }

  ComplexMatrix &operator-=(const ComplexMatrix &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }

  ComplexMatrix &operator*=(cplx c) {
    for (auto &v : data_)
      v *= c;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx c, ComplexMatrix a) {
    a *= c;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx c) {
    a *= c;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix &a,
                                 const ComplexMatrix &b) {
    if (a.cols_ != b.rows_)
      throw ShapeMismatch("matrix product with inner dimension mismatch");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx(0.0, 0.0))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  ComplexMatrix dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  cplx trace() const {
    if (!is_square())
      throw ShapeMismatch("trace of non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      t += (*this)(i, i);
    return t;
  }

private:
  void require_same_shape(const ComplexMatrix &o) const {
    if (!same_shape(o))
      throw ShapeMismatch("elementwise op on differently shaped matrices");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

//=========================================================================
// Free functions
//=========================================================================

inline double frobenius_norm(const ComplexMatrix &x) {
  double s = 0.0;
  for (const auto &v : x.entries())
    s += std::norm(v);
  return std::sqrt(s);
}

// squared Frobenius norm, no sqrt round trip
inline double frobenius_norm2(const ComplexMatrix &x) {
  double s = 0.0;
  for (const auto &v : x.entries())
    s += std::norm(v);
  return s;
}

inline ComplexMatrix commutator(const ComplexMatrix &x,
                                const ComplexMatrix &y) {
  if (!x.is_square() || !y.is_square() || !x.same_shape(y))
    throw ShapeMismatch("commutator needs square matrices of equal dimension");
  return x * y - y * x;
}

inline bool all_finite(const ComplexMatrix &x) {
  for (const auto &v : x.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      return false;
  return true;
}

// ‖A − B‖_F
inline double distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (!a.same_shape(b))
    throw ShapeMismatch("distance between differently shaped matrices");
  double s = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    s += std::norm(a.entries()[k] - b.entries()[k]);
  return std::sqrt(s);
}

// relative Frobenius comparison, scale max(1, ‖a‖_F)
inline bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                         double tol) {
  return distance(a, b) <= tol * std::max(1.0, frobenius_norm(a));
}

inline double hermiticity_defect(const ComplexMatrix &a) {
  return distance(a, a.dagger());
}

inline bool is_hermitian(const ComplexMatrix &a, double tol = 1e-10) {
  return a.is_square() &&
         hermiticity_defect(a) <= tol * std::max(1.0, frobenius_norm(a));
}

} // namespace skewbounds
