/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "skewbounds/matrix.hpp"

namespace skewbounds {

// Stacked vector of equally shaped matrices. The squared norm is the sum
// of the blocks' squared Frobenius norms, so a block vector behaves like
// one long column vector under +, - and ‖·‖.
class BlockVector {
public:
  BlockVector() = default;

  explicit BlockVector(std::vector<ComplexMatrix> blocks)
      : blocks_(std::move(blocks)) {
    for (const auto &b : blocks_)
      if (!b.same_shape(blocks_.front()))
        throw ShapeMismatch("block vector with unequal block shapes");
  }

  const std::vector<ComplexMatrix> &blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool same_shape(const BlockVector &o) const {
    return size() == o.size() &&
           (blocks_.empty() || blocks_.front().same_shape(o.blocks_.front()));
  }

  double norm2() const {
    double s = 0.0;
    for (const auto &b : blocks_)
      s += frobenius_norm2(b);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  BlockVector &operator+=(const BlockVector &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      blocks_[k] += o.blocks_[k];
    return *this;
  }
  BlockVector &operator-=(const BlockVector &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      blocks_[k] -= o.blocks_[k];
    return *this;
  }
  friend BlockVector operator+(BlockVector a, const BlockVector &b) {
    a += b;
    return a;
  }
  friend BlockVector operator-(BlockVector a, const BlockVector &b) {
    a -= b;
    return a;
  }

private:
  void require_same_shape(const BlockVector &o) const {
    if (!same_shape(o))
      throw ShapeMismatch("block vector shape mismatch");
  }
  std::vector<ComplexMatrix> blocks_;
};

namespace detail {
inline bool close_rel(double lhs, double rhs, double tol) {
  return std::abs(lhs - rhs) <=
         tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}
} // namespace detail

// Checks the three exact norm identities behind the sum-of-squares bounds,
// for a family a_1..a_N with N >= 3:
//   (i)   ‖Σ a_s‖² + (N−2) Σ ‖a_s‖²  =  Σ_{s<t} ‖a_s+a_t‖²
//   (ii)  N Σ ‖a_s‖²                 =  ‖Σ a_s‖² + Σ_{s<t} ‖a_s−a_t‖²
//   (iii) (2N−2) Σ ‖a_s‖²            =  Σ_{s<t} ‖a_s−a_t‖² + Σ_{s<t} ‖a_s+a_t‖²
// These are algebraic identities; a failure means a numeric bug upstream.
inline bool block_norm_identities_check(const std::vector<BlockVector> &a,
                                        double tol = 1e-9) {
  if (a.size() < 3)
    throw ShapeMismatch("need at least 3 block vectors");
  for (const auto &v : a)
    if (!v.same_shape(a.front()))
      throw ShapeMismatch("block vector family with unequal shapes");

  const double n = static_cast<double>(a.size());
  double sum_sq = 0.0;
  BlockVector total = a.front();
  sum_sq += a.front().norm2();
  for (std::size_t s = 1; s < a.size(); ++s) {
    total += a[s];
    sum_sq += a[s].norm2();
  }
  double pair_plus_sq = 0.0, pair_minus_sq = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t) {
      pair_plus_sq += (a[s] + a[t]).norm2();
      pair_minus_sq += (a[s] - a[t]).norm2();
    }

  const bool id1 =
      detail::close_rel(total.norm2() + (n - 2.0) * sum_sq, pair_plus_sq, tol);
  const bool id2 =
      detail::close_rel(n * sum_sq, total.norm2() + pair_minus_sq, tol);
  const bool id3 = detail::close_rel((2.0 * n - 2.0) * sum_sq,
                                     pair_minus_sq + pair_plus_sq, tol);
  return id1 && id2 && id3;
}

// Generalized Hlawka inequality for N >= 3:
//   Σ ‖a_s‖  >=  (1/(N−2)) ( Σ_{s<t} ‖a_s+a_t‖ − ‖Σ a_s‖ )
inline bool hlawka_check(const std::vector<BlockVector> &a,
                         double slack = 1e-9) {
  if (a.size() < 3)
    throw ShapeMismatch("need at least 3 block vectors");
  double lhs = 0.0, pair_plus = 0.0;
  BlockVector total = a.front();
  lhs += a.front().norm();
  for (std::size_t s = 1; s < a.size(); ++s) {
    total += a[s];
    lhs += a[s].norm();
  }
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t)
      pair_plus += (a[s] + a[t]).norm();
  const double rhs =
      (pair_plus - total.norm()) / (static_cast<double>(a.size()) - 2.0);
  return lhs >= rhs - slack * std::max(1.0, std::abs(rhs));
}

} // namespace skewbounds
