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
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbounds/quantum.hpp"
#include "skewbounds/skew.hpp"

namespace skewbounds {

//=========================================================================
// Permutation bookkeeping
//
// Every bound pairs the i-th Kraus operator of channel s as K^s[pi_s(i)]
// with one permutation pi_s per channel. A common relabeling of all
// channels only reindexes the i-sums, so pi_1 is fixed to the identity and
// the search space is (n!)^(N-1). Assignments are enumerated in
// lexicographic order (last channel fastest, permutations in lexicographic
// order); the first maximizer in that order wins ties.
//=========================================================================

struct PermSearchPolicy {
  std::size_t budget = 1'000'000; // assignments, not permutations
};

struct PermutationAssignment {
  std::vector<std::vector<std::size_t>> perms; // perms[0] = identity
};

inline std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline PermutationAssignment identity_assignment(std::size_t num_channels,
                                                 std::size_t n) {
  PermutationAssignment a;
  a.perms.assign(num_channels, identity_perm(n));
  return a;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p = identity_perm(n);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// iterates a value function over all assignments with perms[0] = identity;
// returns the maximum and its first lexicographic argmax
template <class ValueAt>
std::pair<double, PermutationAssignment>
maximize_over_assignments(std::size_t num_channels, std::size_t n,
                          const PermSearchPolicy &policy, ValueAt &&value_at) {
  const auto perms = all_permutations(n);
  std::size_t total = 1;
  for (std::size_t s = 1; s < num_channels; ++s) {
    if (total > policy.budget / perms.size())
      throw SearchBudgetExceeded(
          "search space of " + std::to_string(perms.size()) + "^" +
          std::to_string(num_channels - 1) + " assignments exceeds the budget "
          "of " + std::to_string(policy.budget));
    total *= perms.size();
  }

  PermutationAssignment current = identity_assignment(num_channels, n);
  std::vector<std::size_t> idx(num_channels, 0); // idx[0] stays 0
  bool have_best = false;
  double best = 0.0;
  PermutationAssignment best_assignment;
  while (true) {
    const double v = value_at(current);
    if (!have_best || v > best) {
      have_best = true;
      best = v;
      best_assignment = current;
    }
    // odometer, last channel fastest
    std::size_t s = num_channels;
    while (s-- > 1) {
      if (++idx[s] < perms.size()) {
        current.perms[s] = perms[idx[s]];
        break;
      }
      idx[s] = 0;
      current.perms[s] = perms[0];
    }
    if (s == 0)
      break;
  }
  return {best, best_assignment};
}

struct BoundContext {
  const ComplexMatrix *sqrt_rho;
  std::vector<const KrausChannel *> channels;
  std::size_t n; // common Kraus count

  std::size_t num_channels() const { return channels.size(); }
  const ComplexMatrix &op(std::size_t s, std::size_t i) const {
    return channels[s]->kraus()[i];
  }
};

inline BoundContext make_context(const DensityMatrix &rho,
                                 const std::vector<KrausChannel> &channels) {
  if (channels.empty())
    throw ShapeMismatch("empty channel list");
  BoundContext ctx;
  ctx.sqrt_rho = &rho.sqrt_rho();
  ctx.n = channels.front().n();
  for (const auto &ch : channels) {
    if (ch.dim() != rho.dim())
      throw ShapeMismatch("channel dimension does not match the state");
    if (ch.n() != ctx.n)
      throw ShapeMismatch("channels must share a common Kraus count here; "
                          "run normalize_channels first");
    ctx.channels.push_back(&ch);
  }
  return ctx;
}

inline void check_assignment(const BoundContext &ctx,
                             const PermutationAssignment &a) {
  if (a.perms.size() != ctx.num_channels())
    throw ShapeMismatch("assignment has wrong number of permutations");
  for (const auto &p : a.perms)
    if (p.size() != ctx.n)
      throw ShapeMismatch("permutation length differs from Kraus count");
}

// Σ_i I(K^s[pi_s(i)] + sign K^t[pi_t(i)]) for one channel pair
inline double pair_term(const BoundContext &ctx, const PermutationAssignment &a,
                        std::size_t s, std::size_t t, double sign) {
  double acc = 0.0;
  for (std::size_t i = 0; i < ctx.n; ++i) {
    ComplexMatrix m = ctx.op(s, a.perms[s][i]);
    if (sign > 0)
      m += ctx.op(t, a.perms[t][i]);
    else
      m -= ctx.op(t, a.perms[t][i]);
    acc += skew_of(*ctx.sqrt_rho, m);
  }
  return acc;
}

// I(Σ_s K^s[pi_s(i)]) for one slot i
inline double stacked_term(const BoundContext &ctx,
                           const PermutationAssignment &a, std::size_t i) {
  ComplexMatrix m = ctx.op(0, a.perms[0][i]);
  for (std::size_t s = 1; s < ctx.num_channels(); ++s)
    m += ctx.op(s, a.perms[s][i]);
  return skew_of(*ctx.sqrt_rho, m);
}

inline double sqrt0(double v) { return std::sqrt(std::max(v, 0.0)); }

} // namespace detail

enum class Lb3Sign {
  plus_minus, // direct i-sum over K^s + K^t, bracketed roots over K^s - K^t
  minus_plus  // direct i-sum over K^s - K^t, bracketed roots over K^s + K^t
};

inline const char *to_string(Lb3Sign s) {
  return s == Lb3Sign::plus_minus ? "plus_minus" : "minus_plus";
}

//=========================================================================
// Fixed-assignment bound values. These are the raw right-hand sides before
// permutation maximization; the relabeling/padding invariance checks probe
// them directly.
//=========================================================================

inline double lb1_value_at(const DensityMatrix &rho,
                           const std::vector<KrausChannel> &channels,
                           const PermutationAssignment &a) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 3)
    throw TooFewChannels("lb1 needs at least 3 channels");
  double sum_terms = 0.0, sum_roots = 0.0;
  for (std::size_t s = 0; s < ctx.num_channels(); ++s)
    for (std::size_t t = s + 1; t < ctx.num_channels(); ++t) {
      const double v = detail::pair_term(ctx, a, s, t, +1.0);
      sum_terms += v;
      sum_roots += detail::sqrt0(v);
    }
  return (sum_terms - sum_roots * sum_roots / ((nn - 1.0) * (nn - 1.0))) /
         (nn - 2.0);
}

inline double lb2_value_at(const DensityMatrix &rho,
                           const std::vector<KrausChannel> &channels,
                           const PermutationAssignment &a) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 2)
    throw TooFewChannels("lb2 needs at least 2 channels");
  double stacked = 0.0;
  for (std::size_t i = 0; i < ctx.n; ++i)
    stacked += detail::stacked_term(ctx, a, i);
  double sum_roots = 0.0;
  for (std::size_t s = 0; s < ctx.num_channels(); ++s)
    for (std::size_t t = s + 1; t < ctx.num_channels(); ++t)
      sum_roots += detail::sqrt0(detail::pair_term(ctx, a, s, t, -1.0));
  return (stacked + 2.0 * sum_roots * sum_roots / (nn * (nn - 1.0))) / nn;
}

inline double lb3_value_at(const DensityMatrix &rho,
                           const std::vector<KrausChannel> &channels,
                           const PermutationAssignment &a, Lb3Sign sign) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 2)
    throw TooFewChannels("lb3 needs at least 2 channels");
  const double direct_sign = (sign == Lb3Sign::plus_minus) ? +1.0 : -1.0;
  double direct = 0.0, sum_roots = 0.0;
  for (std::size_t s = 0; s < ctx.num_channels(); ++s)
    for (std::size_t t = s + 1; t < ctx.num_channels(); ++t) {
      direct += detail::pair_term(ctx, a, s, t, direct_sign);
      sum_roots += detail::sqrt0(detail::pair_term(ctx, a, s, t, -direct_sign));
    }
  return (direct + 2.0 * sum_roots * sum_roots / (nn * (nn - 1.0))) /
         (2.0 * nn - 2.0);
}

// per-slot variant of lb1: the square roots sit inside the i-sum
inline double lbbar1_value_at(const DensityMatrix &rho,
                              const std::vector<KrausChannel> &channels,
                              const PermutationAssignment &a) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 3)
    throw TooFewChannels("lbbar1 needs at least 3 channels");
  double total = 0.0;
  for (std::size_t i = 0; i < ctx.n; ++i) {
    double sum_terms = 0.0, sum_roots = 0.0;
    for (std::size_t s = 0; s < ctx.num_channels(); ++s)
      for (std::size_t t = s + 1; t < ctx.num_channels(); ++t) {
        ComplexMatrix m = ctx.op(s, a.perms[s][i]);
        m += ctx.op(t, a.perms[t][i]);
        const double v = detail::skew_of(*ctx.sqrt_rho, m);
        sum_terms += v;
        sum_roots += detail::sqrt0(v);
      }
    total += sum_terms - sum_roots * sum_roots / ((nn - 1.0) * (nn - 1.0));
  }
  return total / (nn - 2.0);
}

// per-slot variant of lb2
inline double lbbar2_value_at(const DensityMatrix &rho,
                              const std::vector<KrausChannel> &channels,
                              const PermutationAssignment &a) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 2)
    throw TooFewChannels("lbbar2 needs at least 2 channels");
  double total = 0.0;
  for (std::size_t i = 0; i < ctx.n; ++i) {
    double sum_roots = 0.0;
    for (std::size_t s = 0; s < ctx.num_channels(); ++s)
      for (std::size_t t = s + 1; t < ctx.num_channels(); ++t) {
        ComplexMatrix m = ctx.op(s, a.perms[s][i]);
        m -= ctx.op(t, a.perms[t][i]);
        sum_roots += detail::sqrt0(detail::skew_of(*ctx.sqrt_rho, m));
      }
    total += detail::stacked_term(ctx, a, i) +
             2.0 * sum_roots * sum_roots / (nn * (nn - 1.0));
  }
  return total / nn;
}

inline double thm2_rhs_value_at(const DensityMatrix &rho,
                                const std::vector<KrausChannel> &channels,
                                const PermutationAssignment &a) {
  const auto ctx = detail::make_context(rho, channels);
  detail::check_assignment(ctx, a);
  const double nn = static_cast<double>(ctx.num_channels());
  if (ctx.num_channels() < 3)
    throw TooFewChannels("the square-root bound needs at least 3 channels");
  double sum_roots = 0.0;
  for (std::size_t s = 0; s < ctx.num_channels(); ++s)
    for (std::size_t t = s + 1; t < ctx.num_channels(); ++t)
      sum_roots += detail::sqrt0(detail::pair_term(ctx, a, s, t, +1.0));
  double stacked = 0.0;
  for (std::size_t i = 0; i < ctx.n; ++i)
    stacked += detail::stacked_term(ctx, a, i);
  return (sum_roots - detail::sqrt0(stacked)) / (nn - 2.0);
}

//=========================================================================
// Channel-list plumbing
//=========================================================================

inline double sum_skew(const DensityMatrix &rho,
                       const std::vector<KrausChannel> &channels) {
  if (channels.empty())
    throw ShapeMismatch("empty channel list");
  double s = 0.0;
  for (const auto &ch : channels)
    s += skew_channel(rho, ch);
  return s;
}

// pads every channel with zero operators up to the largest Kraus count;
// the padded lists represent the same maps and add nothing to any skew sum
inline std::vector<KrausChannel>
normalize_channels(const std::vector<KrausChannel> &channels) {
  if (channels.empty())
    throw ShapeMismatch("empty channel list");
  const std::size_t d = channels.front().dim();
  std::size_t max_n = 0;
  for (const auto &ch : channels) {
    if (ch.dim() != d)
      throw ShapeMismatch("channels of different dimension in one scenario");
    max_n = std::max(max_n, ch.n());
  }
  std::vector<KrausChannel> out;
  out.reserve(channels.size());
  for (const auto &ch : channels) {
    if (ch.n() == max_n) {
      out.push_back(ch);
      continue;
    }
    std::vector<ComplexMatrix> ops = ch.kraus();
    ops.resize(max_n, ComplexMatrix::zero(d, d));
    out.emplace_back(ch.name(), std::move(ops));
  }
  return out;
}

//=========================================================================
// Maximized bounds
//=========================================================================

struct BoundResult {
  double value;
  PermutationAssignment argmax;
};

struct Lb3Result {
  double value;
  PermutationAssignment argmax;
  Lb3Sign sign;
};

struct Thm2Result {
  double lhs; // Σ_s sqrt(I(Φ_s))
  double rhs;
  PermutationAssignment argmax;
};

namespace detail {

template <class ValueAt>
BoundResult maximize_bound(const DensityMatrix &rho,
                           const std::vector<KrausChannel> &channels,
                           const PermSearchPolicy &policy, std::size_t min_n,
                           const char *what, ValueAt &&value_at) {
  if (channels.size() < min_n)
    throw TooFewChannels(std::string(what) + " needs at least " +
                         std::to_string(min_n) + " channels");
  const auto padded = normalize_channels(channels);
  auto [value, argmax] = maximize_over_assignments(
      padded.size(), padded.front().n(), policy,
      [&](const PermutationAssignment &a) { return value_at(rho, padded, a); });
  return {value, std::move(argmax)};
}

} // namespace detail

inline BoundResult bound_lb1(const DensityMatrix &rho,
                             const std::vector<KrausChannel> &channels,
                             const PermSearchPolicy &policy = {}) {
  return detail::maximize_bound(rho, channels, policy, 3, "lb1", lb1_value_at);
}

inline BoundResult bound_lb2(const DensityMatrix &rho,
                             const std::vector<KrausChannel> &channels,
                             const PermSearchPolicy &policy = {}) {
  return detail::maximize_bound(rho, channels, policy, 2, "lb2", lb2_value_at);
}

// both coherent sign readings are evaluated; the larger one is reported
inline Lb3Result bound_lb3(const DensityMatrix &rho,
                           const std::vector<KrausChannel> &channels,
                           const PermSearchPolicy &policy = {}) {
  if (channels.size() < 2)
    throw TooFewChannels("lb3 needs at least 2 channels");
  const auto padded = normalize_channels(channels);
  Lb3Result best{0.0, {}, Lb3Sign::plus_minus};
  bool have = false;
  for (Lb3Sign sign : {Lb3Sign::plus_minus, Lb3Sign::minus_plus}) {
    auto [value, argmax] = detail::maximize_over_assignments(
        padded.size(), padded.front().n(), policy,
        [&](const PermutationAssignment &a) {
          return lb3_value_at(rho, padded, a, sign);
        });
    if (!have || value > best.value) {
      have = true;
      best = {value, std::move(argmax), sign};
    }
  }
  return best;
}

inline BoundResult bound_lbbar1(const DensityMatrix &rho,
                                const std::vector<KrausChannel> &channels,
                                const PermSearchPolicy &policy = {}) {
  return detail::maximize_bound(rho, channels, policy, 3, "lbbar1",
                                lbbar1_value_at);
}

inline BoundResult bound_lbbar2(const DensityMatrix &rho,
                                const std::vector<KrausChannel> &channels,
                                const PermSearchPolicy &policy = {}) {
  return detail::maximize_bound(rho, channels, policy, 2, "lbbar2",
                                lbbar2_value_at);
}

inline Thm2Result bound_thm2(const DensityMatrix &rho,
                             const std::vector<KrausChannel> &channels,
                             const PermSearchPolicy &policy = {}) {
  if (channels.size() < 3)
    throw TooFewChannels("the square-root bound needs at least 3 channels");
  const auto padded = normalize_channels(channels);
  double lhs = 0.0;
  for (const auto &ch : padded)
    lhs += detail::sqrt0(skew_channel(rho, ch));
  auto [rhs, argmax] = detail::maximize_over_assignments(
      padded.size(), padded.front().n(), policy,
      [&](const PermutationAssignment &a) {
        return thm2_rhs_value_at(rho, padded, a);
      });
  return {lhs, rhs, std::move(argmax)};
}

// two-channel bound: max over one permutation and a global sign of
// ½ Σ_i I(K¹_i ± K²_{π(i)})
inline double bound_fu2(const DensityMatrix &rho, const KrausChannel &ch1,
                        const KrausChannel &ch2,
                        const PermSearchPolicy &policy = {}) {
  const auto padded = normalize_channels({ch1, ch2});
  const auto ctx = detail::make_context(rho, padded);
  const auto perms = detail::all_permutations(ctx.n);
  if (perms.size() > policy.budget)
    throw SearchBudgetExceeded("two-channel search space exceeds the budget");
  double best = 0.0;
  bool have = false;
  for (const auto &p : perms)
    for (double sign : {+1.0, -1.0}) {
      double acc = 0.0;
      for (std::size_t i = 0; i < ctx.n; ++i) {
        ComplexMatrix m = ctx.op(0, i);
        if (sign > 0)
          m += ctx.op(1, p[i]);
        else
          m -= ctx.op(1, p[i]);
        acc += detail::skew_of(*ctx.sqrt_rho, m);
      }
      acc *= 0.5;
      if (!have || acc > best) {
        have = true;
        best = acc;
      }
    }
  return best;
}

//=========================================================================
// Aggregate report
//=========================================================================

struct BoundReport {
  std::size_t num_channels = 0;
  double sum = 0.0;
  std::optional<double> lbbar1, lbbar2, lb1, lb2, lb3;
  std::optional<double> fu2;            // two-channel case only
  std::optional<double> thm2_lhs, thm2_rhs;
  std::optional<Lb3Sign> sign_choice_lb3;
  std::map<std::string, PermutationAssignment> argmax_perms;
};

// every lower bound must sit below the sum; the square-root bound below
// its own left-hand side
inline bool dominance_ok(const BoundReport &r, double tol = 1e-9) {
  for (const auto &b : {r.lbbar1, r.lbbar2, r.lb1, r.lb2, r.lb3, r.fu2})
    if (b && *b > r.sum + tol)
      return false;
  if (r.thm2_lhs && r.thm2_rhs && *r.thm2_rhs > *r.thm2_lhs + tol)
    return false;
  return true;
}

// all applicable bounds for one (state, channel list) instance; bounds
// that need three channels are left unset when N = 2, and the dedicated
// two-channel bound is reported instead
inline BoundReport full_report(const DensityMatrix &rho,
                               const std::vector<KrausChannel> &channels,
                               const PermSearchPolicy &policy = {}) {
  if (channels.size() < 2)
    throw TooFewChannels("a report needs at least 2 channels");
  const auto padded = normalize_channels(channels);
  BoundReport r;
  r.num_channels = padded.size();
  r.sum = sum_skew(rho, padded);

  auto lb2r = bound_lb2(rho, padded, policy);
  r.lb2 = lb2r.value;
  r.argmax_perms["lb2"] = std::move(lb2r.argmax);

  auto lb3r = bound_lb3(rho, padded, policy);
  r.lb3 = lb3r.value;
  r.sign_choice_lb3 = lb3r.sign;
  r.argmax_perms["lb3"] = std::move(lb3r.argmax);

  auto lbbar2r = bound_lbbar2(rho, padded, policy);
  r.lbbar2 = lbbar2r.value;
  r.argmax_perms["lbbar2"] = std::move(lbbar2r.argmax);

  if (padded.size() >= 3) {
    auto lb1r = bound_lb1(rho, padded, policy);
    r.lb1 = lb1r.value;
    r.argmax_perms["lb1"] = std::move(lb1r.argmax);

    auto lbbar1r = bound_lbbar1(rho, padded, policy);
    r.lbbar1 = lbbar1r.value;
    r.argmax_perms["lbbar1"] = std::move(lbbar1r.argmax);

    auto t2 = bound_thm2(rho, padded, policy);
    r.thm2_lhs = t2.lhs;
    r.thm2_rhs = t2.rhs;
    r.argmax_perms["thm2"] = std::move(t2.argmax);
  } else {
    r.fu2 = bound_fu2(rho, padded[0], padded[1], policy);
  }
  return r;
}

// single-Kraus specialization: with one operator per channel there is
// nothing to permute and every bound collapses to a closed form
inline BoundReport unitary_bounds(const DensityMatrix &rho,
                                  const std::vector<UnitaryChannel> &unitaries) {
  const std::size_t nch = unitaries.size();
  if (nch < 2)
    throw TooFewChannels("unitary bounds need at least 2 channels");
  const ComplexMatrix &sr = rho.sqrt_rho();
  const double nn = static_cast<double>(nch);

  std::vector<const ComplexMatrix *> us;
  for (const auto &u : unitaries) {
    if (u.dim() != rho.dim())
      throw ShapeMismatch("unitary dimension does not match the state");
    us.push_back(&u.u());
  }

  BoundReport r;
  r.num_channels = nch;
  double lhs_roots = 0.0;
  ComplexMatrix total = *us[0];
  for (std::size_t s = 0; s < nch; ++s) {
    const double v = detail::skew_of(sr, *us[s]);
    r.sum += v;
    lhs_roots += detail::sqrt0(v);
    if (s > 0)
      total += *us[s];
  }

  double plus_sum = 0.0, plus_roots = 0.0;
  double minus_sum = 0.0, minus_roots = 0.0;
  for (std::size_t s = 0; s < nch; ++s)
    for (std::size_t t = s + 1; t < nch; ++t) {
      const double p = detail::skew_of(sr, *us[s] + *us[t]);
      const double m = detail::skew_of(sr, *us[s] - *us[t]);
      plus_sum += p;
      plus_roots += detail::sqrt0(p);
      minus_sum += m;
      minus_roots += detail::sqrt0(m);
    }
  const double stacked = detail::skew_of(sr, total);

  r.lb2 = (stacked + 2.0 * minus_roots * minus_roots / (nn * (nn - 1.0))) / nn;
  r.lbbar2 = r.lb2;
  const double lb3_pm =
      (plus_sum + 2.0 * minus_roots * minus_roots / (nn * (nn - 1.0))) /
      (2.0 * nn - 2.0);
  const double lb3_mp =
      (minus_sum + 2.0 * plus_roots * plus_roots / (nn * (nn - 1.0))) /
      (2.0 * nn - 2.0);
  r.lb3 = std::max(lb3_pm, lb3_mp);
  r.sign_choice_lb3 =
      (lb3_pm >= lb3_mp) ? Lb3Sign::plus_minus : Lb3Sign::minus_plus;
  if (nch >= 3) {
    r.lb1 = (plus_sum - plus_roots * plus_roots / ((nn - 1.0) * (nn - 1.0))) /
            (nn - 2.0);
    r.lbbar1 = r.lb1;
    r.thm2_lhs = lhs_roots;
    r.thm2_rhs = (plus_roots - detail::sqrt0(stacked)) / (nn - 2.0);
  } else {
    // two unitaries: the dedicated two-channel bound applies
    const double fu_plus = 0.5 * detail::skew_of(sr, *us[0] + *us[1]);
    const double fu_minus = 0.5 * detail::skew_of(sr, *us[0] - *us[1]);
    r.fu2 = std::max(fu_plus, fu_minus);
  }

  const auto trivial = identity_assignment(nch, 1);
  for (const char *k : {"lb2", "lb3", "lbbar2"})
    r.argmax_perms[k] = trivial;
  if (nch >= 3)
    for (const char *k : {"lb1", "lbbar1", "thm2"})
      r.argmax_perms[k] = trivial;
  return r;
}

} // namespace skewbounds
