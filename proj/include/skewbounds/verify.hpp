/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <utility>
#include <string>
#include <vector>

#include "skewbounds/block_vector.hpp"
#include "skewbounds/bounds.hpp"
#include "skewbounds/random.hpp"
#include "skewbounds/scenario.hpp"
#include "skewbounds/skew.hpp"

namespace skewbounds {

// Randomized property suite behind the `verify` subcommand. Every trial of
// every property reduces to a deviation ratio: residual divided by the
// property's tolerance. A trial passes when the ratio stays at or below 1.
// Given the same seed the whole run, including the printed summary, is
// byte-identical.

struct VerifyHooks {
  bool corrupt_cptp = false; // negative control: breaks one Kraus entry
};

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0; // largest deviation ratio seen
};

struct VerificationSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyResult> properties;

  bool all_passed() const {
    for (const auto &p : properties)
      if (p.failures > 0)
        return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "seed=" + std::to_string(seed) +
                      " trials=" + std::to_string(trials) + "\n";
    char line[160];
    for (const auto &p : properties) {
      std::snprintf(line, sizeof(line), "[%s] %-26s failures=%zu/%zu worst=%.3e\n",
                    p.failures == 0 ? "PASS" : "FAIL", p.name.c_str(),
                    p.failures, p.trials, p.worst);
      out += line;
    }
    std::size_t failing = 0;
    for (const auto &p : properties)
      if (p.failures > 0)
        ++failing;
    std::snprintf(line, sizeof(line), "RESULT: %s (%zu/%zu properties failed)\n",
                  failing == 0 ? "PASS" : "FAIL", failing, properties.size());
    out += line;
    return out;
  }
};

namespace detail {

inline double ratio(double residual, double tol) { return residual / tol; }

inline double rel_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline ComplexMatrix reconstruct(const HermitianEigen &eig) {
  const std::size_t d = eig.eigenvalues.size();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        acc += eig.eigenvectors(i, k) * eig.eigenvalues[k] *
               std::conj(eig.eigenvectors(j, k));
      m(i, j) = acc;
    }
  return m;
}

inline std::vector<std::size_t> random_perm(Rng &rng, std::size_t n) {
  auto p = identity_perm(n);
  for (std::size_t i = n; i > 1; --i)
    std::swap(p[i - 1], p[rng.index(i)]);
  return p;
}

inline PermutationAssignment random_assignment(Rng &rng, std::size_t nch,
                                               std::size_t n) {
  auto a = identity_assignment(nch, n);
  for (std::size_t s = 1; s < nch; ++s)
    a.perms[s] = random_perm(rng, n);
  return a;
}

// maximum over all assignments including a free first permutation; the
// engine fixes the first one, so agreement here confirms the reduction
template <class ValueAt>
double enumerate_free_max(std::size_t nch, std::size_t n, ValueAt &&value_at) {
  const auto perms = all_permutations(n);
  std::vector<std::size_t> idx(nch, 0);
  PermutationAssignment a;
  a.perms.assign(nch, perms[0]);
  bool have = false;
  double best = 0.0;
  while (true) {
    const double v = value_at(a);
    if (!have || v > best) {
      have = true;
      best = v;
    }
    std::size_t s = nch;
    while (s-- > 0) {
      if (++idx[s] < perms.size()) {
        a.perms[s] = perms[idx[s]];
        break;
      }
      idx[s] = 0;
      a.perms[s] = perms[0];
    }
    if (s == std::size_t(-1))
      break;
  }
  return best;
}

} // namespace detail

inline VerificationSummary run_verification(std::uint64_t seed,
                                            std::size_t trials,
                                            const VerifyHooks &hooks = {}) {
  using Trial = std::function<double(Rng &)>; // returns deviation ratio

  VerificationSummary summary;
  summary.seed = seed;
  summary.trials = trials;

  const auto preset_by = [](std::size_t k, double q) {
    switch (k % 3) {
    case 0:
      return phase_damping(q);
    case 1:
      return amplitude_damping(q);
    default:
      return bit_flip(q);
    }
  };

  std::vector<std::pair<const char *, Trial>> properties;

  properties.emplace_back("eigen_reconstruction", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(5);
    const ComplexMatrix a = random_hermitian(rng, d);
    const auto eig = hermitian_eigen(a);
    const double scale = std::max(1.0, frobenius_norm(a));
    const double recon = distance(detail::reconstruct(eig), a) / scale;
    const double ortho = distance(eig.eigenvectors.dagger() * eig.eigenvectors,
                                  ComplexMatrix::identity(d));
    return detail::ratio(std::max(recon, ortho), 1e-10);
  });

  properties.emplace_back("psd_sqrt_consistency", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(4);
    const ComplexMatrix g = random_matrix(rng, d);
    const ComplexMatrix a = g * g.dagger();
    const ComplexMatrix s = psd_sqrt(a);
    const double scale = std::max(1.0, frobenius_norm(a));
    const double square = distance(s * s, a) / scale;
    const double commute = frobenius_norm(commutator(s, a)) / scale;
    const double herm = hermiticity_defect(s);
    return detail::ratio(std::max({square, commute, herm}), 1e-9);
  });

  properties.emplace_back("frobenius_norm_axioms", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(4);
    const ComplexMatrix x = random_matrix(rng, d);
    const ComplexMatrix y = random_matrix(rng, d);
    const cplx c = rng.cnormal();
    const double triangle =
        frobenius_norm(x + y) - (frobenius_norm(x) + frobenius_norm(y));
    const double homogeneity =
        std::abs(frobenius_norm(c * x) - std::abs(c) * frobenius_norm(x)) /
        std::max(1.0, std::abs(c) * frobenius_norm(x));
    return detail::ratio(std::max(triangle, homogeneity), 1e-12);
  });

  properties.emplace_back("block_norm_identities", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t blocks = 1 + rng.index(3);
    const std::size_t family = 3 + rng.index(2);
    std::vector<BlockVector> a;
    for (std::size_t s = 0; s < family; ++s) {
      std::vector<ComplexMatrix> bs;
      for (std::size_t b = 0; b < blocks; ++b)
        bs.push_back(random_matrix(rng, d));
      a.emplace_back(std::move(bs));
    }
    return block_norm_identities_check(a, 1e-9) ? 0.0 : 2.0;
  });

  properties.emplace_back("hlawka_inequality", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t family = 3 + rng.index(3);
    std::vector<BlockVector> a;
    for (std::size_t s = 0; s < family; ++s) {
      std::vector<ComplexMatrix> bs;
      for (std::size_t b = 0; b < 2; ++b)
        bs.push_back(random_matrix(rng, d));
      a.emplace_back(std::move(bs));
    }
    return hlawka_check(a, 1e-9) ? 0.0 : 2.0;
  });

  properties.emplace_back("cptp_completeness", [&, hooks](Rng &rng) {
    std::vector<ComplexMatrix> ops;
    if (rng.uniform() < 0.5) {
      ops = preset_by(rng.index(3), rng.uniform(0.0, 0.999)).kraus();
    } else {
      const std::size_t d = 2 + rng.index(3);
      ops = random_cptp(rng, d, 1 + rng.index(3)).kraus();
    }
    if (hooks.corrupt_cptp)
      ops.front()(0, 0) += 1e-3;
    const std::size_t d = ops.front().rows();
    ComplexMatrix gram(d, d);
    for (const auto &k : ops)
      gram += k.dagger() * k;
    return detail::ratio(distance(gram, ComplexMatrix::identity(d)), 1e-8);
  });

  properties.emplace_back("channel_output_valid", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const DensityMatrix rho = random_density(rng, d);
    const KrausChannel ch = random_cptp(rng, d, 1 + rng.index(3));
    const DensityMatrix out = apply_channel(ch, rho);
    const double trace_dev = std::abs(out.rho().trace() - cplx(1.0, 0.0));
    const double herm_dev = hermiticity_defect(out.rho());
    const double min_eig = hermitian_eigen(out.rho()).eigenvalues.front();
    return std::max({detail::ratio(trace_dev, 1e-10),
                     detail::ratio(herm_dev, 1e-10),
                     detail::ratio(std::max(0.0, -min_eig), 1e-9)});
  });

  properties.emplace_back("bloch_purity", [](Rng &rng) {
    std::array<double, 3> r{rng.normal(), rng.normal(), rng.normal()};
    const double len = std::max(
        std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]), 1e-12);
    const bool pure = rng.uniform() < 0.5;
    const double target = pure ? 1.0 : rng.uniform(0.0, 0.95);
    for (auto &x : r)
      x *= target / len;
    const DensityMatrix rho = bloch_state(r);
    if (is_pure(rho) != pure)
      return 2.0;
    if (!pure)
      return 0.0;
    const auto eig = hermitian_eigen(rho.rho());
    return detail::ratio(std::max(std::abs(eig.eigenvalues.front()),
                                  std::abs(eig.eigenvalues.back() - 1.0)),
                         1e-9);
  });

  properties.emplace_back("skew_nonnegative", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const DensityMatrix rho = random_density(rng, d);
    const double v = skew_operator(rho, random_matrix(rng, d));
    const double w = skew_channel(rho, random_cptp(rng, d, 1 + rng.index(3)));
    return (v >= 0.0 && w >= 0.0 && std::isfinite(v) && std::isfinite(w)) ? 0.0
                                                                          : 2.0;
  });

  properties.emplace_back("kraus_mixing_invariance", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    const std::size_t n = 2 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    const KrausChannel ch = random_cptp(rng, d, n);
    const ComplexMatrix u = random_unitary(rng, n);
    std::vector<ComplexMatrix> mixed(n, ComplexMatrix::zero(d, d));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        mixed[j] += u(j, i) * ch.kraus()[i];
    const KrausChannel chp("mixed", std::move(mixed));
    return detail::ratio(std::abs(skew_channel(rho, ch) - skew_channel(rho, chp)),
                         1e-9);
  });

  // Holds exactly when sum_i K_i K_i^dagger acts as the identity on the
  // state (unital channels in particular); amplitude damping does not, so
  // failures here are expected and reported as such.
  properties.emplace_back("pure_complementarity", [&](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    const DensityMatrix psi = random_pure(rng, d);
    KrausChannel ch = (d == 2 && rng.uniform() < 0.5)
                          ? preset_by(rng.index(3), rng.uniform(0.0, 0.999))
                          : random_cptp(rng, d, 2 + rng.index(2));
    const double i_val = skew_channel(psi, ch);
    const double f_val = fidelity_pure(psi, ch);
    return detail::ratio(std::abs(i_val + f_val - 1.0), 1e-9);
  });

  properties.emplace_back("variance_identity", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    const DensityMatrix psi = random_pure(rng, d);
    const UnitaryChannel u("u", random_unitary(rng, d));
    return detail::ratio(std::abs(unitary_variance_pure(psi, u) -
                                  skew_operator(psi, u.u())),
                         1e-10);
  });

  properties.emplace_back("phase_invariance", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const DensityMatrix rho = random_density(rng, d);
    const ComplexMatrix a = random_matrix(rng, d);
    const double phi = rng.uniform(0.0, 6.283185307179586);
    const ComplexMatrix b = cplx(std::cos(phi), std::sin(phi)) * a;
    const double va = skew_operator(rho, a);
    const double vb = skew_operator(rho, b);
    return detail::ratio(std::abs(va - vb) / std::max(1.0, va), 1e-12);
  });

  properties.emplace_back("bound_dominance", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t nch = 3 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    std::vector<KrausChannel> channels;
    for (std::size_t s = 0; s < nch; ++s)
      channels.push_back(random_cptp(rng, d, 1 + rng.index(3)));
    const BoundReport r = full_report(rho, channels);
    double worst = 0.0;
    for (const auto &b : {r.lbbar1, r.lbbar2, r.lb1, r.lb2, r.lb3})
      if (b)
        worst = std::max(worst, *b - r.sum);
    if (r.thm2_lhs && r.thm2_rhs)
      worst = std::max(worst, *r.thm2_rhs - *r.thm2_lhs);
    return detail::ratio(std::max(0.0, worst), 1e-9);
  });

  properties.emplace_back("perm_search_soundness", [](Rng &rng) {
    const DensityMatrix rho = random_density(rng, 2);
    std::vector<KrausChannel> channels;
    for (std::size_t s = 0; s < 3; ++s)
      channels.push_back(random_cptp(rng, 2, 2));
    const auto padded = normalize_channels(channels);
    double worst = 0.0;
    const auto compare = [&](double engine, auto &&value_at) {
      const double full = detail::enumerate_free_max(
          padded.size(), padded.front().n(),
          [&](const PermutationAssignment &a) { return value_at(a); });
      worst = std::max(worst, std::abs(engine - full));
    };
    compare(bound_lb1(rho, padded).value, [&](const PermutationAssignment &a) {
      return lb1_value_at(rho, padded, a);
    });
    compare(bound_lb2(rho, padded).value, [&](const PermutationAssignment &a) {
      return lb2_value_at(rho, padded, a);
    });
    const auto lb3 = bound_lb3(rho, padded);
    compare(lb3.value, [&](const PermutationAssignment &a) {
      return std::max(lb3_value_at(rho, padded, a, Lb3Sign::plus_minus),
                      lb3_value_at(rho, padded, a, Lb3Sign::minus_plus));
    });
    compare(bound_lbbar1(rho, padded).value,
            [&](const PermutationAssignment &a) {
              return lbbar1_value_at(rho, padded, a);
            });
    compare(bound_lbbar2(rho, padded).value,
            [&](const PermutationAssignment &a) {
              return lbbar2_value_at(rho, padded, a);
            });
    compare(bound_thm2(rho, padded).rhs, [&](const PermutationAssignment &a) {
      return thm2_rhs_value_at(rho, padded, a);
    });
    return detail::ratio(worst, 1e-12);
  });

  properties.emplace_back("relabeling_invariance", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    const std::size_t n = 2 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    std::vector<KrausChannel> channels;
    for (std::size_t s = 0; s < 3; ++s)
      channels.push_back(random_cptp(rng, d, n));
    const auto a = detail::random_assignment(rng, 3, n);
    const auto sigma = detail::random_perm(rng, n);
    PermutationAssignment b = a;
    for (auto &p : b.perms) {
      const auto orig = p;
      for (std::size_t i = 0; i < n; ++i)
        p[i] = orig[sigma[i]];
    }
    double worst = 0.0;
    const auto diff = [&](double x, double y) {
      worst = std::max(worst, std::abs(x - y));
    };
    diff(lb1_value_at(rho, channels, a), lb1_value_at(rho, channels, b));
    diff(lb2_value_at(rho, channels, a), lb2_value_at(rho, channels, b));
    diff(lb3_value_at(rho, channels, a, Lb3Sign::plus_minus),
         lb3_value_at(rho, channels, b, Lb3Sign::plus_minus));
    diff(lbbar1_value_at(rho, channels, a), lbbar1_value_at(rho, channels, b));
    diff(lbbar2_value_at(rho, channels, a), lbbar2_value_at(rho, channels, b));
    diff(thm2_rhs_value_at(rho, channels, a),
         thm2_rhs_value_at(rho, channels, b));
    return detail::ratio(worst, 1e-12);
  });

  properties.emplace_back("padding_invariance", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    const std::size_t n = 1 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    std::vector<KrausChannel> channels;
    for (std::size_t s = 0; s < 3; ++s)
      channels.push_back(random_cptp(rng, d, n));
    std::vector<KrausChannel> padded;
    for (const auto &ch : channels) {
      auto ops = ch.kraus();
      ops.push_back(ComplexMatrix::zero(d, d));
      padded.emplace_back(ch.name(), std::move(ops));
    }
    double worst = std::abs(sum_skew(rho, channels) - sum_skew(rho, padded));
    // extend an assignment by fixing the padded slot in place
    const auto a = detail::random_assignment(rng, 3, n);
    PermutationAssignment ext = a;
    for (auto &p : ext.perms)
      p.push_back(n);
    const auto diff = [&](double x, double y) {
      worst = std::max(worst, std::abs(x - y));
    };
    if (channels.size() >= 3) {
      diff(lb1_value_at(rho, channels, a), lb1_value_at(rho, padded, ext));
      diff(lbbar1_value_at(rho, channels, a), lbbar1_value_at(rho, padded, ext));
      diff(thm2_rhs_value_at(rho, channels, a),
           thm2_rhs_value_at(rho, padded, ext));
    }
    diff(lb2_value_at(rho, channels, a), lb2_value_at(rho, padded, ext));
    diff(lb3_value_at(rho, channels, a, Lb3Sign::minus_plus),
         lb3_value_at(rho, padded, ext, Lb3Sign::minus_plus));
    diff(lbbar2_value_at(rho, channels, a), lbbar2_value_at(rho, padded, ext));
    return detail::ratio(worst, 1e-12);
  });

  properties.emplace_back("unitary_specialization", [](Rng &rng) {
    const std::size_t d = 2 + rng.index(2);
    std::vector<UnitaryChannel> us;
    std::vector<KrausChannel> chans;
    for (std::size_t s = 0; s < 3; ++s) {
      us.emplace_back("u" + std::to_string(s), random_unitary(rng, d));
      chans.push_back(as_kraus(us.back()));
    }
    const DensityMatrix rho = random_density(rng, d);
    const BoundReport a = unitary_bounds(rho, us);
    const BoundReport b = full_report(rho, chans);
    double worst = std::abs(a.sum - b.sum);
    const auto diff = [&](const std::optional<double> &x,
                          const std::optional<double> &y) {
      if (x.has_value() != y.has_value())
        worst = std::max(worst, 1.0);
      else if (x)
        worst = std::max(worst, std::abs(*x - *y));
    };
    diff(a.lb1, b.lb1);
    diff(a.lb2, b.lb2);
    diff(a.lb3, b.lb3);
    diff(a.lbbar1, b.lbbar1);
    diff(a.lbbar2, b.lbbar2);
    diff(a.thm2_lhs, b.thm2_lhs);
    diff(a.thm2_rhs, b.thm2_rhs);
    return detail::ratio(worst, 1e-12);
  });

  properties.emplace_back("saturation_point", [](Rng &) {
    const double c = std::sqrt(3.0) / 2.0;
    const double th = 0.7853981633974483; // pi/4
    const DensityMatrix rho =
        bloch_state({c * std::cos(th), c * std::sin(th), 0.0});
    const std::vector<KrausChannel> chans{phase_damping(0.5),
                                          amplitude_damping(0.5), bit_flip(0.5)};
    const BoundReport r = full_report(rho, chans);
    const double worst =
        std::max(std::abs(*r.lb2 - r.sum), std::abs(*r.lb3 - r.sum));
    return detail::ratio(worst, 1e-5);
  });

  properties.emplace_back("csv_round_trip", [](Rng &rng) {
    std::vector<SweepRow> rows;
    for (std::size_t k = 0; k < 4; ++k) {
      SweepRow r;
      r.scenario_id = "prop";
      const auto maybe = [&](std::optional<double> &slot) {
        if (rng.uniform() < 0.8)
          slot = rng.normal() * std::pow(10.0, rng.uniform(-6.0, 6.0));
      };
      maybe(r.theta);
      maybe(r.q);
      maybe(r.sum);
      maybe(r.lbbar1);
      maybe(r.lbbar2);
      maybe(r.lb1);
      maybe(r.lb2);
      maybe(r.lb3);
      maybe(r.thm2_lhs);
      maybe(r.thm2_rhs);
      rows.push_back(std::move(r));
    }
    const auto parsed = parse_csv_string(csv_to_string(rows));
    if (parsed.size() != rows.size())
      return 2.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto check = [&](const std::optional<double> &a,
                             const std::optional<double> &b) {
        if (a.has_value() != b.has_value()) {
          worst = std::max(worst, 2e-11);
          return;
        }
        if (a)
          worst = std::max(
              worst, std::abs(*a - *b) / std::max(1e-300, std::abs(*a)));
      };
      const SweepRow &x = rows[k];
      const SweepRow &y = parsed[k];
      check(x.theta, y.theta);
      check(x.q, y.q);
      check(x.sum, y.sum);
      check(x.lbbar1, y.lbbar1);
      check(x.lbbar2, y.lbbar2);
      check(x.lb1, y.lb1);
      check(x.lb2, y.lb2);
      check(x.lb3, y.lb3);
      check(x.thm2_lhs, y.thm2_lhs);
      check(x.thm2_rhs, y.thm2_rhs);
    }
    return detail::ratio(worst, 1e-11);
  });

  for (std::size_t pi = 0; pi < properties.size(); ++pi) {
    PropertyResult result;
    result.name = properties[pi].first;
    result.trials = trials;
    Rng rng(seed * 6364136223846793005ULL +
            (pi + 1) * 1442695040888963407ULL);
    for (std::size_t t = 0; t < trials; ++t) {
      const double dev = properties[pi].second(rng);
      if (!(dev <= 1.0))
        ++result.failures;
      result.worst = std::max(result.worst, dev);
    }
    summary.properties.push_back(std::move(result));
  }
  return summary;
}

} // namespace skewbounds
