/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Acceptance suite: one line per criterion, nonzero exit status when any
// criterion fails. Two sub-checks are expected to fail and say so in their
// detail text; see README ("Known reference-data discrepancies").

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "reference_bounds.hpp"
#include "skewbounds/random.hpp"
#include "skewbounds/scenario.hpp"

using namespace skewbounds;

namespace {

constexpr double kPi6 = 0.5235987755982988;
constexpr double kPi4 = 0.7853981633974483;
constexpr double kPi2 = 1.5707963267948966;

std::filesystem::path scenario_dir() { return SKEWBOUNDS_SCENARIO_DIR; }
std::filesystem::path golden_dir() { return SKEWBOUNDS_GOLDEN_DIR; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &msg) {
    if (!cond) {
      ok = false;
      if (!detail.empty())
        detail += "; ";
      detail += msg;
    }
  }
  void expect_near(const char *name, double got, double want, double tol) {
    expect(std::abs(got - want) <= tol, std::string(name) + " expected " +
                                            fmt(want) + " computed " +
                                            fmt(got));
  }
};

// ---- criterion 1: the q = 0.5 comparison table ------------------------

Check criterion_table() {
  Check c;
  const Scenario sc = load_scenario(scenario_dir() / "table1.json");
  struct Row {
    double theta;
    double lbbar1, lbbar2, lb1, lb2, lb3, sum;
  };
  const Row rows[] = {
      {kPi6, 0.133979, 0.204181, 0.127677, 0.208898, 0.20891, 0.208947},
      {kPi4, 0.194803, 0.264726, 0.182753, 0.271447, 0.271447, 0.271447},
      {kPi2, 0.342466, 0.383224, 0.324177, 0.393068, 0.393913, 0.396447}};
  for (const auto &row : rows) {
    const BoundReport r = report_at(sc, EvalPoint{row.theta, std::nullopt});
    const std::string tag = "theta=" + fmt(row.theta) + " ";
    c.expect_near((tag + "lbbar1").c_str(), *r.lbbar1, row.lbbar1, 1e-5);
    c.expect_near((tag + "lbbar2").c_str(), *r.lbbar2, row.lbbar2, 1e-5);
    c.expect_near((tag + "lb1").c_str(), *r.lb1, row.lb1, 1e-5);
    c.expect_near((tag + "lb2").c_str(), *r.lb2, row.lb2, 1e-5);
    c.expect_near((tag + "lb3").c_str(), *r.lb3, row.lb3, 1e-5);
    c.expect_near((tag + "sum").c_str(), r.sum, row.sum, 1e-5);
  }
  return c;
}

// ---- criterion 2: spot values at q = 0.1, theta = pi/2 ----------------

Check criterion_spot() {
  Check c;
  const Scenario sc = load_scenario(scenario_dir() / "spot_q01.json");
  const EvalPoint point{kPi2, std::nullopt};
  const BoundReport r = report_at(sc, point);
  c.expect_near("sum", r.sum, 0.475658, 1e-5);
  c.expect_near("lb1", *r.lb1, 0.449135, 1e-5);
  c.expect_near("lbbar1", *r.lbbar1, 0.475658, 1e-5);
  c.expect_near("lb2", *r.lb2, 0.42873, 1e-5);
  c.expect_near("lb3", *r.lb3, 0.440462, 1e-5);
  c.expect_near("lbbar2", *r.lbbar2, 0.425827, 1e-5);
  // lbbar2 resolved value is pinned in the golden file at 1e-9
  const auto golden = read_csv(golden_dir() / "spot_q01.csv");
  c.expect(golden.size() == 1, "golden file must hold exactly one row");
  if (golden.size() == 1) {
    const SweepRow row = make_row(sc, point, r);
    c.expect(std::abs(*row.lbbar2 - *golden[0].lbbar2) <= 1e-9,
             "lbbar2 drifted from the golden row");
    c.expect(std::abs(*row.lbbar1 - *golden[0].lbbar1) <= 1e-9,
             "lbbar1 drifted from the golden row");
    c.expect(std::abs(row.sum.value() - golden[0].sum.value()) <= 1e-9,
             "sum drifted from the golden row");
  }
  return c;
}

// ---- criterion 3: unitary trio sweep -----------------------------------

Check criterion_unitary_sweep() {
  Check c;
  const Scenario sc = load_scenario(scenario_dir() / "fig2_unitary.json");
  const auto rows = run_sweep(sc);
  c.expect(rows.size() == 100, "expected a 100-point sweep");
  const double expected = 1.0 - std::sqrt(2.0) / 2.0;
  double worst_sum = 0.0;
  bool order_ok = true;
  for (const auto &row : rows) {
    worst_sum = std::max(worst_sum, std::abs(*row.sum - expected));
    if (!(*row.lb3 >= *row.lb1 && *row.lb3 >= *row.lb2))
      order_ok = false;
  }
  c.expect(worst_sum <= 1e-9,
           "sum deviates from 1-sqrt(2)/2 by " + fmt(worst_sum));
  c.expect(order_ok, "lb3 must dominate lb1 and lb2 at every grid point");
  return c;
}

// ---- criterion 4: dominance on random instances ------------------------

Check criterion_dominance() {
  Check c;
  Rng rng(20250809);
  std::size_t violations = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t nch = 3 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    std::vector<KrausChannel> chans;
    for (std::size_t s = 0; s < nch; ++s)
      chans.push_back(random_cptp(rng, d, 1 + rng.index(3)));
    const BoundReport r = full_report(rho, chans);
    bool ok = dominance_ok(r, 1e-9);
    if (r.thm2_lhs && *r.thm2_rhs > *r.thm2_lhs + 1e-9)
      ok = false;
    if (!ok)
      ++violations;
  }
  c.expect(violations == 0,
           std::to_string(violations) + "/200 instances violated dominance");
  return c;
}

// ---- criterion 5: Kraus-representation invariance ----------------------

Check criterion_kraus_invariance() {
  Check c;
  Rng rng(77001);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t n = 2 + rng.index(2);
    const DensityMatrix rho = random_density(rng, d);
    const KrausChannel ch = random_cptp(rng, d, n);
    const ComplexMatrix u = random_unitary(rng, n);
    std::vector<ComplexMatrix> mixed(n, ComplexMatrix::zero(d, d));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        mixed[j] += u(j, i) * ch.kraus()[i];
    const KrausChannel chp("mixed", std::move(mixed));
    worst = std::max(worst,
                     std::abs(skew_channel(rho, ch) - skew_channel(rho, chp)));
  }
  c.expect(worst <= 1e-9, "worst mixing deviation " + fmt(worst));
  return c;
}

// ---- criterion 6: complementarity and the variance identity ------------

Check criterion_complementarity() {
  Check c;
  Rng rng(88001);
  std::size_t comp_failures = 0;
  double comp_worst = 0.0, var_worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng.index(2);
    const DensityMatrix psi = random_pure(rng, d);
    KrausChannel ch = [&]() {
      if (d == 2) {
        switch (t % 4) {
        case 0:
          return phase_damping(rng.uniform(0.0, 0.999));
        case 1:
          return amplitude_damping(rng.uniform(0.0, 0.999));
        case 2:
          return bit_flip(rng.uniform(0.0, 0.999));
        default:
          return random_cptp(rng, d, 2 + rng.index(2));
        }
      }
      return random_cptp(rng, d, 2 + rng.index(2));
    }();
    const double dev =
        std::abs(skew_channel(psi, ch) + fidelity_pure(psi, ch) - 1.0);
    comp_worst = std::max(comp_worst, dev);
    if (dev > 1e-9)
      ++comp_failures;
    const UnitaryChannel u("u", random_unitary(rng, d));
    var_worst = std::max(var_worst, std::abs(unitary_variance_pure(psi, u) -
                                             skew_operator(psi, u.u())));
  }
  c.expect(comp_failures == 0,
           std::to_string(comp_failures) +
               "/100 complementarity deviations above 1e-9 (worst " +
               fmt(comp_worst) +
               "; holds only when sum_i K_i K_i^dag fixes the state)");
  c.expect(var_worst <= 1e-10,
           "variance identity worst deviation " + fmt(var_worst));
  return c;
}

// ---- criterion 7: norm identities and the Hlawka inequality -------------

Check criterion_identities() {
  Check c;
  Rng rng(99001);
  std::size_t failures = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t blocks = 1 + rng.index(3);
    const std::size_t family = 3 + rng.index(3);
    std::vector<BlockVector> a;
    for (std::size_t s = 0; s < family; ++s) {
      std::vector<ComplexMatrix> bs;
      for (std::size_t b = 0; b < blocks; ++b)
        bs.push_back(random_matrix(rng, d));
      a.emplace_back(std::move(bs));
    }
    if (!block_norm_identities_check(a, 1e-9) || !hlawka_check(a, 1e-9))
      ++failures;
  }
  c.expect(failures == 0,
           std::to_string(failures) + "/100 block-vector families failed");
  return c;
}

// ---- criterion 8: exhaustive permutation-search soundness ---------------

Check criterion_search_soundness() {
  Check c;
  Rng rng(11001);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const DensityMatrix rho = random_density(rng, 2);
    std::vector<KrausChannel> chans;
    for (int s = 0; s < 3; ++s)
      chans.push_back(random_cptp(rng, 2, 2));
    const auto k = refbounds::op_lists(normalize_channels(chans));
    const auto gap = [&](double engine, double reference) {
      worst = std::max(worst, std::abs(engine - reference));
    };
    gap(bound_lb1(rho, chans).value, refbounds::max_lb1(rho, k));
    gap(bound_lb2(rho, chans).value, refbounds::max_lb2(rho, k));
    gap(bound_lb3(rho, chans).value, refbounds::max_lb3(rho, k));
    gap(bound_lbbar1(rho, chans).value, refbounds::max_lbbar1(rho, k));
    gap(bound_lbbar2(rho, chans).value, refbounds::max_lbbar2(rho, k));
    gap(bound_thm2(rho, chans).rhs, refbounds::max_thm2_rhs(rho, k));
  }
  c.expect(worst <= 1e-12, "worst gap to the free enumeration " + fmt(worst));
  return c;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "reference comparison table (q=0.5, three angles, tol 1e-5)",
       criterion_table},
      {2, "spot reference values (q=0.1, theta=pi/2, tol 1e-5)",
       criterion_spot},
      {3, "unitary trio sweep: constant sum and lb3 dominance",
       criterion_unitary_sweep},
      {4, "bound dominance on 200 random instances", criterion_dominance},
      {5, "Kraus-representation invariance (100 triples)",
       criterion_kraus_invariance},
      {6, "pure-state complementarity and variance identity (100 states)",
       criterion_complementarity},
      {7, "block-vector norm identities and Hlawka inequality (100 families)",
       criterion_identities},
      {8, "permutation search equals free exhaustive enumeration",
       criterion_search_soundness},
  };

  int failures = 0;
  for (const auto &criterion : criteria) {
    Check c;
    try {
      c = criterion.run();
    } catch (const std::exception &e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s%s%s\n", c.ok ? "PASS" : "FAIL", criterion.id,
                criterion.name, c.detail.empty() ? "" : " -- ",
                c.detail.c_str());
    if (!c.ok)
      ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures;
}
