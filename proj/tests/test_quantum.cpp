/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <catch2/catch_amalgamated.hpp>

#include "skewbounds/quantum.hpp"
#include "skewbounds/random.hpp"

using namespace skewbounds;
using Catch::Approx;

TEST_CASE("bloch_state", "[quantum]") {
  SECTION("maximally mixed") {
    const DensityMatrix rho = bloch_state({0.0, 0.0, 0.0});
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    REQUIRE(distance(rho.rho(), half) < 1e-15);
    REQUIRE_FALSE(is_pure(rho));
  }
  SECTION("north pole is |0><0|") {
    const DensityMatrix rho = bloch_state({0.0, 0.0, 1.0});
    REQUIRE(rho.rho()(0, 0).real() == Approx(1.0));
    REQUIRE(std::abs(rho.rho()(1, 1)) < 1e-15);
    REQUIRE(is_pure(rho));
  }
  SECTION("eigenvalues (1 +- |r|)/2") {
    const double c = std::sqrt(3.0) / 2.0;
    const double th = 1.5707963267948966;
    const DensityMatrix rho =
        bloch_state({c * std::cos(th), c * std::sin(th), 0.0});
    const auto eig = hermitian_eigen(rho.rho());
    REQUIRE(eig.eigenvalues[0] == Approx((1.0 - c) / 2.0).margin(1e-12));
    REQUIRE(eig.eigenvalues[1] == Approx((1.0 + c) / 2.0).margin(1e-12));
  }
  SECTION("cached square root squares back") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
      std::array<double, 3> r{rng.normal(), rng.normal(), rng.normal()};
      const double len =
          std::max(std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]), 1e-9);
      const double target = rng.uniform(0.0, 1.0);
      for (auto &x : r)
        x *= target / len;
      const DensityMatrix rho = bloch_state(r);
      REQUIRE(distance(rho.sqrt_rho() * rho.sqrt_rho(), rho.rho()) <= 1e-9);
    }
  }
  SECTION("pure exactly on the sphere") {
    REQUIRE(is_pure(bloch_state({1.0, 0.0, 0.0})));
    REQUIRE_FALSE(is_pure(bloch_state({0.99, 0.0, 0.0})));
  }
  SECTION("overlong vector") {
    REQUIRE_THROWS_AS(bloch_state({2.0, 0.0, 0.0}), BlochVectorTooLong);
  }
}

TEST_CASE("preset channels", "[quantum]") {
  SECTION("phase damping at q = 0 is the identity plus a zero operator") {
    const KrausChannel ch = phase_damping(0.0);
    REQUIRE(ch.n() == 2);
    REQUIRE(distance(ch.kraus()[0], ComplexMatrix::identity(2)) < 1e-15);
    REQUIRE(frobenius_norm(ch.kraus()[1]) == 0.0);
  }
  SECTION("phase damping at q = 0.5") {
    const KrausChannel ch = phase_damping(0.5);
    REQUIRE(std::abs(ch.kraus()[1](0, 0)) == 0.0);
    REQUIRE(ch.kraus()[1](1, 1).real() == Approx(std::sqrt(0.5)));
  }
  SECTION("amplitude damping entries") {
    const KrausChannel ch = amplitude_damping(0.1);
    REQUIRE(ch.kraus()[1](0, 1).real() == Approx(std::sqrt(0.1)));
    REQUIRE(ch.kraus()[0](1, 1).real() == Approx(std::sqrt(0.9)));
  }
  SECTION("bit flip at q = 0.5 has unit-norm operators") {
    const KrausChannel ch = bit_flip(0.5);
    REQUIRE(frobenius_norm(ch.kraus()[0]) == Approx(1.0));
    REQUIRE(frobenius_norm(ch.kraus()[1]) == Approx(1.0));
  }
  SECTION("completeness over a q grid") {
    for (double q : {0.0, 0.1, 0.25, 0.5, 0.75, 0.999}) {
      for (const auto &ch :
           {phase_damping(q), amplitude_damping(q), bit_flip(q)}) {
        ComplexMatrix gram(2, 2);
        for (const auto &k : ch.kraus())
          gram += k.dagger() * k;
        REQUIRE(distance(gram, ComplexMatrix::identity(2)) <= 1e-12);
      }
    }
  }
  SECTION("q outside [0, 1)") {
    REQUIRE_THROWS_AS(phase_damping(1.0), ParamOutOfRange);
    REQUIRE_THROWS_AS(amplitude_damping(-0.01), ParamOutOfRange);
    REQUIRE_THROWS_AS(bit_flip(1.5), ParamOutOfRange);
  }
}

TEST_CASE("pauli rotations", "[quantum]") {
  const double a = 0.39269908169872414; // pi/8
  const double c = std::cos(a), s = std::sin(a);
  SECTION("x rotation") {
    const UnitaryChannel u = pauli_rotation_unitary(PauliAxis::x, a);
    const ComplexMatrix expected = ComplexMatrix::from_rows(
        {{c, cplx(0.0, s)}, {cplx(0.0, s), c}});
    REQUIRE(distance(u.u(), expected) < 1e-15);
  }
  SECTION("y rotation") {
    const UnitaryChannel u = pauli_rotation_unitary(PauliAxis::y, a);
    const ComplexMatrix expected =
        ComplexMatrix::from_rows({{c, s}, {-s, c}});
    REQUIRE(distance(u.u(), expected) < 1e-15);
  }
  SECTION("z rotation") {
    const UnitaryChannel u = pauli_rotation_unitary(PauliAxis::z, a);
    REQUIRE(u.u()(0, 0) == cplx(c, s));
    REQUIRE(u.u()(1, 1) == cplx(c, -s));
    REQUIRE(std::abs(u.u()(0, 1)) == 0.0);
  }
  SECTION("zero angle is the identity") {
    const UnitaryChannel u = pauli_rotation_unitary(PauliAxis::x, 0.0);
    REQUIRE(distance(u.u(), ComplexMatrix::identity(2)) < 1e-15);
  }
}

TEST_CASE("apply_channel", "[quantum]") {
  SECTION("identity channel leaves the state alone") {
    const DensityMatrix rho = bloch_state({0.3, -0.2, 0.4});
    const DensityMatrix out = apply_channel(phase_damping(0.0), rho);
    REQUIRE(distance(out.rho(), rho.rho()) < 1e-14);
  }
  SECTION("amplitude damping on |1><1|") {
    const DensityMatrix one = bloch_state({0.0, 0.0, -1.0});
    for (double q : {0.1, 0.35, 0.8}) {
      const DensityMatrix out = apply_channel(amplitude_damping(q), one);
      REQUIRE(out.rho()(0, 0).real() == Approx(q).margin(1e-12));
      REQUIRE(out.rho()(1, 1).real() == Approx(1.0 - q).margin(1e-12));
      REQUIRE(std::abs(out.rho()(0, 1)) < 1e-14);
    }
  }
  SECTION("maximally mixed state is a fixed point of phase damping") {
    const DensityMatrix mixed = bloch_state({0.0, 0.0, 0.0});
    const DensityMatrix out = apply_channel(phase_damping(0.4), mixed);
    REQUIRE(distance(out.rho(), mixed.rho()) < 1e-14);
  }
  SECTION("trace, hermiticity and positivity on random input") {
    Rng rng(22);
    for (int t = 0; t < 40; ++t) {
      const std::size_t d = 2 + rng.index(3);
      const DensityMatrix rho = random_density(rng, d);
      const KrausChannel ch = random_cptp(rng, d, 1 + rng.index(3));
      const DensityMatrix out = apply_channel(ch, rho);
      REQUIRE(std::abs(out.rho().trace() - cplx(1.0, 0.0)) <= 1e-10);
      REQUIRE(hermiticity_defect(out.rho()) <= 1e-10);
      REQUIRE(hermitian_eigen(out.rho()).eigenvalues.front() >= -1e-9);
    }
  }
  SECTION("dimension mismatch") {
    Rng rng(23);
    const DensityMatrix rho = random_density(rng, 3);
    REQUIRE_THROWS_AS(apply_channel(phase_damping(0.2), rho), ShapeMismatch);
  }
}

TEST_CASE("as_kraus", "[quantum]") {
  SECTION("identity") {
    const KrausChannel ch =
        as_kraus(UnitaryChannel("id", ComplexMatrix::identity(2)));
    REQUIRE(ch.n() == 1);
    REQUIRE(distance(ch.kraus()[0], ComplexMatrix::identity(2)) == 0.0);
  }
  SECTION("z rotation") {
    const UnitaryChannel u =
        pauli_rotation_unitary(PauliAxis::z, 0.39269908169872414);
    const KrausChannel ch = as_kraus(u);
    REQUIRE(ch.n() == 1);
    REQUIRE(distance(ch.kraus()[0], u.u()) == 0.0);
  }
}

TEST_CASE("channel validation", "[quantum]") {
  SECTION("non-CPTP operator list") {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    REQUIRE_THROWS_AS(KrausChannel("bad", {half}), ValidationError);
  }
  SECTION("mixed operator dimensions") {
    REQUIRE_THROWS_AS(KrausChannel("bad", {ComplexMatrix::identity(2),
                                           ComplexMatrix::zero(3, 3)}),
                      ShapeMismatch);
  }
  SECTION("non-unitary matrix") {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    REQUIRE_THROWS_AS(UnitaryChannel("bad", half), ValidationError);
  }
  SECTION("random kraus channels pass the certificate") {
    Rng rng(24);
    for (int t = 0; t < 30; ++t) {
      const std::size_t d = 2 + rng.index(3);
      const KrausChannel ch = random_cptp(rng, d, 1 + rng.index(3));
      ComplexMatrix gram(d, d);
      for (const auto &k : ch.kraus())
        gram += k.dagger() * k;
      REQUIRE(distance(gram, ComplexMatrix::identity(d)) <= 1e-8);
    }
  }
}

TEST_CASE("density matrix validation", "[quantum]") {
  SECTION("trace must be one") {
    REQUIRE_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)),
                      ValidationError);
  }
  SECTION("must be Hermitian") {
    REQUIRE_THROWS_AS(
        DensityMatrix(ComplexMatrix::from_rows({{0.5, 0.3}, {0.0, 0.5}})),
        NotHermitian);
  }
  SECTION("must be positive semidefinite") {
    REQUIRE_THROWS_AS(
        DensityMatrix(ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})),
        NotPSD);
  }
}
