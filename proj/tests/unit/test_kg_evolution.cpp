// Copyright 2026 The kgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "kgsim/builders.hpp"
#include "kgsim/config.hpp"
#include "kgsim/error.hpp"
#include "kgsim/kg_evolution.hpp"
#include "kgsim/oracles.hpp"
#include "test_util.hpp"

using namespace kgsim;
using kgsim::test::max_abs_diff;
using kgsim::test::random_state;
using kgsim::test::state_distance;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

LatticeModel barrier_model(int n = 2, std::uint64_t site = 1) {
    LatticeModel m;
    m.num_qubits = n;
    m.potential = PotentialProfile::barrier_at(n, site, 11.0);
    return m;
}

LatticeModel free_model(int n, bool shift) {
    LatticeModel m;
    m.num_qubits = n;
    m.units.rest_energy_shift = shift;
    m.potential = PotentialProfile::explicit_sites(std::vector<double>(std::size_t{1} << n, 0.0));
    return m;
}

} // namespace

TEST_CASE("momentum grids") {
    SUBCASE("n = 2") {
        const auto t = momentum_eigenvalues(2, MomentumConvention::Paper, 0.5);
        const std::vector<double> p{0.0, kPi / 2, kPi, -kPi / 2};
        for (int j = 0; j < 4; ++j) {
            CHECK(t.momenta[j] == doctest::Approx(p[j]).epsilon(1e-15));
        }
        const double a = kPi * kPi / 4;
        CHECK(t.kinetic_diagonal == std::vector<double>{0.0, a, 4 * a, a});
    }
    SUBCASE("n = 1") {
        const auto t = momentum_eigenvalues(1, MomentumConvention::Paper);
        CHECK(t.momenta[0] == 0.0);
        CHECK(t.momenta[1] == doctest::Approx(kPi));
    }
    SUBCASE("n = 3, both conventions") {
        const auto paper = momentum_eigenvalues(3, MomentumConvention::Paper);
        const auto fft = momentum_eigenvalues(3, MomentumConvention::StandardFft);
        const std::vector<double> shared{0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
        for (int j = 0; j < 5; ++j) {
            CHECK(paper.momenta[j] == doctest::Approx(shared[j]));
            CHECK(fft.momenta[j] == doctest::Approx(shared[j]));
        }
        const std::vector<double> paper_tail{-kPi / 4, -kPi / 2, -3 * kPi / 4};
        const std::vector<double> fft_tail{-3 * kPi / 4, -kPi / 2, -kPi / 4};
        for (int j = 0; j < 3; ++j) {
            CHECK(paper.momenta[5 + j] == doctest::Approx(paper_tail[j]));
            CHECK(fft.momenta[5 + j] == doctest::Approx(fft_tail[j]));
        }
    }
    SUBCASE("the conventions agree for n <= 2") {
        for (int n = 1; n <= 2; ++n) {
            CHECK(momentum_eigenvalues(n, MomentumConvention::Paper).momenta ==
                  momentum_eigenvalues(n, MomentumConvention::StandardFft).momenta);
        }
    }
    CHECK_THROWS_AS((void)momentum_eigenvalues(0, MomentumConvention::Paper), Error);
    CHECK_THROWS_AS((void)momentum_eigenvalues(2, MomentumConvention::Paper, 0.0), Error);
}

TEST_CASE("kinetic phases") {
    const auto table = momentum_eigenvalues(2, MomentumConvention::Paper, 0.5);
    CHECK(kinetic_phase(table, 0.0, Component::Particle).phases == std::vector<double>(4, -0.0));
    const double a = kPi * kPi / 4;
    const auto particle = kinetic_phase(table, 1.0, Component::Particle);
    CHECK(particle.phases == std::vector<double>{-0.0, -a, -4 * a, -a});
    const auto anti = kinetic_phase(table, 1.0, Component::AntiParticle);
    for (int j = 0; j < 4; ++j) {
        CHECK(anti.phases[j] == -particle.phases[j]);
    }
}

TEST_CASE("potential phases") {
    UnitSystem units;
    CHECK(units.rest_energy() == doctest::Approx(1.0).epsilon(1e-15));

    SUBCASE("zero potential is a uniform phase") {
        const auto d = potential_phase(PotentialProfile::explicit_sites({0, 0, 0, 0}), units, 2.5,
                                       Component::Particle);
        for (double th : d.phases) {
            CHECK(th == doctest::Approx(-2.5).epsilon(1e-15));
        }
    }
    SUBCASE("sigma-z preset") {
        const auto d = potential_phase(PotentialProfile::sigma_z_barrier(2, 11.0), units, 1.0,
                                       Component::Particle);
        const double expected[] = {-12.0, 10.0, -12.0, 10.0};
        for (int j = 0; j < 4; ++j) {
            CHECK(d.phases[j] == doctest::Approx(expected[j]).epsilon(1e-15));
        }
    }
    SUBCASE("explicit barrier") {
        const auto d = potential_phase(PotentialProfile::explicit_sites({0, 11, 0, 0}), units, 1.0,
                                       Component::Particle);
        const double expected[] = {-1.0, -12.0, -1.0, -1.0};
        for (int j = 0; j < 4; ++j) {
            CHECK(d.phases[j] == doctest::Approx(expected[j]).epsilon(1e-15));
        }
    }
    SUBCASE("antiparticle uses the opposite rest-energy shift") {
        const auto d = potential_phase(PotentialProfile::explicit_sites({0, 11, 0, 0}), units, 1.0,
                                       Component::AntiParticle);
        const double expected[] = {1.0, -10.0, 1.0, 1.0};
        for (int j = 0; j < 4; ++j) {
            CHECK(d.phases[j] == doctest::Approx(expected[j]).epsilon(1e-15));
        }
    }
    SUBCASE("shift can be disabled") {
        units.rest_energy_shift = false;
        const auto d = potential_phase(PotentialProfile::explicit_sites({0, 3, 0, 0}), units, 1.0,
                                       Component::Particle);
        CHECK(d.phases[0] == 0.0);
        CHECK(d.phases[1] == -3.0);
    }
}

TEST_CASE("potential profiles") {
    const auto b = PotentialProfile::barrier_at(2, 1, 11.0);
    CHECK(b.site_values == std::vector<double>{0, 11, 0, 0});
    CHECK(PotentialProfile::sigma_z_barrier(2, 11.0).site_values == std::vector<double>{11, -11, 11, -11});
    CHECK(b.shifted(7.0).site_values == std::vector<double>{7, 18, 7, 7});
    CHECK_THROWS_AS((void)PotentialProfile::barrier_at(2, 4, 1.0), Error);
}

TEST_CASE("step circuit structure") {
    const auto model = barrier_model();
    const auto step = trotter_step_circuit(model, Component::Particle, 0.1, Splitting::PaperOrder);
    CHECK(count_gates<gates::SiteDiagonalPhase>(step) == 3);
    CHECK(count_gates<gates::Swap>(step) == 4);
    CHECK(count_gates<gates::Hadamard>(step) == 8);
    CHECK(std::holds_alternative<gates::SiteDiagonalPhase>(step.gates.front()));

    const auto strang = trotter_step_circuit(model, Component::Particle, 0.1, Splitting::Strang);
    CHECK(count_gates<gates::SiteDiagonalPhase>(strang) == 4);
    CHECK(std::holds_alternative<gates::SiteDiagonalPhase>(strang.gates.back()));

    auto single = model;
    single.kinetic_applications = 1;
    CHECK(count_gates<gates::SiteDiagonalPhase>(
              trotter_step_circuit(single, Component::Particle, 0.1, Splitting::PaperOrder)) == 2);

    CHECK(trotter_step_circuit(model, Component::Particle, 0.0, Splitting::PaperOrder).empty());

    auto bad = model;
    bad.kinetic_applications = 3;
    CHECK_THROWS_AS((void)trotter_step_circuit(bad, Component::Particle, 0.1, Splitting::PaperOrder), Error);
}

TEST_CASE("zero time step is the identity") {
    const auto u = dense_matrix(trotter_step_circuit(barrier_model(), Component::Particle, 0.0, Splitting::Strang));
    CHECK(max_abs_diff(u, Eigen::MatrixXcd::Identity(4, 4)) < 1e-12);
}

TEST_CASE("free step is diagonal in the momentum basis") {
    const double dt = 0.37;
    const auto model = free_model(2, false);
    const auto table = momentum_eigenvalues(2, MomentumConvention::Paper, 0.5);
    for (const auto comp : {Component::Particle, Component::AntiParticle}) {
        const auto u = dense_matrix(trotter_step_circuit(model, comp, dt, Splitting::PaperOrder));
        const Eigen::MatrixXcd f = dft_matrix(2);
        const Eigen::MatrixXcd in_momentum = f.adjoint() * u * f;
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
        for (int j = 0; j < 4; ++j) {
            expected(j, j) = std::exp(-I * kinetic_sign(comp) * 2.0 * table.kinetic_diagonal[j] * dt);
        }
        CHECK(max_abs_diff(in_momentum, expected) < 1e-12);
    }
}

TEST_CASE("step circuit approximates the component propagator") {
    const auto model = barrier_model();
    const ComponentOracle oracle(model, Component::Particle);
    double previous = 0.0;
    for (const double dt : {0.02, 0.01}) {
        const auto u = dense_matrix(trotter_step_circuit(model, Component::Particle, dt, Splitting::PaperOrder));
        const double err = max_abs_diff(u, oracle.propagator(dt));
        CHECK(err < dt);
        if (previous > 0.0) {
            CHECK(err < previous / 3.0);
        }
        previous = err;
    }
}

TEST_CASE("evolve") {
    const auto model = barrier_model();
    std::mt19937_64 rng(17);
    const auto psi = random_state(2, rng);

    CHECK(state_distance(evolve(psi, model, Component::Particle, {0.0, 5, Splitting::PaperOrder}), psi) < 1e-15);

    for (const auto split : {Splitting::PaperOrder, Splitting::Strang}) {
        const double t = 1.7;
        const int r = 6;
        const auto full = evolve(psi, model, Component::AntiParticle, {t, 2 * r, split});
        const auto half = evolve(psi, model, Component::AntiParticle, {t / 2, r, split});
        const auto twice = evolve(half, model, Component::AntiParticle, {t / 2, r, split});
        CHECK(state_distance(full, twice) < 1e-12);
    }

    const auto circuit = evolution_circuit(model, Component::Particle, {2.0, 4, Splitting::Strang});
    CHECK(state_distance(apply_circuit(psi, circuit),
                         evolve(psi, model, Component::Particle, {2.0, 4, Splitting::Strang})) < 1e-12);

    CHECK_THROWS_AS((void)evolve(psi, model, Component::Particle, {1.0, 0, Splitting::PaperOrder}), Error);
    CHECK_THROWS_AS((void)evolve(basis_state(3, 0), model, Component::Particle, {1.0, 1, Splitting::PaperOrder}),
                    Error);
}

TEST_CASE("constant potential offsets only change a global phase") {
    const auto model = barrier_model();
    auto shifted = model;
    shifted.potential = model.potential.shifted(7.0);
    const auto psi = basis_state(2, 0);
    for (const double t : {1.0, 4.0, 10.0}) {
        const auto a = site_probabilities(evolve(psi, model, Component::Particle, {t, 10, Splitting::PaperOrder}));
        const auto b = site_probabilities(evolve(psi, shifted, Component::Particle, {t, 10, Splitting::PaperOrder}));
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(a[j] - b[j]) <= 1e-12);
        }
    }
}

TEST_CASE("direct Case A evolution to t = 10 over the parameter grid") {
    // From a basis state the splitting does not change probabilities.
    const auto base = load_config(KGSIM_SOURCE_DIR "/configs/case_a.json");
    int beyond = 0;
    for (const int kapp : {1, 2}) {
        for (const bool sigma_z : {false, true}) {
            auto model = base.model;
            model.kinetic_applications = kapp;
            if (sigma_z) {
                model.potential = PotentialProfile::sigma_z_barrier(2, 11.0);
            }
            const auto p = site_probabilities(
                evolve(basis_state(2, 0), model, Component::Particle, {10.0, 10, Splitting::PaperOrder}));
            const auto peak = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
            beyond += peak == 2 ? 1 : 0;
            if (kapp == 1 && !sigma_z) {
                CHECK(peak == 2);
            }
        }
    }
    CHECK(beyond >= 1);
}

TEST_CASE("kinetic matrix and dft") {
    const auto table = momentum_eigenvalues(2, MomentumConvention::Paper, 0.5);
    const Eigen::MatrixXcd k = kinetic_matrix(table);
    CHECK(max_abs_diff(k, k.adjoint()) < 1e-12);
    const Eigen::MatrixXcd f = dft_matrix(3);
    CHECK(max_abs_diff(f * f.adjoint(), Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
}
