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

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kgsim/builders.hpp"
#include "kgsim/circuit.hpp"
#include "kgsim/state_vector.hpp"

namespace kgsim {

/// Natural units: ħ = 1, c = √2, so with the default mass 0.5 the rest energy
/// m·c² is exactly 1 and the component potentials are V ± 1.
struct UnitSystem {
    double hbar = 1.0;
    double c = std::sqrt(2.0);
    double mass = 0.5;
    /// When false the ±mc² shift is dropped from the component potentials.
    bool rest_energy_shift = true;

    [[nodiscard]] double rest_energy() const { return mass * c * c; }
    /// Shift added to V for the particle and subtracted for the anti-particle.
    [[nodiscard]] double component_shift() const { return rest_energy_shift ? rest_energy() : 0.0; }
};

enum class BarrierPreset { SigmaZ, ExplicitSites };

/// Site potential V(x_j) over the 2^n lattice.
struct PotentialProfile {
    std::vector<double> site_values;
    double v0 = 11.0;
    BarrierPreset preset = BarrierPreset::ExplicitSites;

    [[nodiscard]] std::size_t num_sites() const noexcept { return site_values.size(); }

    /// V₀·(+1, −1, +1, −1, …): σ_z on qubit 0, identity elsewhere.
    static PotentialProfile sigma_z_barrier(int num_qubits, double v0);
    /// V₀ on a single site, zero elsewhere.
    static PotentialProfile barrier_at(int num_qubits, std::uint64_t site, double v0);
    static PotentialProfile explicit_sites(std::vector<double> values);

    /// Same profile with `offset` added to every site.
    [[nodiscard]] PotentialProfile shifted(double offset) const;
};

enum class MomentumConvention {
    /// p_j = (2π/2^n)·j for j ≤ 2^{n−1}, (2π/2^n)·(2^{n−1} − j) above.
    Paper,
    /// FFT frequency order: p_j = (2π/2^n)·(j − 2^n) above 2^{n−1}.
    StandardFft,
};

struct MomentumTable {
    int num_qubits = 0;
    double mass = 0.5;
    MomentumConvention convention = MomentumConvention::Paper;
    std::vector<double> momenta;
    /// p_j² / 2m
    std::vector<double> kinetic_diagonal;
};

enum class Component { Particle, AntiParticle };

/// +1 for the particle (e^{−iK dt}), −1 for the anti-particle (e^{+iK dt}).
[[nodiscard]] constexpr double kinetic_sign(Component c) noexcept {
    return c == Component::Particle ? 1.0 : -1.0;
}

enum class Splitting {
    /// potential, then the kinetic block: first order.
    PaperOrder,
    /// half potential, kinetic block, half potential: second order.
    Strang,
};

/// Everything the propagator needs apart from the time step.
struct LatticeModel {
    int num_qubits = 2;
    UnitSystem units;
    PotentialProfile potential;
    MomentumConvention convention = MomentumConvention::Paper;
    /// How many times the momentum-space phase is applied per step (1 or 2).
    int kinetic_applications = 2;

    void validate() const;
};

struct EvolutionParams {
    double total_time = 0.0;
    int trotter_steps = 10;
    Splitting splitting = Splitting::PaperOrder;
};

inline constexpr int kMaxMomentumQubits = 12;

[[nodiscard]] MomentumTable momentum_eigenvalues(int num_qubits, MomentumConvention convention,
                                                 double mass = 0.5);

/// θ_j = ∓ (p_j²/2m)·dt; minus for the particle.
[[nodiscard]] DiagonalSpec kinetic_phase(const MomentumTable &table, double dt, Component component);

/// θ_x = −V_i(x)·dt with V₁ = V + mc² (particle) or V₂ = V − mc² (anti-particle).
[[nodiscard]] DiagonalSpec potential_phase(const PotentialProfile &profile, const UnitSystem &units,
                                           double dt, Component component);

/// One Trotter step of length dt. Blocks whose diagonal is identically zero
/// are omitted, so dt = 0 yields an empty circuit.
[[nodiscard]] Circuit trotter_step_circuit(const LatticeModel &model, Component component, double dt,
                                           Splitting splitting);

/// r steps of trotter_step_circuit with dt = t/r.
[[nodiscard]] Circuit evolution_circuit(const LatticeModel &model, Component component,
                                        const EvolutionParams &params);

/// Applies the step circuit r times. Throws ErrorCode::Numeric if the norm
/// drifts by more than 1e-10.
[[nodiscard]] StateVector evolve(const StateVector &initial, const LatticeModel &model,
                                 Component component, const EvolutionParams &params);

/// Dense kinetic operator K = F·diag(p²/2m)·F†, F the unitary DFT matrix.
[[nodiscard]] Eigen::MatrixXcd kinetic_matrix(const MomentumTable &table);

/// Unitary DFT matrix with entries e^{+2πi kj/N}/√N, built directly from the
/// formula (independent of any circuit).
[[nodiscard]] Eigen::MatrixXcd dft_matrix(int num_qubits);

} // namespace kgsim
