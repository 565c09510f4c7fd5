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

#include "kgsim/kg_evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "kgsim/error.hpp"

namespace kgsim {

namespace {

bool all_zero(const std::vector<double> &v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

void append_kinetic_block(Circuit &c, const DiagonalSpec &kinetic, int applications) {
    if (all_zero(kinetic.phases)) {
        return;
    }
    const int n = c.num_qubits;
    for (int i = 0; i < applications; ++i) {
        c.append(inverse_qft_circuit(n));
        c.add(gates::SiteDiagonalPhase{kinetic.phases});
        c.append(qft_circuit(n));
    }
}

void append_diagonal(Circuit &c, const DiagonalSpec &d) {
    if (!all_zero(d.phases)) {
        c.add(gates::SiteDiagonalPhase{d.phases});
    }
}

} // namespace

PotentialProfile PotentialProfile::sigma_z_barrier(int num_qubits, double v0) {
    require(num_qubits >= 1 && num_qubits <= kMaxStateQubits, "qubit count out of range");
    PotentialProfile p;
    p.v0 = v0;
    p.preset = BarrierPreset::SigmaZ;
    p.site_values.resize(std::size_t{1} << num_qubits);
    for (std::size_t j = 0; j < p.site_values.size(); ++j) {
        p.site_values[j] = (j & 1U) ? -v0 : v0;
    }
    return p;
}

PotentialProfile PotentialProfile::barrier_at(int num_qubits, std::uint64_t site, double v0) {
    require(num_qubits >= 1 && num_qubits <= kMaxStateQubits, "qubit count out of range");
    const std::size_t dim = std::size_t{1} << num_qubits;
    require(site < dim, "barrier site " + std::to_string(site) + " outside the lattice");
    PotentialProfile p;
    p.v0 = v0;
    p.preset = BarrierPreset::ExplicitSites;
    p.site_values.assign(dim, 0.0);
    p.site_values[site] = v0;
    return p;
}

PotentialProfile PotentialProfile::explicit_sites(std::vector<double> values) {
    PotentialProfile p;
    p.preset = BarrierPreset::ExplicitSites;
    p.v0 = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    p.site_values = std::move(values);
    return p;
}

PotentialProfile PotentialProfile::shifted(double offset) const {
    PotentialProfile p = *this;
    for (auto &v : p.site_values) {
        v += offset;
    }
    return p;
}

void LatticeModel::validate() const {
    require(num_qubits >= 1 && num_qubits <= kMaxMomentumQubits,
            "lattice qubit count must be in [1, " + std::to_string(kMaxMomentumQubits) + "]");
    require(potential.num_sites() == (std::size_t{1} << num_qubits),
            "potential has " + std::to_string(potential.num_sites()) + " sites, lattice has " +
                std::to_string(std::size_t{1} << num_qubits));
    require(kinetic_applications == 1 || kinetic_applications == 2,
            "kinetic_applications must be 1 or 2");
    require(std::isfinite(units.mass) && units.mass > 0.0, "mass must be positive");
    for (double v : potential.site_values) {
        require(std::isfinite(v), "potential values must be finite");
    }
}

MomentumTable momentum_eigenvalues(int num_qubits, MomentumConvention convention, double mass) {
    require(num_qubits >= 1 && num_qubits <= kMaxMomentumQubits,
            "momentum grid supports 1.." + std::to_string(kMaxMomentumQubits) + " qubits, got " +
                std::to_string(num_qubits));
    require(mass > 0.0, "mass must be positive");

    MomentumTable t;
    t.num_qubits = num_qubits;
    t.mass = mass;
    t.convention = convention;
    const std::int64_t dim = std::int64_t{1} << num_qubits;
    const std::int64_t half = dim / 2;
    const double unit = 2.0 * std::numbers::pi / static_cast<double>(dim);
    t.momenta.resize(static_cast<std::size_t>(dim));
    t.kinetic_diagonal.resize(static_cast<std::size_t>(dim));
    for (std::int64_t j = 0; j < dim; ++j) {
        std::int64_t k = j;
        if (j > half) {
            k = convention == MomentumConvention::Paper ? half - j : j - dim;
        }
        const double p = unit * static_cast<double>(k);
        t.momenta[static_cast<std::size_t>(j)] = p;
        t.kinetic_diagonal[static_cast<std::size_t>(j)] = p * p / (2.0 * mass);
    }
    return t;
}

DiagonalSpec kinetic_phase(const MomentumTable &table, double dt, Component component) {
    DiagonalSpec d{table.num_qubits, {}};
    d.phases.reserve(table.kinetic_diagonal.size());
    const double sign = kinetic_sign(component);
    for (double k : table.kinetic_diagonal) {
        d.phases.push_back(-sign * k * dt);
    }
    return d;
}

DiagonalSpec potential_phase(const PotentialProfile &profile, const UnitSystem &units, double dt,
                             Component component) {
    const std::size_t dim = profile.num_sites();
    require(dim >= 2 && std::has_single_bit(dim), "potential must cover 2^n sites");
    const int n = std::countr_zero(dim);
    const double shift = component == Component::Particle ? units.component_shift() : -units.component_shift();
    DiagonalSpec d{n, {}};
    d.phases.reserve(dim);
    for (double v : profile.site_values) {
        d.phases.push_back(-(v + shift) * dt);
    }
    return d;
}

Circuit trotter_step_circuit(const LatticeModel &model, Component component, double dt,
                             Splitting splitting) {
    model.validate();
    const int n = model.num_qubits;
    const MomentumTable table = momentum_eigenvalues(n, model.convention, model.units.mass);
    const DiagonalSpec kinetic = kinetic_phase(table, dt, component);

    Circuit c(n, "trotter-step");
    if (splitting == Splitting::PaperOrder) {
        append_diagonal(c, potential_phase(model.potential, model.units, dt, component));
        append_kinetic_block(c, kinetic, model.kinetic_applications);
    } else {
        const DiagonalSpec half = potential_phase(model.potential, model.units, dt / 2.0, component);
        append_diagonal(c, half);
        append_kinetic_block(c, kinetic, model.kinetic_applications);
        append_diagonal(c, half);
    }
    return c;
}

Circuit evolution_circuit(const LatticeModel &model, Component component, const EvolutionParams &params) {
    require(params.trotter_steps >= 1, "trotter_steps must be at least 1");
    const Circuit step = trotter_step_circuit(
        model, component, params.total_time / static_cast<double>(params.trotter_steps), params.splitting);
    Circuit c(model.num_qubits, "evolution");
    for (int i = 0; i < params.trotter_steps; ++i) {
        c.append(step);
    }
    return c;
}

StateVector evolve(const StateVector &initial, const LatticeModel &model, Component component,
                   const EvolutionParams &params) {
    require(params.trotter_steps >= 1, "trotter_steps must be at least 1");
    require(std::isfinite(params.total_time), "evolution time must be finite");
    require(initial.num_qubits() == model.num_qubits,
            "initial state has " + std::to_string(initial.num_qubits()) + " qubits, lattice has " +
                std::to_string(model.num_qubits));
    const Circuit step = trotter_step_circuit(
        model, component, params.total_time / static_cast<double>(params.trotter_steps), params.splitting);

    StateVector state = initial;
    for (int i = 0; i < params.trotter_steps; ++i) {
        apply(state, step);
    }
    const double drift = std::abs(state.norm() - initial.norm());
    if (!(drift <= 1e-10)) {
        fail(ErrorCode::Numeric, "norm drifted by " + std::to_string(drift) + " during evolution");
    }
    return state;
}

Eigen::MatrixXcd dft_matrix(int num_qubits) {
    require(num_qubits >= 1 && num_qubits <= kMaxDenseQubits, "DFT width out of range");
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::MatrixXcd f(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            // Reduce kj mod dim first so the angle stays exact for large grids.
            const auto kj = static_cast<double>((k * j) % dim);
            f(k, j) = std::polar(scale, 2.0 * std::numbers::pi * kj / static_cast<double>(dim));
        }
    }
    return f;
}

Eigen::MatrixXcd kinetic_matrix(const MomentumTable &table) {
    const Eigen::MatrixXcd f = dft_matrix(table.num_qubits);
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(table.kinetic_diagonal.size()));
    for (std::size_t j = 0; j < table.kinetic_diagonal.size(); ++j) {
        diag(static_cast<Eigen::Index>(j)) = table.kinetic_diagonal[j];
    }
    return f * diag.asDiagonal() * f.adjoint();
}

} // namespace kgsim
