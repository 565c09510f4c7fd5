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

#include "kgsim/oracles.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "kgsim/error.hpp"

namespace kgsim {

namespace {

Eigen::VectorXd component_potential(const LatticeModel &model, Component component) {
    const double shift = component == Component::Particle ? model.units.component_shift()
                                                          : -model.units.component_shift();
    Eigen::VectorXd v(static_cast<Eigen::Index>(model.potential.num_sites()));
    for (std::size_t j = 0; j < model.potential.num_sites(); ++j) {
        v(static_cast<Eigen::Index>(j)) = model.potential.site_values[j] + shift;
    }
    return v;
}

} // namespace

ComponentOracle::ComponentOracle(const LatticeModel &model, Component component)
    : num_qubits_(model.num_qubits) {
    model.validate();
    require(model.num_qubits <= kMaxComponentOracleQubits,
            "component oracle supports at most " + std::to_string(kMaxComponentOracleQubits) +
                " qubits, got " + std::to_string(model.num_qubits));

    const MomentumTable table = momentum_eigenvalues(model.num_qubits, model.convention, model.units.mass);
    const double kinetic_weight = kinetic_sign(component) * static_cast<double>(model.kinetic_applications);
    hamiltonian_ = kinetic_weight * kinetic_matrix(table);
    hamiltonian_.diagonal() += component_potential(model, component).cast<Complex>();

    const double asymmetry = (hamiltonian_ - hamiltonian_.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-12) {
        fail(ErrorCode::Numeric, "effective Hamiltonian is not Hermitian (deviation " +
                                     std::to_string(asymmetry) + ")");
    }
    // Symmetrize away rounding so the self-adjoint solver sees an exact Hermitian input.
    const Eigen::MatrixXcd hermitian = 0.5 * (hamiltonian_ + hamiltonian_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        fail(ErrorCode::Numeric, "eigendecomposition of the effective Hamiltonian failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd ComponentOracle::propagator(double t) const {
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
        phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
    }
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

StateVector ComponentOracle::evolve(const StateVector &initial, double t) const {
    require(initial.num_qubits() == num_qubits_, "oracle and state widths differ");
    return StateVector::from_eigen(num_qubits_, propagator(t) * initial.to_eigen());
}

FeshbachVillarsOracle::FeshbachVillarsOracle(const LatticeModel &model) {
    model.validate();
    require(model.num_qubits <= kMaxFeshbachVillarsQubits,
            "Feshbach-Villars oracle supports at most " + std::to_string(kMaxFeshbachVillarsQubits) +
                " qubits, got " + std::to_string(model.num_qubits));

    const MomentumTable table = momentum_eigenvalues(model.num_qubits, model.convention, model.units.mass);
    const Eigen::MatrixXcd k = kinetic_matrix(table);
    const Eigen::Index dim = k.rows();
    const double rest = model.units.rest_energy();

    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        v(j, j) = model.potential.site_values[static_cast<std::size_t>(j)];
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    // σ₃ + iσ₂ = [[1, 1], [−1, −1]]
    hamiltonian_.resize(2 * dim, 2 * dim);
    hamiltonian_.topLeftCorner(dim, dim) = k + rest * id + v;
    hamiltonian_.topRightCorner(dim, dim) = k;
    hamiltonian_.bottomLeftCorner(dim, dim) = -k;
    hamiltonian_.bottomRightCorner(dim, dim) = -k - rest * id + v;
}

Eigen::VectorXcd FeshbachVillarsOracle::eigenvalues() const {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(hamiltonian_, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorCode::Numeric, "eigenvalue computation of the Feshbach-Villars Hamiltonian failed");
    }
    Eigen::VectorXcd ev = solver.eigenvalues();
    std::sort(ev.data(), ev.data() + ev.size(), [](const Complex &a, const Complex &b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

Eigen::MatrixXcd FeshbachVillarsOracle::propagator(double t) const {
    const Eigen::MatrixXcd generator = Complex{0.0, -t} * hamiltonian_;
    return generator.exp();
}

} // namespace kgsim
