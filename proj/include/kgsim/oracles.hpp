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

#include <Eigen/Dense>

#include "kgsim/kg_evolution.hpp"

namespace kgsim {

inline constexpr int kMaxComponentOracleQubits = 8;
inline constexpr int kMaxFeshbachVillarsQubits = 7;

/// Exact dynamics of one decoupled component under the Hamiltonian its
/// Trotter circuit approximates:
///
///     H_eff = s·a·K + diag(V_i),   s = +1 particle / −1 anti-particle,
///                                  a = kinetic applications per step.
///
/// The eigendecomposition is computed once at construction; the object is
/// immutable afterwards and safe to share between threads.
class ComponentOracle {
  public:
    ComponentOracle(const LatticeModel &model, Component component);

    [[nodiscard]] const Eigen::MatrixXcd &hamiltonian() const noexcept { return hamiltonian_; }
    [[nodiscard]] const Eigen::VectorXd &eigenvalues() const noexcept { return eigenvalues_; }

    /// e^{−i H t} = U e^{−iΛt} U†
    [[nodiscard]] Eigen::MatrixXcd propagator(double t) const;
    [[nodiscard]] StateVector evolve(const StateVector &initial, double t) const;

  private:
    int num_qubits_;
    Eigen::MatrixXcd hamiltonian_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// Coupled two-component Hamiltonian over (φ, χ):
///
///     H = (σ₃ + iσ₂)⊗K + σ₃⊗mc² + I⊗V
///       = [  K + mc² + V      K         ]
///         [ −K            −K − mc² + V ]
///
/// Non-Hermitian in the plain inner product, so the propagator uses a
/// scaling-and-squaring matrix exponential.
class FeshbachVillarsOracle {
  public:
    explicit FeshbachVillarsOracle(const LatticeModel &model);

    [[nodiscard]] const Eigen::MatrixXcd &hamiltonian() const noexcept { return hamiltonian_; }
    /// Complex spectrum, sorted by real part.
    [[nodiscard]] Eigen::VectorXcd eigenvalues() const;
    [[nodiscard]] Eigen::MatrixXcd propagator(double t) const;

  private:
    Eigen::MatrixXcd hamiltonian_;
};

} // namespace kgsim
