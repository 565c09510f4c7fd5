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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kgsim/circuit.hpp"

namespace kgsim {

using Complex = std::complex<double>;

/// Largest register for which dense_matrix will materialize a unitary.
inline constexpr int kMaxDenseQubits = 12;
/// Largest register a StateVector may hold.
inline constexpr int kMaxStateQubits = 26;

/// Dense amplitudes of an n-qubit register. Basis index j is lattice site j,
/// with qubit 0 as the least-significant bit of j.
///
/// The constructor does not force unit norm so that linear combinations can be
/// formed; states built by basis_state or by gate application from a
/// normalized state stay normalized.
class StateVector {
  public:
    StateVector() = default;
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }

    [[nodiscard]] Complex operator[](std::size_t j) const { return amplitudes_[j]; }
    [[nodiscard]] Complex &operator[](std::size_t j) { return amplitudes_[j]; }

    [[nodiscard]] double norm() const;

    [[nodiscard]] Eigen::VectorXcd to_eigen() const;
    static StateVector from_eigen(int num_qubits, const Eigen::VectorXcd &v);

  private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

[[nodiscard]] StateVector basis_state(int num_qubits, std::uint64_t site);

/// In-place gate application.
void apply(StateVector &state, const GateOp &gate);
void apply(StateVector &state, const Circuit &circuit);

[[nodiscard]] StateVector apply_gate(StateVector state, const GateOp &gate);
[[nodiscard]] StateVector apply_circuit(StateVector state, const Circuit &circuit);

/// Column j is apply_circuit(basis_state(n, j), circuit).
[[nodiscard]] Eigen::MatrixXcd dense_matrix(const Circuit &circuit);

[[nodiscard]] std::vector<double> site_probabilities(const StateVector &state);

/// Draws `shots` independent computational-basis measurements. Deterministic
/// for a fixed seed on a given standard library.
[[nodiscard]] std::map<std::uint64_t, std::uint64_t>
sample_measurements(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

} // namespace kgsim
