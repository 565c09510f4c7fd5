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

#include <vector>

#include "kgsim/circuit.hpp"

namespace kgsim {

inline constexpr int kMaxQftQubits = 12;
inline constexpr int kMaxSynthesisQubits = 6;

/// A diagonal unitary diag(e^{i phases[j]}) over an n-qubit register.
struct DiagonalSpec {
    int num_qubits = 0;
    std::vector<double> phases;

    /// Throws unless phases.size() == 2^num_qubits.
    void validate() const;
};

struct QftOptions {
    /// Qubit-reversal swaps at the end. Without them the matrix is the DFT
    /// with bit-reversed output ordering.
    bool with_swaps = true;
};

/// Unitary DFT, entry (k, j) = e^{+2πi kj/2^n} / √(2^n), from n Hadamards,
/// n(n-1)/2 controlled phases and ⌊n/2⌋ swaps.
[[nodiscard]] Circuit qft_circuit(int num_qubits, QftOptions options = {});

/// Adjoint of qft_circuit(num_qubits, options).
[[nodiscard]] Circuit inverse_qft_circuit(int num_qubits, QftOptions options = {});

/// Exact elementary-gate realization of diag(e^{i θ_j}), global phase included.
///
/// The phase function is expanded in the monomial basis of the qubit bits,
/// θ(x) = Σ_S a_S Π_{q∈S} x_q (Möbius transform). a_∅ becomes a GlobalPhase,
/// single-bit terms PhaseShifts and two-bit terms ControlledPhases. Higher
/// monomials are rewritten as signed parity phases, each realized with a CNOT
/// ladder (H·CP(π)·H) around a PhaseShift.
[[nodiscard]] Circuit synthesize_diagonal(const DiagonalSpec &spec);

/// Replaces every SiteDiagonalPhase gate by its synthesized form.
[[nodiscard]] Circuit synthesize(const Circuit &circuit);

} // namespace kgsim
