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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace kgsim {

namespace gates {

struct Hadamard {
    int target;
};

/// diag(1, e^{i angle}) on `target`.
struct PhaseShift {
    int target;
    double angle;
};

/// Multiplies the amplitude by e^{i angle} when both qubits are set.
/// Symmetric in its two qubits; the control/target naming follows QASM.
struct ControlledPhase {
    int control;
    int target;
    double angle;
};

struct Swap {
    int a;
    int b;
};

/// Elementwise e^{i angles[j]} over all 2^n basis states. Reference semantics
/// for every diagonal operator; see synthesize_diagonal for the gate-level form.
struct SiteDiagonalPhase {
    std::vector<double> angles;
};

struct GlobalPhase {
    double angle;
};

} // namespace gates

using GateOp = std::variant<gates::Hadamard, gates::PhaseShift, gates::ControlledPhase,
                            gates::Swap, gates::SiteDiagonalPhase, gates::GlobalPhase>;

/// Ordered gate sequence applied left to right.
struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> gates;
    std::string label;

    Circuit() = default;
    explicit Circuit(int n, std::string label_ = {}) : num_qubits(n), label(std::move(label_)) {}

    Circuit &add(GateOp gate) {
        gates.push_back(std::move(gate));
        return *this;
    }

    /// Appends every gate of `other` (same register width required).
    Circuit &append(const Circuit &other);

    [[nodiscard]] std::size_t size() const noexcept { return gates.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates.empty(); }
};

[[nodiscard]] GateOp inverse(const GateOp &gate);

/// Reversed gate order with every gate inverted.
[[nodiscard]] Circuit inverse(const Circuit &circuit);

/// Checks qubit indices and diagonal lengths against an n-qubit register.
void validate_gate(const GateOp &gate, int num_qubits);

/// Counts gates holding alternative T of the variant.
template <typename T> [[nodiscard]] std::size_t count_gates(const Circuit &circuit) {
    std::size_t n = 0;
    for (const auto &g : circuit.gates) {
        n += std::holds_alternative<T>(g) ? 1 : 0;
    }
    return n;
}

} // namespace kgsim
