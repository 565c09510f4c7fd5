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

#include "kgsim/circuit.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "kgsim/error.hpp"
#include "overloaded.hpp"

namespace kgsim {

namespace {

using detail::overloaded;

void check_qubit(int q, int num_qubits, const char *what) {
    require(q >= 0 && q < num_qubits, std::string(what) + " qubit index " + std::to_string(q) +
                                          " out of range for " + std::to_string(num_qubits) +
                                          "-qubit register");
}

} // namespace

Circuit &Circuit::append(const Circuit &other) {
    require(other.num_qubits == num_qubits, "cannot append a " + std::to_string(other.num_qubits) +
                                                "-qubit circuit to a " + std::to_string(num_qubits) +
                                                "-qubit circuit");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

GateOp inverse(const GateOp &gate) {
    return std::visit(
        overloaded{
            [](const gates::Hadamard &g) -> GateOp { return g; },
            [](const gates::Swap &g) -> GateOp { return g; },
            [](const gates::PhaseShift &g) -> GateOp { return gates::PhaseShift{g.target, -g.angle}; },
            [](const gates::ControlledPhase &g) -> GateOp {
                return gates::ControlledPhase{g.control, g.target, -g.angle};
            },
            [](const gates::SiteDiagonalPhase &g) -> GateOp {
                gates::SiteDiagonalPhase inv{g.angles};
                for (auto &a : inv.angles) {
                    a = -a;
                }
                return inv;
            },
            [](const gates::GlobalPhase &g) -> GateOp { return gates::GlobalPhase{-g.angle}; },
        },
        gate);
}

Circuit inverse(const Circuit &circuit) {
    Circuit out(circuit.num_qubits, circuit.label.empty() ? std::string{} : circuit.label + "^-1");
    out.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        out.gates.push_back(inverse(*it));
    }
    return out;
}

void validate_gate(const GateOp &gate, int num_qubits) {
    std::visit(overloaded{
                   [&](const gates::Hadamard &g) { check_qubit(g.target, num_qubits, "Hadamard"); },
                   [&](const gates::PhaseShift &g) { check_qubit(g.target, num_qubits, "PhaseShift"); },
                   [&](const gates::ControlledPhase &g) {
                       check_qubit(g.control, num_qubits, "ControlledPhase control");
                       check_qubit(g.target, num_qubits, "ControlledPhase target");
                       require(g.control != g.target, "ControlledPhase control equals target");
                   },
                   [&](const gates::Swap &g) {
                       check_qubit(g.a, num_qubits, "Swap");
                       check_qubit(g.b, num_qubits, "Swap");
                       require(g.a != g.b, "Swap of a qubit with itself");
                   },
                   [&](const gates::SiteDiagonalPhase &g) {
                       const std::size_t expected = std::size_t{1} << num_qubits;
                       require(g.angles.size() == expected,
                               "SiteDiagonalPhase has " + std::to_string(g.angles.size()) +
                                   " angles, register needs " + std::to_string(expected));
                   },
                   [](const gates::GlobalPhase &) {},
               },
               gate);
}

} // namespace kgsim
