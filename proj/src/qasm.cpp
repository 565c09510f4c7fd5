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

#include "kgsim/qasm.hpp"

#include <cstdio>
#include <sstream>

#include "kgsim/error.hpp"
#include "overloaded.hpp"

namespace kgsim {

using detail::overloaded;

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string to_openqasm(const Circuit &circuit) {
    require(circuit.num_qubits >= 1, "cannot export an empty register");
    double global_phase = 0.0;
    std::ostringstream body;
    for (const auto &gate : circuit.gates) {
        validate_gate(gate, circuit.num_qubits);
        std::visit(overloaded{
                       [&](const gates::Hadamard &g) { body << "h q[" << g.target << "];\n"; },
                       [&](const gates::PhaseShift &g) {
                           body << "u1(" << format_real(g.angle) << ") q[" << g.target << "];\n";
                       },
                       [&](const gates::ControlledPhase &g) {
                           body << "cu1(" << format_real(g.angle) << ") q[" << g.control << "],q["
                                << g.target << "];\n";
                       },
                       [&](const gates::Swap &g) { body << "swap q[" << g.a << "],q[" << g.b << "];\n"; },
                       [](const gates::SiteDiagonalPhase &) {
                           fail(ErrorCode::InvalidArgument,
                                "SiteDiagonalPhase must be synthesized before OpenQASM export");
                       },
                       [&](const gates::GlobalPhase &g) { global_phase += g.angle; },
                   },
                   gate);
    }

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    if (!circuit.label.empty()) {
        std::string label = circuit.label;
        for (auto &ch : label) {
            if (ch == '\n' || ch == '\r') {
                ch = ' ';
            }
        }
        out << "// " << label << "\n";
    }
    out << "// global phase: " << format_real(global_phase) << "\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    out << "creg c[" << circuit.num_qubits << "];\n";
    out << body.str();
    for (int q = 0; q < circuit.num_qubits; ++q) {
        out << "measure q[" << q << "] -> c[" << q << "];\n";
    }
    return out.str();
}

} // namespace kgsim
