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

#include "kgsim/builders.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "kgsim/error.hpp"

namespace kgsim {

namespace {

void check_qft_width(int n) {
    require(n >= 1 && n <= kMaxQftQubits, "QFT width must be in [1, " + std::to_string(kMaxQftQubits) +
                                              "], got " + std::to_string(n));
}

std::vector<int> bits_of(unsigned mask) {
    std::vector<int> out;
    for (int q = 0; mask != 0; ++q, mask >>= 1U) {
        if (mask & 1U) {
            out.push_back(q);
        }
    }
    return out;
}

void append_cnot(Circuit &c, int control, int target) {
    c.add(gates::Hadamard{target});
    c.add(gates::ControlledPhase{control, target, std::numbers::pi});
    c.add(gates::Hadamard{target});
}

/// Collected phase-polynomial terms, merged before emission.
struct PhasePolynomial {
    double global = 0.0;
    std::map<int, double> single;
    std::map<std::pair<int, int>, double> pair; // (control, target), control > target
    std::map<unsigned, double> parity;          // masks with three or more bits

    void add_parity(unsigned mask, double coeff) {
        const auto q = bits_of(mask);
        switch (q.size()) {
        case 1:
            single[q[0]] += coeff;
            break;
        case 2:
            // x_u ⊕ x_v = x_u + x_v − 2·x_u·x_v
            single[q[0]] += coeff;
            single[q[1]] += coeff;
            pair[{q[1], q[0]}] += -2.0 * coeff;
            break;
        default:
            parity[mask] += coeff;
        }
    }
};

} // namespace

void DiagonalSpec::validate() const {
    require(num_qubits >= 1 && num_qubits <= 30, "diagonal width out of range");
    require(phases.size() == (std::size_t{1} << num_qubits),
            "diagonal has " + std::to_string(phases.size()) + " phases, expected 2^" +
                std::to_string(num_qubits));
}

Circuit qft_circuit(int num_qubits, QftOptions options) {
    check_qft_width(num_qubits);
    Circuit c(num_qubits, "qft");
    for (int q = num_qubits - 1; q >= 0; --q) {
        c.add(gates::Hadamard{q});
        for (int l = q - 1; l >= 0; --l) {
            c.add(gates::ControlledPhase{l, q, std::numbers::pi / static_cast<double>(1U << (q - l))});
        }
    }
    if (options.with_swaps) {
        for (int i = 0; i < num_qubits / 2; ++i) {
            c.add(gates::Swap{i, num_qubits - 1 - i});
        }
    }
    return c;
}

Circuit inverse_qft_circuit(int num_qubits, QftOptions options) {
    Circuit c = inverse(qft_circuit(num_qubits, options));
    c.label = "iqft";
    return c;
}

Circuit synthesize_diagonal(const DiagonalSpec &spec) {
    spec.validate();
    const int n = spec.num_qubits;
    require(n <= kMaxSynthesisQubits, "diagonal synthesis supports at most " +
                                          std::to_string(kMaxSynthesisQubits) + " qubits, got " +
                                          std::to_string(n));

    // Möbius transform: θ(x) = Σ_{S ⊆ bits(x)} a_S.
    std::vector<double> a = spec.phases;
    const unsigned dim = 1U << n;
    for (int b = 0; b < n; ++b) {
        const unsigned bit = 1U << b;
        for (unsigned s = 0; s < dim; ++s) {
            if (s & bit) {
                a[s] -= a[s ^ bit];
            }
        }
    }

    PhasePolynomial poly;
    poly.global = a[0];
    for (unsigned s = 1; s < dim; ++s) {
        if (a[s] == 0.0) {
            continue;
        }
        const auto q = bits_of(s);
        if (q.size() == 1) {
            poly.single[q[0]] += a[s];
        } else if (q.size() == 2) {
            poly.pair[{q[1], q[0]}] += a[s];
        } else {
            // Π x_q = 2^{1−k} Σ_{∅≠T⊆S} (−1)^{|T|+1} parity_T
            const double scale = a[s] / static_cast<double>(1U << (q.size() - 1));
            for (unsigned t = s; t != 0; t = (t - 1) & s) {
                const double sign = (std::popcount(t) % 2 == 1) ? 1.0 : -1.0;
                poly.add_parity(t, sign * scale);
            }
        }
    }

    Circuit c(n, "diag");
    if (poly.global != 0.0) {
        c.add(gates::GlobalPhase{poly.global});
    }
    for (const auto &[q, angle] : poly.single) {
        if (angle != 0.0) {
            c.add(gates::PhaseShift{q, angle});
        }
    }
    for (const auto &[qubits, angle] : poly.pair) {
        if (angle != 0.0) {
            c.add(gates::ControlledPhase{qubits.first, qubits.second, angle});
        }
    }
    for (const auto &[mask, angle] : poly.parity) {
        if (angle == 0.0) {
            continue;
        }
        const auto q = bits_of(mask);
        const int target = q.back();
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            append_cnot(c, q[i], target);
        }
        c.add(gates::PhaseShift{target, angle});
        for (std::size_t i = q.size() - 1; i-- > 0;) {
            append_cnot(c, q[i], target);
        }
    }
    return c;
}

Circuit synthesize(const Circuit &circuit) {
    Circuit out(circuit.num_qubits, circuit.label);
    for (const auto &g : circuit.gates) {
        if (const auto *diag = std::get_if<gates::SiteDiagonalPhase>(&g)) {
            out.append(synthesize_diagonal(DiagonalSpec{circuit.num_qubits, diag->angles}));
        } else {
            out.add(g);
        }
    }
    return out;
}

} // namespace kgsim
