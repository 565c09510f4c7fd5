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

#include "kgsim/state_vector.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "kgsim/error.hpp"
#include "overloaded.hpp"

namespace kgsim {

using detail::overloaded;

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    require(num_qubits >= 1 && num_qubits <= kMaxStateQubits,
            "qubit count " + std::to_string(num_qubits) + " outside [1, " +
                std::to_string(kMaxStateQubits) + "]");
    require(amplitudes_.size() == (std::size_t{1} << num_qubits),
            "amplitude count " + std::to_string(amplitudes_.size()) + " does not match 2^" +
                std::to_string(num_qubits));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Eigen::VectorXcd StateVector::to_eigen() const {
    return Eigen::Map<const Eigen::VectorXcd>(amplitudes_.data(),
                                              static_cast<Eigen::Index>(amplitudes_.size()));
}

StateVector StateVector::from_eigen(int num_qubits, const Eigen::VectorXcd &v) {
    return StateVector(num_qubits, std::vector<Complex>(v.data(), v.data() + v.size()));
}

StateVector basis_state(int num_qubits, std::uint64_t site) {
    require(num_qubits >= 1 && num_qubits <= kMaxStateQubits,
            "qubit count " + std::to_string(num_qubits) + " out of range");
    const std::size_t dim = std::size_t{1} << num_qubits;
    require(site < dim, "basis index " + std::to_string(site) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[site] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

void apply(StateVector &state, const GateOp &gate) {
    validate_gate(gate, state.num_qubits());
    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();

    std::visit(
        overloaded{
            [&](const gates::Hadamard &g) {
                const std::size_t mask = std::size_t{1} << g.target;
                const double s = 1.0 / std::sqrt(2.0);
                for (std::size_t i = 0; i < dim; ++i) {
                    if ((i & mask) == 0) {
                        const Complex a = amps[i];
                        const Complex b = amps[i | mask];
                        amps[i] = s * (a + b);
                        amps[i | mask] = s * (a - b);
                    }
                }
            },
            [&](const gates::PhaseShift &g) {
                const std::size_t mask = std::size_t{1} << g.target;
                const Complex phase = std::polar(1.0, g.angle);
                for (std::size_t i = 0; i < dim; ++i) {
                    if (i & mask) {
                        amps[i] *= phase;
                    }
                }
            },
            [&](const gates::ControlledPhase &g) {
                const std::size_t mask = (std::size_t{1} << g.control) | (std::size_t{1} << g.target);
                const Complex phase = std::polar(1.0, g.angle);
                for (std::size_t i = 0; i < dim; ++i) {
                    if ((i & mask) == mask) {
                        amps[i] *= phase;
                    }
                }
            },
            [&](const gates::Swap &g) {
                const std::size_t ma = std::size_t{1} << g.a;
                const std::size_t mb = std::size_t{1} << g.b;
                for (std::size_t i = 0; i < dim; ++i) {
                    if ((i & ma) && !(i & mb)) {
                        std::swap(amps[i], amps[(i & ~ma) | mb]);
                    }
                }
            },
            [&](const gates::SiteDiagonalPhase &g) {
                for (std::size_t i = 0; i < dim; ++i) {
                    amps[i] *= std::polar(1.0, g.angles[i]);
                }
            },
            [&](const gates::GlobalPhase &g) {
                const Complex phase = std::polar(1.0, g.angle);
                for (auto &a : amps) {
                    a *= phase;
                }
            },
        },
        gate);
}

void apply(StateVector &state, const Circuit &circuit) {
    require(circuit.num_qubits == state.num_qubits(),
            "circuit acts on " + std::to_string(circuit.num_qubits) + " qubits, state has " +
                std::to_string(state.num_qubits()));
    for (const auto &g : circuit.gates) {
        apply(state, g);
    }
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    apply(state, gate);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    apply(state, circuit);
    return state;
}

Eigen::MatrixXcd dense_matrix(const Circuit &circuit) {
    const int n = circuit.num_qubits;
    require(n >= 1 && n <= kMaxDenseQubits, "dense_matrix supports 1.." +
                                                std::to_string(kMaxDenseQubits) + " qubits, got " +
                                                std::to_string(n));
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const StateVector column = apply_circuit(basis_state(n, static_cast<std::uint64_t>(j)), circuit);
        for (Eigen::Index i = 0; i < dim; ++i) {
            m(i, j) = column[static_cast<std::size_t>(i)];
        }
    }
    return m;
}

std::vector<double> site_probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.dimension());
    for (const auto &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

std::map<std::uint64_t, std::uint64_t> sample_measurements(const StateVector &state, std::uint64_t shots,
                                                          std::uint64_t seed) {
    require(shots >= 1, "shot count must be positive");
    const auto probs = site_probabilities(state);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts[dist(rng)];
    }
    return counts;
}

} // namespace kgsim
