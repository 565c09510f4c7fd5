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

#include "kgsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <string>
#include <thread>

#include "kgsim/config.hpp"
#include "kgsim/error.hpp"
#include "kgsim/oracles.hpp"

namespace kgsim {

namespace {

void config_require(bool condition, const std::string &message) {
    require(condition, message, ErrorCode::Config);
}

std::vector<double> sampled_row(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    std::vector<double> row(state.dimension(), 0.0);
    for (const auto &[site, count] : sample_measurements(state, shots, seed)) {
        row[site] = static_cast<double>(count) / static_cast<double>(shots);
    }
    return row;
}

std::vector<double> observe(const SimulationConfig &config, const StateVector &state, std::size_t row_index) {
    if (config.shots == 0) {
        return site_probabilities(state);
    }
    return sampled_row(state, config.shots, config.seed + row_index);
}

} // namespace

StateVector InitialState::prepare(int num_qubits) const {
    if (site) {
        return basis_state(num_qubits, *site);
    }
    StateVector state(num_qubits, amplitudes);
    const double norm = state.norm();
    require(norm > 0.0, "initial amplitudes are all zero", ErrorCode::Config);
    for (auto &a : state.amplitudes()) {
        a /= norm;
    }
    return state;
}

void SimulationConfig::validate() const {
    try {
        model.validate();
    } catch (const Error &e) {
        fail(ErrorCode::Config, e.what());
    }
    const std::size_t dim = std::size_t{1} << model.num_qubits;
    config_require(!times.empty(), "time list is empty");
    for (double t : times) {
        config_require(std::isfinite(t), "times must be finite");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        config_require(times[i] > times[i - 1], "times must be strictly increasing");
    }
    config_require(trotter_steps >= 1, "trotter_steps must be at least 1, got " + std::to_string(trotter_steps));
    config_require(barrier_site < dim, "barrier_site " + std::to_string(barrier_site) + " outside the lattice");
    if (initial.site) {
        config_require(*initial.site < dim, "initial site " + std::to_string(*initial.site) + " outside the lattice");
    } else {
        config_require(initial.amplitudes.size() == dim,
                       "initial amplitude list has " + std::to_string(initial.amplitudes.size()) +
                           " entries, lattice has " + std::to_string(dim));
    }
}

ProbabilityTrace run_time_sweep(const SimulationConfig &config) {
    config.validate();
    const StateVector initial = config.initial.prepare(config.model.num_qubits);

    ProbabilityTrace trace;
    trace.times = config.times;
    trace.rows.resize(config.times.size());
    trace.metadata = config_to_json(config);

    if (config.sweep_mode == SweepMode::Cumulative) {
        StateVector state = initial;
        trace.rows[0] = observe(config, state, 0);
        for (std::size_t i = 1; i < config.times.size(); ++i) {
            const EvolutionParams params{config.times[i] - config.times[i - 1], config.trotter_steps,
                                         config.splitting};
            state = evolve(state, config.model, config.component, params);
            trace.rows[i] = observe(config, state, i);
        }
        return trace;
    }

    auto compute_row = [&](std::size_t i) {
        const EvolutionParams params{config.times[i], config.trotter_steps, config.splitting};
        trace.rows[i] = observe(config, evolve(initial, config.model, config.component, params), i);
    };

    const std::size_t rows = config.times.size();
    const std::size_t workers =
        std::min<std::size_t>(rows, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < rows; ++i) {
            compute_row(i);
        }
        return trace;
    }
    // Strided partition; each task writes only its own rows.
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < rows; i += workers) {
                compute_row(i);
            }
        }));
    }
    for (auto &t : tasks) {
        t.get();
    }
    return trace;
}

double expected_position(std::span<const double> row) {
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-6, "probability row sums to " + std::to_string(total));
    double mean = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        mean += static_cast<double>(j) * row[j];
    }
    return mean;
}

double transmission_fraction(std::span<const double> row, std::uint64_t barrier_site) {
    require(barrier_site < row.size(), "barrier site " + std::to_string(barrier_site) + " outside the row");
    double sum = 0.0;
    for (std::size_t j = barrier_site + 1; j < row.size(); ++j) {
        sum += row[j];
    }
    return sum;
}

std::size_t argmax_site(std::span<const double> row) {
    require(!row.empty(), "empty probability row");
    return static_cast<std::size_t>(std::distance(row.begin(), std::max_element(row.begin(), row.end())));
}

std::vector<ConvergenceRow> compare_with_oracle(const SimulationConfig &config, double t,
                                                std::span<const int> step_counts) {
    config.validate();
    const ComponentOracle oracle(config.model, config.component);
    const StateVector initial = config.initial.prepare(config.model.num_qubits);
    const Eigen::VectorXcd exact = oracle.propagator(t) * initial.to_eigen();

    std::vector<ConvergenceRow> out;
    out.reserve(step_counts.size());
    for (int r : step_counts) {
        require(r >= 1, "step counts must be positive", ErrorCode::Config);
        const StateVector approx =
            evolve(initial, config.model, config.component, EvolutionParams{t, r, config.splitting});
        out.push_back({r, (approx.to_eigen() - exact).norm()});
    }
    return out;
}

} // namespace kgsim
