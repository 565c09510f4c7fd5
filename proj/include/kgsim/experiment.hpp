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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgsim/kg_evolution.hpp"
#include "kgsim/state_vector.hpp"

namespace kgsim {

enum class SweepMode {
    /// Every sample time is a fresh evolution from the initial state at t = 0.
    Independent,
    /// The initial state is prepared at the first sample time and carried
    /// forward; each interval between samples gets `trotter_steps` steps.
    Cumulative,
};

/// Either a basis site or an explicit amplitude list (normalized on use).
struct InitialState {
    std::optional<std::uint64_t> site = 0;
    std::vector<Complex> amplitudes;

    [[nodiscard]] StateVector prepare(int num_qubits) const;
};

/// Fully resolved sweep configuration. Parsed from and serialized to JSON by
/// config.hpp.
struct SimulationConfig {
    std::string label;
    LatticeModel model;
    Component component = Component::Particle;
    std::vector<double> times;
    int trotter_steps = 10;
    Splitting splitting = Splitting::PaperOrder;
    SweepMode sweep_mode = SweepMode::Independent;
    InitialState initial;
    /// Site used for transmission summaries; probability beyond it is "transmitted".
    std::uint64_t barrier_site = 1;
    /// 0 records exact probabilities; otherwise rows are sampled frequencies.
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    /// Throws ErrorCode::Config on any inconsistency.
    void validate() const;
};

struct ProbabilityTrace {
    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    nlohmann::json metadata = nlohmann::json::object();

    [[nodiscard]] std::size_t num_sites() const { return rows.empty() ? 0 : rows.front().size(); }

    friend bool operator==(const ProbabilityTrace &, const ProbabilityTrace &) = default;
};

/// Row i holds the site probabilities at times[i]. Independent-mode rows are
/// computed concurrently and assembled in time order.
[[nodiscard]] ProbabilityTrace run_time_sweep(const SimulationConfig &config);

/// Σ_j j·p_j. Rejects rows whose sum is off by more than 1e-6.
[[nodiscard]] double expected_position(std::span<const double> row);

/// Σ_{j > barrier_site} p_j
[[nodiscard]] double transmission_fraction(std::span<const double> row, std::uint64_t barrier_site);

/// Index of the largest probability (first on ties).
[[nodiscard]] std::size_t argmax_site(std::span<const double> row);

struct ConvergenceRow {
    int trotter_steps;
    double state_error;
};

/// ‖ψ_trotter(t) − ψ_exact(t)‖₂ against ComponentOracle, starting from the
/// configured initial state, for each step count. Uses the configured
/// component and splitting.
[[nodiscard]] std::vector<ConvergenceRow> compare_with_oracle(const SimulationConfig &config, double t,
                                                              std::span<const int> step_counts);

} // namespace kgsim
