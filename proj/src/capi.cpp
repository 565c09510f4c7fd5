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

#include "kgsim/kgsim.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "kgsim/builders.hpp"
#include "kgsim/config.hpp"
#include "kgsim/error.hpp"
#include "kgsim/experiment.hpp"
#include "kgsim/heatmap.hpp"
#include "kgsim/qasm.hpp"
#include "kgsim/trace_io.hpp"

#ifndef KGSIM_VERSION
#define KGSIM_VERSION "0.0.0"
#endif

struct kgsim_config {
    kgsim::SimulationConfig config;
};

struct kgsim_trace {
    kgsim::ProbabilityTrace trace;
};

namespace {

thread_local std::string g_last_error;

kgsim_status to_status(kgsim::ErrorCode code) {
    switch (code) {
    case kgsim::ErrorCode::InvalidArgument:
        return KGSIM_ERR_INVALID_ARGUMENT;
    case kgsim::ErrorCode::Config:
        return KGSIM_ERR_CONFIG;
    case kgsim::ErrorCode::Io:
        return KGSIM_ERR_IO;
    case kgsim::ErrorCode::Numeric:
        return KGSIM_ERR_NUMERIC;
    case kgsim::ErrorCode::Schema:
        return KGSIM_ERR_SCHEMA;
    }
    return KGSIM_ERR_INTERNAL;
}

/// Runs `body`, translating exceptions into status codes and the thread's
/// last-error message.
template <typename Fn> kgsim_status guarded(Fn &&body) {
    try {
        g_last_error.clear();
        std::forward<Fn>(body)();
        return KGSIM_OK;
    } catch (const kgsim::Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception &e) {
        g_last_error = e.what();
        return KGSIM_ERR_CONFIG;
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return KGSIM_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return KGSIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return KGSIM_ERR_INTERNAL;
    }
}

void require_arg(const void *ptr, const char *name) {
    if (ptr == nullptr) {
        kgsim::fail(kgsim::ErrorCode::InvalidArgument, std::string(name) + " must not be null");
    }
}

char *duplicate(const std::string &text) {
    auto *out = static_cast<char *>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

kgsim::Component to_component(kgsim_component c) {
    switch (c) {
    case KGSIM_PARTICLE:
        return kgsim::Component::Particle;
    case KGSIM_ANTIPARTICLE:
        return kgsim::Component::AntiParticle;
    }
    kgsim::fail(kgsim::ErrorCode::InvalidArgument, "unknown component value");
}

const kgsim::ProbabilityTrace &checked_row(const kgsim_trace *trace, size_t row) {
    require_arg(trace, "trace");
    if (row >= trace->trace.rows.size()) {
        kgsim::fail(kgsim::ErrorCode::InvalidArgument, "row index " + std::to_string(row) + " out of range");
    }
    return trace->trace;
}

} // namespace

extern "C" {

const char *kgsim_version(void) { return KGSIM_VERSION; }

const char *kgsim_last_error(void) { return g_last_error.c_str(); }

void kgsim_string_free(char *text) { std::free(text); }

kgsim_status kgsim_config_load(const char *path, kgsim_config **out) {
    return guarded([&] {
        require_arg(path, "path");
        require_arg(out, "out");
        *out = new kgsim_config{kgsim::load_config(path)};
    });
}

kgsim_status kgsim_config_parse(const char *json_text, kgsim_config **out) {
    return guarded([&] {
        require_arg(json_text, "json_text");
        require_arg(out, "out");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::parse_error &e) {
            kgsim::fail(kgsim::ErrorCode::Config, std::string("config is not valid JSON: ") + e.what());
        }
        *out = new kgsim_config{kgsim::config_from_json(doc)};
    });
}

void kgsim_config_free(kgsim_config *config) { delete config; }

kgsim_status kgsim_config_to_json(const kgsim_config *config, char **out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        *out = duplicate(kgsim::config_to_json(config->config).dump(2));
    });
}

kgsim_status kgsim_config_num_qubits(const kgsim_config *config, int *out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        *out = config->config.model.num_qubits;
    });
}

kgsim_status kgsim_config_final_time(const kgsim_config *config, double *out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        *out = config->config.times.back();
    });
}

kgsim_status kgsim_config_component(const kgsim_config *config, kgsim_component *out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        *out = config->config.component == kgsim::Component::Particle ? KGSIM_PARTICLE : KGSIM_ANTIPARTICLE;
    });
}

kgsim_status kgsim_config_set_splitting(kgsim_config *config, const char *splitting) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(splitting, "splitting");
        config->config.splitting = kgsim::parse_splitting(splitting);
    });
}

kgsim_status kgsim_config_set_component(kgsim_config *config, kgsim_component component) {
    return guarded([&] {
        require_arg(config, "config");
        config->config.component = to_component(component);
    });
}

kgsim_status kgsim_run_sweep(const kgsim_config *config, kgsim_trace **out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        *out = new kgsim_trace{kgsim::run_time_sweep(config->config)};
    });
}

kgsim_status kgsim_trace_load(const char *path, kgsim_trace **out) {
    return guarded([&] {
        require_arg(path, "path");
        require_arg(out, "out");
        *out = new kgsim_trace{kgsim::load_trace(path)};
    });
}

void kgsim_trace_free(kgsim_trace *trace) { delete trace; }

size_t kgsim_trace_num_times(const kgsim_trace *trace) { return trace ? trace->trace.times.size() : 0; }

size_t kgsim_trace_num_sites(const kgsim_trace *trace) { return trace ? trace->trace.num_sites() : 0; }

kgsim_status kgsim_trace_time(const kgsim_trace *trace, size_t row, double *out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = checked_row(trace, row).times[row];
    });
}

kgsim_status kgsim_trace_probability(const kgsim_trace *trace, size_t row, size_t site, double *out) {
    return guarded([&] {
        require_arg(out, "out");
        const auto &t = checked_row(trace, row);
        if (site >= t.num_sites()) {
            kgsim::fail(kgsim::ErrorCode::InvalidArgument, "site index " + std::to_string(site) + " out of range");
        }
        *out = t.rows[row][site];
    });
}

kgsim_status kgsim_trace_expected_position(const kgsim_trace *trace, size_t row, double *out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = kgsim::expected_position(checked_row(trace, row).rows[row]);
    });
}

kgsim_status kgsim_trace_transmission(const kgsim_trace *trace, size_t row, size_t barrier_site, double *out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = kgsim::transmission_fraction(checked_row(trace, row).rows[row], barrier_site);
    });
}

kgsim_status kgsim_trace_to_csv(const kgsim_trace *trace, char **out) {
    return guarded([&] {
        require_arg(trace, "trace");
        require_arg(out, "out");
        *out = duplicate(kgsim::trace_to_csv(trace->trace));
    });
}

kgsim_status kgsim_trace_write_csv(const kgsim_trace *trace, const char *path) {
    return guarded([&] {
        require_arg(trace, "trace");
        require_arg(path, "path");
        kgsim::persist_trace(trace->trace, path);
    });
}

kgsim_status kgsim_trace_render_svg(const kgsim_trace *trace, char **out) {
    return guarded([&] {
        require_arg(trace, "trace");
        require_arg(out, "out");
        *out = duplicate(kgsim::render_heatmap_svg(trace->trace));
    });
}

kgsim_status kgsim_qasm_evolution(const kgsim_config *config, kgsim_component component, double t,
                                  int trotter_steps, char **out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        const auto &cfg = config->config;
        if (cfg.model.num_qubits > kgsim::kMaxSynthesisQubits) {
            kgsim::fail(kgsim::ErrorCode::InvalidArgument,
                        "cannot synthesize circuits above " + std::to_string(kgsim::kMaxSynthesisQubits) +
                            " qubits");
        }
        const kgsim::EvolutionParams params{t, trotter_steps, cfg.splitting};
        kgsim::Circuit circuit =
            kgsim::synthesize(kgsim::evolution_circuit(cfg.model, to_component(component), params));
        circuit.label = std::string(kgsim::to_string(to_component(component))) + " t=" + kgsim::format_real(t) +
                        " r=" + std::to_string(trotter_steps) + " " + kgsim::to_string(cfg.splitting);
        *out = duplicate(kgsim::to_openqasm(circuit));
    });
}

kgsim_status kgsim_qasm_qft(int num_qubits, int inverse, char **out) {
    return guarded([&] {
        require_arg(out, "out");
        const kgsim::Circuit c =
            inverse ? kgsim::inverse_qft_circuit(num_qubits) : kgsim::qft_circuit(num_qubits);
        *out = duplicate(kgsim::to_openqasm(c));
    });
}

kgsim_status kgsim_oracle_compare(const kgsim_config *config, double t, const int *r_values, size_t count,
                                  char **out) {
    return guarded([&] {
        require_arg(config, "config");
        require_arg(out, "out");
        if (count > 0) {
            require_arg(r_values, "r_values");
        }
        const auto rows = kgsim::compare_with_oracle(config->config, t, std::span<const int>(r_values, count));
        std::string csv = "r,error\n";
        for (const auto &row : rows) {
            csv += std::to_string(row.trotter_steps) + "," + kgsim::format_real(row.state_error) + "\n";
        }
        *out = duplicate(csv);
    });
}

} // extern "C"
