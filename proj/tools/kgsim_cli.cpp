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

// kgsim command-line front end. Talks to the library exclusively through the
// C interface in kgsim/kgsim.h.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kgsim/kgsim.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitIo = 3,
    kExitNumeric = 4,
};

int exit_code_for(kgsim_status status) {
    switch (status) {
    case KGSIM_OK:
        return kExitOk;
    case KGSIM_ERR_INVALID_ARGUMENT:
    case KGSIM_ERR_CONFIG:
    case KGSIM_ERR_SCHEMA:
        return kExitConfig;
    case KGSIM_ERR_IO:
        return kExitIo;
    case KGSIM_ERR_NUMERIC:
    case KGSIM_ERR_INTERNAL:
        return kExitNumeric;
    }
    return kExitNumeric;
}

/// Thrown inside a command to unwind with a specific exit code.
struct CommandFailure {
    int exit_code;
};

void check(kgsim_status status, const char *what) {
    if (status != KGSIM_OK) {
        std::cerr << "kgsim: " << what << ": " << kgsim_last_error() << "\n";
        throw CommandFailure{exit_code_for(status)};
    }
}

struct ConfigDeleter {
    void operator()(kgsim_config *c) const { kgsim_config_free(c); }
};
struct TraceDeleter {
    void operator()(kgsim_trace *t) const { kgsim_trace_free(t); }
};
struct StringDeleter {
    void operator()(char *s) const { kgsim_string_free(s); }
};
using ConfigPtr = std::unique_ptr<kgsim_config, ConfigDeleter>;
using TracePtr = std::unique_ptr<kgsim_trace, TraceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

ConfigPtr load_config(const std::string &path) {
    kgsim_config *raw = nullptr;
    check(kgsim_config_load(path.c_str(), &raw), "loading config");
    return ConfigPtr(raw);
}

std::string take(char *raw) { return std::string(StringPtr(raw).get()); }

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "kgsim: cannot write " << path.string() << "\n";
        throw CommandFailure{kExitIo};
    }
}

int cmd_sweep(const std::string &config_path, std::string out_dir) {
    const auto started = std::chrono::steady_clock::now();
    if (out_dir.empty()) {
        const char *env = std::getenv("KGSIM_OUT_DIR");
        out_dir = env != nullptr && *env != '\0' ? env : ".";
    }

    // Everything is computed in memory first so a failing run leaves no files behind.
    const ConfigPtr config = load_config(config_path);
    kgsim_trace *raw_trace = nullptr;
    check(kgsim_run_sweep(config.get(), &raw_trace), "running sweep");
    const TracePtr trace(raw_trace);

    char *raw = nullptr;
    check(kgsim_trace_to_csv(trace.get(), &raw), "serializing trace");
    const std::string csv = take(raw);
    check(kgsim_trace_render_svg(trace.get(), &raw), "rendering heatmap");
    const std::string svg = take(raw);
    check(kgsim_config_to_json(config.get(), &raw), "resolving config");
    const nlohmann::json resolved = nlohmann::json::parse(take(raw));

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "kgsim: cannot create output directory " << out_dir << ": " << ec.message() << "\n";
        return kExitIo;
    }
    const fs::path dir(out_dir);
    write_file(dir / "trace.csv", csv);
    write_file(dir / "heatmap.svg", svg);

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const nlohmann::json manifest = {
        {"tool", "kgsim"},
        {"version", kgsim_version()},
        {"command", "sweep"},
        {"config_path", config_path},
        {"resolved_config", resolved},
        {"outputs", {"trace.csv", "heatmap.svg"}},
        {"wall_clock_seconds", seconds},
    };
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << (dir / "trace.csv").string() << ", " << (dir / "heatmap.svg").string() << ", "
              << (dir / "manifest.json").string() << "\n";
    return kExitOk;
}

int cmd_qasm(const std::string &config_path, const std::optional<std::string> &component, double t, int r,
             bool qft_only, bool inverse) {
    char *raw = nullptr;
    if (qft_only) {
        int n = 2;
        if (!config_path.empty()) {
            const ConfigPtr config = load_config(config_path);
            check(kgsim_config_num_qubits(config.get(), &n), "reading config");
        }
        check(kgsim_qasm_qft(n, inverse ? 1 : 0, &raw), "exporting QFT");
        std::cout << take(raw);
        return kExitOk;
    }
    if (config_path.empty()) {
        std::cerr << "kgsim: qasm needs --config unless --qft-only is given\n";
        return kExitConfig;
    }
    ConfigPtr config = load_config(config_path);
    if (component) {
        const kgsim_component requested = *component == "antiparticle" ? KGSIM_ANTIPARTICLE : KGSIM_PARTICLE;
        check(kgsim_config_set_component(config.get(), requested), "setting component");
    }
    kgsim_component c = KGSIM_PARTICLE;
    check(kgsim_config_component(config.get(), &c), "reading config");
    check(kgsim_qasm_evolution(config.get(), c, t, r, &raw), "exporting circuit");
    std::cout << take(raw);
    return kExitOk;
}

int cmd_oracle_compare(const std::string &config_path, const std::vector<int> &r_values,
                       const std::optional<double> &t, const std::optional<std::string> &splitting) {
    ConfigPtr config = load_config(config_path);
    if (splitting) {
        check(kgsim_config_set_splitting(config.get(), splitting->c_str()), "setting splitting");
    }
    double time = 0.0;
    if (t) {
        time = *t;
    } else {
        check(kgsim_config_final_time(config.get(), &time), "reading config");
    }
    char *raw = nullptr;
    check(kgsim_oracle_compare(config.get(), time, r_values.data(), r_values.size(), &raw), "comparing");
    std::cout << take(raw);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"kgsim: Klein-Gordon lattice simulation on a gate-level state-vector simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    auto *sweep = app.add_subcommand("sweep", "run a time sweep and write trace.csv, heatmap.svg, manifest.json");
    sweep->add_option("--config", config_path, "JSON configuration")->required();
    sweep->add_option("--out", out_dir, "output directory (default: $KGSIM_OUT_DIR or .)");

    std::optional<std::string> component;
    double t = 0.0;
    int r = 1;
    bool qft_only = false;
    bool inverse = false;
    auto *qasm = app.add_subcommand("qasm", "print the synthesized evolution circuit as OpenQASM 2.0");
    qasm->add_option("--config", config_path, "JSON configuration");
    qasm->add_option("--component", component, "particle | antiparticle (default: from config)")
        ->check(CLI::IsMember({"particle", "antiparticle"}));
    qasm->add_option("--t", t, "total evolution time");
    qasm->add_option("--r", r, "number of Trotter steps");
    qasm->add_flag("--qft-only", qft_only, "emit only the QFT on the configured register");
    qasm->add_flag("--inverse", inverse, "with --qft-only: emit the inverse QFT");

    std::vector<int> r_values;
    std::optional<double> compare_t;
    std::optional<std::string> splitting;
    auto *compare = app.add_subcommand("oracle-compare", "Trotter error against the exact component propagator");
    compare->add_option("--config", config_path, "JSON configuration")->required();
    compare->add_option("--r", r_values, "comma-separated Trotter step counts")->required()->delimiter(',');
    compare->add_option("--t", compare_t, "evolution time (default: last configured time)");
    compare->add_option("--splitting", splitting, "override: paper-order | strang")
        ->check(CLI::IsMember({"paper-order", "strang"}));

    auto *version = app.add_subcommand("version", "print the library version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*sweep) {
            return cmd_sweep(config_path, out_dir);
        }
        if (*qasm) {
            return cmd_qasm(config_path, component, t, r, qft_only, inverse);
        }
        if (*compare) {
            return cmd_oracle_compare(config_path, r_values, compare_t, splitting);
        }
        if (*version) {
            std::cout << "kgsim " << kgsim_version() << "\n";
            return kExitOk;
        }
    } catch (const CommandFailure &f) {
        return f.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "kgsim: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
