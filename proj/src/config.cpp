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

#include "kgsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "kgsim/error.hpp"

namespace kgsim {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string &message) { fail(ErrorCode::Config, message); }

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        config_error(where + " must be a JSON object");
    }
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            config_error("unknown field '" + key + "' in " + where);
        }
    }
}

template <typename T> T get_or(const json &obj, const char *key, T fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    try {
        return it->get<T>();
    } catch (const json::exception &) {
        config_error(std::string("field '") + key + "' has the wrong type");
    }
}

std::uint64_t get_index(const json &obj, const char *key, std::uint64_t fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
        config_error(std::string("field '") + key + "' must be a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

BarrierPreset parse_preset(const std::string &text) {
    if (text == "sigma-z") {
        return BarrierPreset::SigmaZ;
    }
    if (text == "explicit-sites") {
        return BarrierPreset::ExplicitSites;
    }
    config_error("unknown potential preset '" + text + "' (expected sigma-z or explicit-sites)");
}

MomentumConvention parse_convention(const std::string &text) {
    if (text == "paper") {
        return MomentumConvention::Paper;
    }
    if (text == "standard-fft") {
        return MomentumConvention::StandardFft;
    }
    config_error("unknown momentum convention '" + text + "' (expected paper or standard-fft)");
}

SweepMode parse_mode(const std::string &text) {
    if (text == "independent") {
        return SweepMode::Independent;
    }
    if (text == "cumulative") {
        return SweepMode::Cumulative;
    }
    config_error("unknown sweep mode '" + text + "' (expected independent or cumulative)");
}

std::vector<double> parse_times(const json &node) {
    if (node.is_array()) {
        std::vector<double> times;
        for (const auto &t : node) {
            if (!t.is_number()) {
                config_error("times must be numbers");
            }
            times.push_back(t.get<double>());
        }
        return times;
    }
    if (node.is_object()) {
        reject_unknown_keys(node, {"start", "stop", "step"}, "times");
        const double start = get_or<double>(node, "start", 0.0);
        const double stop = get_or<double>(node, "stop", 0.0);
        const double step = get_or<double>(node, "step", 1.0);
        if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
            config_error("time range needs finite start <= stop and step > 0");
        }
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 1000000) {
            config_error("time range produces too many samples");
        }
        std::vector<double> times;
        for (std::size_t i = 0; i < count; ++i) {
            times.push_back(start + static_cast<double>(i) * step);
        }
        return times;
    }
    config_error("times must be a list or a {start, stop, step} range");
}

InitialState parse_initial(const json &node) {
    reject_unknown_keys(node, {"site", "amplitudes"}, "initial_state");
    if (node.contains("site") == node.contains("amplitudes")) {
        config_error("initial_state needs exactly one of 'site' or 'amplitudes'");
    }
    InitialState init;
    if (node.contains("site")) {
        init.site = get_index(node, "site", 0);
        return init;
    }
    init.site.reset();
    const auto &amps = node.at("amplitudes");
    if (!amps.is_array()) {
        config_error("initial_state.amplitudes must be a list");
    }
    for (const auto &a : amps) {
        if (a.is_number()) {
            init.amplitudes.emplace_back(a.get<double>(), 0.0);
        } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
            init.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
        } else {
            config_error("each amplitude must be a number or a [re, im] pair");
        }
    }
    return init;
}

} // namespace

const char *to_string(Component c) { return c == Component::Particle ? "particle" : "antiparticle"; }

const char *to_string(Splitting s) { return s == Splitting::PaperOrder ? "paper-order" : "strang"; }

const char *to_string(SweepMode m) { return m == SweepMode::Independent ? "independent" : "cumulative"; }

const char *to_string(BarrierPreset p) { return p == BarrierPreset::SigmaZ ? "sigma-z" : "explicit-sites"; }

const char *to_string(MomentumConvention c) {
    return c == MomentumConvention::Paper ? "paper" : "standard-fft";
}

Component parse_component(const std::string &text) {
    if (text == "particle" || text == "phi") {
        return Component::Particle;
    }
    if (text == "antiparticle" || text == "anti-particle" || text == "chi") {
        return Component::AntiParticle;
    }
    config_error("unknown component '" + text + "' (expected particle or antiparticle)");
}

Splitting parse_splitting(const std::string &text) {
    if (text == "paper-order") {
        return Splitting::PaperOrder;
    }
    if (text == "strang") {
        return Splitting::Strang;
    }
    config_error("unknown splitting '" + text + "' (expected paper-order or strang)");
}

SimulationConfig config_from_json(const json &doc) {
    reject_unknown_keys(doc,
                        {"label", "num_qubits", "units", "potential", "momentum_convention",
                         "kinetic_applications", "component", "times", "trotter_steps", "splitting",
                         "sweep_mode", "initial_state", "barrier_site", "shots", "seed", "notes"},
                        "config");
    SimulationConfig cfg;
    cfg.label = get_or<std::string>(doc, "label", "");
    cfg.model.num_qubits = get_or<int>(doc, "num_qubits", 2);
    if (cfg.model.num_qubits < 1 || cfg.model.num_qubits > kMaxMomentumQubits) {
        config_error("num_qubits must be in [1, " + std::to_string(kMaxMomentumQubits) + "]");
    }
    const std::size_t dim = std::size_t{1} << cfg.model.num_qubits;

    if (const auto it = doc.find("units"); it != doc.end()) {
        reject_unknown_keys(*it, {"mass", "rest_energy_shift"}, "units");
        cfg.model.units.mass = get_or<double>(*it, "mass", cfg.model.units.mass);
        cfg.model.units.rest_energy_shift = get_or<bool>(*it, "rest_energy_shift", true);
    }
    cfg.model.convention = parse_convention(get_or<std::string>(doc, "momentum_convention", "paper"));
    cfg.model.kinetic_applications = get_or<int>(doc, "kinetic_applications", 2);
    cfg.component = parse_component(get_or<std::string>(doc, "component", "particle"));
    cfg.trotter_steps = get_or<int>(doc, "trotter_steps", 10);
    cfg.splitting = parse_splitting(get_or<std::string>(doc, "splitting", "paper-order"));
    cfg.sweep_mode = parse_mode(get_or<std::string>(doc, "sweep_mode", "independent"));
    cfg.barrier_site = get_index(doc, "barrier_site", 1);
    cfg.shots = get_index(doc, "shots", 0);
    cfg.seed = get_index(doc, "seed", 0);

    if (const auto it = doc.find("times"); it != doc.end()) {
        cfg.times = parse_times(*it);
    } else {
        config_error("missing required field 'times'");
    }
    if (const auto it = doc.find("initial_state"); it != doc.end()) {
        cfg.initial = parse_initial(*it);
    }

    json pot = doc.value("potential", json::object());
    reject_unknown_keys(pot, {"preset", "v0", "site_values", "offset"}, "potential");
    const BarrierPreset preset = parse_preset(get_or<std::string>(pot, "preset", "explicit-sites"));
    const double v0 = get_or<double>(pot, "v0", 11.0);
    if (pot.contains("site_values")) {
        const auto values = get_or<std::vector<double>>(pot, "site_values", {});
        if (values.size() != dim) {
            config_error("potential.site_values has " + std::to_string(values.size()) + " entries, lattice has " +
                         std::to_string(dim));
        }
        cfg.model.potential = PotentialProfile::explicit_sites(values);
        cfg.model.potential.preset = preset;
        cfg.model.potential.v0 = v0;
    } else if (preset == BarrierPreset::SigmaZ) {
        cfg.model.potential = PotentialProfile::sigma_z_barrier(cfg.model.num_qubits, v0);
    } else {
        if (cfg.barrier_site >= dim) {
            config_error("barrier_site " + std::to_string(cfg.barrier_site) + " outside the lattice");
        }
        cfg.model.potential = PotentialProfile::barrier_at(cfg.model.num_qubits, cfg.barrier_site, v0);
    }
    const double offset = get_or<double>(pot, "offset", 0.0);
    if (offset != 0.0) {
        cfg.model.potential = cfg.model.potential.shifted(offset);
    }

    cfg.validate();
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        config_error("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

json config_to_json(const SimulationConfig &config) {
    json doc;
    doc["label"] = config.label;
    doc["num_qubits"] = config.model.num_qubits;
    doc["units"] = {{"mass", config.model.units.mass},
                    {"rest_energy_shift", config.model.units.rest_energy_shift}};
    doc["potential"] = {{"preset", to_string(config.model.potential.preset)},
                        {"v0", config.model.potential.v0},
                        {"site_values", config.model.potential.site_values}};
    doc["momentum_convention"] = to_string(config.model.convention);
    doc["kinetic_applications"] = config.model.kinetic_applications;
    doc["component"] = to_string(config.component);
    doc["times"] = config.times;
    doc["trotter_steps"] = config.trotter_steps;
    doc["splitting"] = to_string(config.splitting);
    doc["sweep_mode"] = to_string(config.sweep_mode);
    if (config.initial.site) {
        doc["initial_state"] = {{"site", *config.initial.site}};
    } else {
        json amps = json::array();
        for (const auto &a : config.initial.amplitudes) {
            amps.push_back({a.real(), a.imag()});
        }
        doc["initial_state"] = {{"amplitudes", amps}};
    }
    doc["barrier_site"] = config.barrier_site;
    doc["shots"] = config.shots;
    doc["seed"] = config.seed;
    return doc;
}

} // namespace kgsim
