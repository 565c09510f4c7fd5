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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "kgsim/experiment.hpp"

namespace kgsim {

/// Parses a sweep configuration. Missing fields take their documented
/// defaults; unknown fields and malformed values raise ErrorCode::Config.
[[nodiscard]] SimulationConfig config_from_json(const nlohmann::json &doc);
[[nodiscard]] SimulationConfig load_config(const std::filesystem::path &path);

/// Resolved configuration with every field explicit. Feeding the result back
/// to config_from_json reproduces the same config.
[[nodiscard]] nlohmann::json config_to_json(const SimulationConfig &config);

[[nodiscard]] const char *to_string(Component c);
[[nodiscard]] const char *to_string(Splitting s);
[[nodiscard]] const char *to_string(SweepMode m);
[[nodiscard]] const char *to_string(BarrierPreset p);
[[nodiscard]] const char *to_string(MomentumConvention c);

[[nodiscard]] Component parse_component(const std::string &text);
[[nodiscard]] Splitting parse_splitting(const std::string &text);

} // namespace kgsim
