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
#include <iosfwd>
#include <string>

#include "kgsim/experiment.hpp"

namespace kgsim {

inline constexpr const char *kTraceSchema = "kgsim-trace";
inline constexpr int kTraceSchemaVersion = 1;

/// CSV trace:
///
///     # {"schema":"kgsim-trace","schema_version":1,"metadata":{...}}
///     t,p0,p1,...
///     <t>,<p0>,<p1>,...
///
/// Every number is written with 17 significant digits, so reading the text
/// back reproduces the doubles exactly.
void write_trace(std::ostream &out, const ProbabilityTrace &trace);
[[nodiscard]] std::string trace_to_csv(const ProbabilityTrace &trace);
void persist_trace(const ProbabilityTrace &trace, const std::filesystem::path &destination);

/// Throws ErrorCode::Schema for a missing/foreign header or version mismatch
/// and for malformed rows; ErrorCode::Io when the file cannot be read.
[[nodiscard]] ProbabilityTrace read_trace(std::istream &in);
[[nodiscard]] ProbabilityTrace trace_from_csv(const std::string &text);
[[nodiscard]] ProbabilityTrace load_trace(const std::filesystem::path &source);

} // namespace kgsim
