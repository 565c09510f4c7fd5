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

#include <string>

#include "kgsim/circuit.hpp"

namespace kgsim {

/// OpenQASM 2.0 program text for an elementary-gate circuit.
///
/// Layout: version line, qelib1 include, optional label comment, one
/// `// global phase:` comment carrying the summed GlobalPhase angle, the
/// quantum and classical registers, gate lines in application order, then one
/// measurement per qubit. Angles use 17 significant digits.
/// Throws if the circuit still holds a SiteDiagonalPhase.
[[nodiscard]] std::string to_openqasm(const Circuit &circuit);

/// "%.17g" rendering; round-trips every finite double. Used for all text outputs.
[[nodiscard]] std::string format_real(double value);

} // namespace kgsim
