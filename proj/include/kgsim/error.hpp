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

#include <stdexcept>
#include <string>

namespace kgsim {

/// Failure categories. The numeric values are shared with the C API status
/// codes and, through them, with the CLI exit codes.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Config = 2,
    Io = 3,
    Numeric = 4,
    Schema = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

inline void require(bool condition, const std::string &message,
                    ErrorCode code = ErrorCode::InvalidArgument) {
    if (!condition) {
        throw Error(code, message);
    }
}

} // namespace kgsim
