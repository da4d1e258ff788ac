// Copyright 2026 The jwmsim Authors
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

#ifndef JWM_ERRORS_H
#define JWM_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace jwm {

enum class ErrorCode {
    InvalidGrid,
    GridTooNarrow,
    UnderResolved,
    InvalidWidth,
    GridMismatch,
    ZeroMass,
    NotNormalized,
    OutOfGrid,
    InvalidProbe,
    NotWeak,
    RegimeViolation,
    DomainError,
    QuadratureDivergence,
    ConfigError,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Raised by every precondition check in the library. The code lets callers
/// (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace jwm

#endif
