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

#include "jwm/errors.h"

namespace jwm {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidGrid:
            return "InvalidGrid";
        case ErrorCode::GridTooNarrow:
            return "GridTooNarrow";
        case ErrorCode::UnderResolved:
            return "UnderResolved";
        case ErrorCode::InvalidWidth:
            return "InvalidWidth";
        case ErrorCode::GridMismatch:
            return "GridMismatch";
        case ErrorCode::ZeroMass:
            return "ZeroMass";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::OutOfGrid:
            return "OutOfGrid";
        case ErrorCode::InvalidProbe:
            return "InvalidProbe";
        case ErrorCode::NotWeak:
            return "NotWeak";
        case ErrorCode::RegimeViolation:
            return "RegimeViolation";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::QuadratureDivergence:
            return "QuadratureDivergence";
        case ErrorCode::ConfigError:
            return "ConfigError";
        case ErrorCode::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace jwm
