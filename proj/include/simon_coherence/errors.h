// Copyright 2026 The simon-coherence Authors
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

#ifndef SIMON_COHERENCE_ERRORS_H
#define SIMON_COHERENCE_ERRORS_H

#include <stdexcept>
#include <string>

namespace simon_coherence {

/// A parameter or input lies outside the domain an operation accepts.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The Jacobi eigensolver hit its sweep cap.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed quantity violated an invariant it must satisfy (e.g. coherence < -1e-10).
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The request is valid but exceeds what the dense evaluator supports.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed function-table text. `line` is 1-based; 0 when the error is not tied to a line.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string &what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {
    }
    int line;
};

}  // namespace simon_coherence

#endif
