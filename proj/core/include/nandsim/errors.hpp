// Copyright 2026 The nandsim Authors
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

namespace nandsim {

/// Malformed input: bad assignment strings, odd-length layers, bad probabilities.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Register/qubit addressing problems: unknown register, overlapping targets, width mismatch.
struct LayoutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured size limit (width budget, reduction limit, exhaustive limit) would be exceeded.
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request outside what an operation supports (e.g. a depth-0 algorithm run).
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent run or sweep configuration.
struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace nandsim
