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

#include <ostream>

namespace nandsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Entry point of the `nandsim` tool. Reports go to `out` (and to --out when
/// given); diagnostics go to `err`. Returns the process exit code: 0 on
/// completion whatever the oracle says, 2 on usage errors, 3 when a size
/// limit is exceeded.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace nandsim::cli
