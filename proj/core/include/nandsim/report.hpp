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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nandsim/circuit.hpp"
#include "nandsim/declared.hpp"

namespace nandsim {

enum class Mode { Declared, Circuit };

std::string_view to_string(Mode m);

/// Outcome of one run, serialized as a single JSON object with keys in this
/// order: mode, interpretation, depth, assignment_hex, root_distribution,
/// oracle_root, success_probability, per_iteration, resources, seed.
struct RunReport {
    Mode mode = Mode::Declared;
    std::optional<Interpretation> interpretation;
    unsigned depth = 0;
    std::string assignment_hex;
    std::array<double, 2> root_distribution{};
    Bit oracle_root = 0;
    double success_probability = 0.0;
    std::vector<DivergenceRecord> per_iteration;
    ResourceCounter resources;
    /// Abstract step count; declared mode only.
    std::optional<StepCount> steps;
    std::uint64_t seed = 0;

    /// The most likely output is the true root.
    bool oracle_agreement() const { return success_probability > 0.5; }

    /// Success probability 1 and zero divergence at every iteration, both within 1e-10.
    bool matches_declared_claim() const;

    bool operator==(const RunReport &) const = default;
};

/// Declared-mode report; per_iteration is empty since there is no circuit state to compare.
RunReport declared_report(const LeafAssignment &a, std::uint64_t seed = 0);

/// Runs the circuit, compares each iteration against the declared trace and
/// scores the final distribution against eval_root.
RunReport circuit_run(const LeafAssignment &a, Interpretation interp, const CircuitOptions &opts = {},
                      std::uint64_t seed = 0);

std::string to_json(const RunReport &r);

}  // namespace nandsim
