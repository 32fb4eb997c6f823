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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nandsim/report.hpp"

namespace nandsim {

enum class ModeSelection { Declared, Circuit, Both };
enum class OutputFormat { JsonLines, Csv };

ModeSelection parse_mode(std::string_view text);
OutputFormat parse_format(std::string_view text);

struct SweepScope {
    enum class Kind { Exhaustive, Random };
    Kind kind = Kind::Exhaustive;
    std::uint64_t count = 0;

    /// "exhaustive" or "random:<count>".
    static SweepScope parse(std::string_view text);
};

struct SweepConfig {
    unsigned depth = 1;
    ModeSelection mode = ModeSelection::Declared;
    Interpretation interpretation = Interpretation::FreshB;
    SweepScope scope;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::JsonLines;
    CircuitOptions limits;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws InvalidConfig for exhaustive scope above depth 3, random scope
    /// without a seed or with a zero count, and depth 0.
    void validate() const;
};

struct SweepAggregates {
    std::size_t rows = 0;
    double min_success = 0.0;
    double mean_success = 0.0;
    double fraction_above_half = 0.0;
    /// Rows with success probability 1 and zero divergence (the declared claim).
    std::size_t claim_matches = 0;
    /// Per iteration q = 1..n.
    std::vector<double> max_trace_distance;
    std::vector<double> max_coherence_mass;
    ResourceCounter resource_totals;

    bool operator==(const SweepAggregates &) const = default;
};

struct SweepSummary {
    Mode mode = Mode::Declared;
    std::optional<Interpretation> interpretation;
    unsigned depth = 0;
    std::vector<RunReport> rows;
    SweepAggregates aggregates;
    double runtime_seconds = 0.0;
};

/// Assignments in ascending index order: all of them, or `count` distinct
/// ones drawn with the seed.
std::vector<LeafAssignment> sweep_assignments(const SweepConfig &cfg);

SweepAggregates aggregate(std::span<const RunReport> rows, unsigned depth);

/// Runs every assignment in one mode. Rows come back in input order no
/// matter how many worker threads run. A failing run aborts the sweep with
/// an exception naming the assignment.
SweepSummary success_sweep(std::span<const LeafAssignment> assignments, Mode mode, Interpretation interp,
                           const CircuitOptions &opts = {}, std::uint64_t seed = 0, unsigned threads = 1);

/// One summary per selected mode (declared first when both).
std::vector<SweepSummary> run_sweep(const SweepConfig &cfg);

/// Row lines followed by one {"summary":{...}} line. Runtime is not included
/// so output stays byte-stable.
std::string to_jsonl(const SweepSummary &s);
std::string summary_json(const SweepSummary &s);
std::string csv_header();
/// Rows only; aggregates are appended as '#'-prefixed comment lines.
std::string to_csv(const SweepSummary &s);

struct ResourceRow {
    unsigned depth = 0;
    ResourceCounter declared;
    StepCount steps;
    std::uint64_t closed_form_iteration_steps = 0;
    std::uint64_t closed_form_total_steps = 0;
    bool closed_form_match = false;
    std::optional<ResourceCounter> circuit;
    std::optional<unsigned> circuit_width;
};

inline constexpr unsigned kDeclaredCountingLimit = 8;
inline constexpr unsigned kCircuitCountingLimit = 4;

/// Depths 1..n_max (n_max <= 8). Circuit counts are filled for depths <= 4
/// that fit the width budget. Throws TooLarge for n_max > 8.
std::vector<ResourceRow> resource_table(unsigned n_max, Interpretation interp, const CircuitOptions &opts = {});
std::string to_json(const ResourceRow &row);
std::string resource_csv(std::span<const ResourceRow> rows);

}  // namespace nandsim
