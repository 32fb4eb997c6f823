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

#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <string>

#include "nandsim/errors.hpp"
#include "nandsim/json_writer.hpp"
#include "nandsim/sweep.hpp"

namespace nandsim::cli {

namespace {

struct Options {
    std::optional<unsigned> depth;
    std::optional<std::string> assignment;
    std::string mode = "declared";
    std::string interp = "fresh-b";
    std::optional<std::string> sweep;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::string format = "jsonl";
    unsigned max_width = kDefaultMaxWidth;
    std::optional<unsigned> resource_table;
    unsigned threads = 0;
};

std::string single_run(const Options &o) {
    if (!o.depth || !o.assignment) {
        throw InvalidConfig("single runs need --depth and --assignment (or use --sweep / --resource-table)");
    }
    const LeafAssignment a = LeafAssignment::parse(*o.depth, *o.assignment);
    const ModeSelection mode = parse_mode(o.mode);
    const Interpretation interp = parse_interpretation(o.interp);
    const CircuitOptions limits{o.max_width, kDefaultReductionLimit};
    const std::uint64_t seed = o.seed.value_or(0);

    std::string text;
    if (mode != ModeSelection::Circuit) {
        text += to_json(declared_report(a, seed)) + '\n';
    }
    if (mode != ModeSelection::Declared) {
        text += to_json(circuit_run(a, interp, limits, seed)) + '\n';
    }
    return text;
}

std::string sweep_run(const Options &o, std::ostream &err) {
    SweepConfig cfg;
    if (!o.depth) {
        throw InvalidConfig("--sweep needs --depth");
    }
    cfg.depth = *o.depth;
    cfg.mode = parse_mode(o.mode);
    cfg.interpretation = parse_interpretation(o.interp);
    cfg.scope = SweepScope::parse(*o.sweep);
    cfg.seed = o.seed;
    cfg.format = parse_format(o.format);
    cfg.limits.max_width = o.max_width;
    cfg.threads = o.threads;

    std::string text = cfg.format == OutputFormat::Csv ? csv_header() : std::string();
    for (const SweepSummary &s : run_sweep(cfg)) {
        text += cfg.format == OutputFormat::Csv ? to_csv(s) : to_jsonl(s);
        err << "nandsim: " << to_string(s.mode) << " sweep of " << s.rows.size() << " assignments took "
            << format_double(s.runtime_seconds) << " s\n";
    }
    return text;
}

std::string table_run(const Options &o) {
    const auto rows = resource_table(*o.resource_table, parse_interpretation(o.interp),
                                     CircuitOptions{o.max_width, kDefaultReductionLimit});
    if (parse_format(o.format) == OutputFormat::Csv) {
        return resource_csv(rows);
    }
    std::string text;
    for (const ResourceRow &r : rows) {
        text += to_json(r) + '\n';
    }
    return text;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulates the phase-estimation NAND-tree algorithm in declared and circuit semantics "
                 "and checks it against exact classical evaluation.",
                 "nandsim"};
    Options o;
    app.add_option("--depth", o.depth, "Tree depth n (2^n leaves)");
    app.add_option("--assignment", o.assignment, "Leaf values as 2^n bits or ceil(2^n/4) hex digits");
    app.add_option("--mode", o.mode, "declared | circuit | both")->capture_default_str();
    app.add_option("--interp", o.interp, "fresh-b | reuse-index")->capture_default_str();
    app.add_option("--sweep", o.sweep, "exhaustive | random:<count>");
    app.add_option("--seed", o.seed, "Seed for random sweeps (echoed in reports)");
    app.add_option("--out", o.out_path, "Also write the output to this file");
    app.add_option("--format", o.format, "jsonl | csv (sweeps and resource tables)")->capture_default_str();
    app.add_option("--max-width", o.max_width, "Qubit budget for circuit mode")->capture_default_str();
    app.add_option("--resource-table", o.resource_table, "Print per-depth resource counts for depths 1..N");
    app.add_option("--threads", o.threads, "Sweep worker threads (0 = hardware concurrency)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::string text;
        if (o.resource_table) {
            text = table_run(o);
        } else if (o.sweep) {
            text = sweep_run(o, err);
        } else {
            text = single_run(o);
        }
        out << text;
        if (o.out_path) {
            std::ofstream file(*o.out_path, std::ios::binary);
            file << text;
            if (!file) {
                err << "nandsim: cannot write " << *o.out_path << "\n";
                return kExitFailure;
            }
        }
        return kExitOk;
    } catch (const TooLarge &e) {
        err << "nandsim: resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        err << "nandsim: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "nandsim: error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace nandsim::cli
