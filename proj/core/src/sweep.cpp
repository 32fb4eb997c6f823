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

#include "nandsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "nandsim/errors.hpp"
#include "nandsim/json_writer.hpp"

namespace nandsim {

ModeSelection parse_mode(std::string_view text) {
    if (text == "declared") return ModeSelection::Declared;
    if (text == "circuit") return ModeSelection::Circuit;
    if (text == "both") return ModeSelection::Both;
    throw InvalidConfig("unknown mode '" + std::string(text) + "' (expected declared, circuit or both)");
}

OutputFormat parse_format(std::string_view text) {
    if (text == "jsonl") return OutputFormat::JsonLines;
    if (text == "csv") return OutputFormat::Csv;
    throw InvalidConfig("unknown format '" + std::string(text) + "' (expected jsonl or csv)");
}

SweepScope SweepScope::parse(std::string_view text) {
    if (text == "exhaustive") {
        return {Kind::Exhaustive, 0};
    }
    constexpr std::string_view kRandom = "random:";
    if (text.substr(0, kRandom.size()) == kRandom) {
        std::string_view digits = text.substr(kRandom.size());
        std::uint64_t count = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
            return {Kind::Random, count};
        }
    }
    throw InvalidConfig("bad sweep scope '" + std::string(text) + "' (expected exhaustive or random:<count>)");
}

void SweepConfig::validate() const {
    if (depth == 0) {
        throw InvalidConfig("sweeps need depth >= 1");
    }
    if (scope.kind == SweepScope::Kind::Exhaustive && depth > kExhaustiveDepthLimit) {
        throw InvalidConfig("exhaustive sweeps are limited to depth " + std::to_string(kExhaustiveDepthLimit));
    }
    if (scope.kind == SweepScope::Kind::Random) {
        if (!seed) {
            throw InvalidConfig("random sweeps require --seed");
        }
        if (scope.count == 0) {
            throw InvalidConfig("random sweeps need a positive count");
        }
    }
}

std::vector<LeafAssignment> sweep_assignments(const SweepConfig &cfg) {
    cfg.validate();
    if (cfg.scope.kind == SweepScope::Kind::Exhaustive) {
        return enumerate_assignments(cfg.depth);
    }
    if (cfg.depth >= 24) {
        throw TooLarge("random sweeps support depth < 24");
    }
    const std::size_t leaves = std::size_t{1} << cfg.depth;
    if (leaves < 64 && cfg.scope.count > (std::uint64_t{1} << leaves)) {
        throw InvalidConfig("random:" + std::to_string(cfg.scope.count) + " exceeds the " +
                            std::to_string(std::uint64_t{1} << leaves) + " assignments of depth " +
                            std::to_string(cfg.depth));
    }
    std::mt19937_64 rng(*cfg.seed);
    std::set<std::vector<Bit>> drawn;
    while (drawn.size() < cfg.scope.count) {
        std::vector<Bit> bits(leaves);
        for (Bit &b : bits) {
            b = static_cast<Bit>(rng() >> 63);
        }
        drawn.insert(std::move(bits));
    }
    // std::set orders equal-length bit vectors lexicographically, i.e. by index.
    std::vector<LeafAssignment> out;
    for (const auto &bits : drawn) {
        out.emplace_back(cfg.depth, bits);
    }
    return out;
}

SweepAggregates aggregate(std::span<const RunReport> rows, unsigned depth) {
    SweepAggregates agg;
    agg.rows = rows.size();
    agg.max_trace_distance.assign(depth, 0.0);
    agg.max_coherence_mass.assign(depth, 0.0);
    if (rows.empty()) {
        return agg;
    }
    agg.min_success = rows.front().success_probability;
    double sum = 0.0;
    std::size_t above = 0;
    for (const RunReport &r : rows) {
        agg.min_success = std::min(agg.min_success, r.success_probability);
        sum += r.success_probability;
        above += r.success_probability > 0.5 ? 1 : 0;
        agg.claim_matches += r.matches_declared_claim() ? 1 : 0;
        for (const DivergenceRecord &d : r.per_iteration) {
            if (d.q >= 1 && d.q <= depth) {
                agg.max_trace_distance[d.q - 1] = std::max(agg.max_trace_distance[d.q - 1], d.trace_distance);
                agg.max_coherence_mass[d.q - 1] = std::max(agg.max_coherence_mass[d.q - 1], d.coherence_mass);
            }
        }
        agg.resource_totals += r.resources;
    }
    agg.mean_success = sum / static_cast<double>(rows.size());
    agg.fraction_above_half = static_cast<double>(above) / static_cast<double>(rows.size());
    return agg;
}

SweepSummary success_sweep(std::span<const LeafAssignment> assignments, Mode mode, Interpretation interp,
                           const CircuitOptions &opts, std::uint64_t seed, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    SweepSummary out;
    out.mode = mode;
    if (mode == Mode::Circuit) {
        out.interpretation = interp;
    }
    out.depth = assignments.empty() ? 0 : assignments.front().depth();
    out.rows.resize(assignments.size());

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::size_t failed_at = assignments.size();

    auto worker = [&] {
        for (std::size_t k = next++; k < assignments.size(); k = next++) {
            try {
                out.rows[k] = mode == Mode::Declared ? declared_report(assignments[k], seed)
                                                     : circuit_run(assignments[k], interp, opts, seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (k < failed_at) {
                    failed_at = k;
                    failure = std::current_exception();
                }
                next = assignments.size();
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, assignments.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    if (failure) {
        const std::string which = assignments[failed_at].to_hex();
        const auto prefixed = [&](const std::exception &e) { return "assignment " + which + ": " + e.what(); };
        try {
            std::rethrow_exception(failure);
        } catch (const TooLarge &e) {
            throw TooLarge(prefixed(e));
        } catch (const LayoutError &e) {
            throw LayoutError(prefixed(e));
        } catch (const InvalidConfig &e) {
            throw InvalidConfig(prefixed(e));
        } catch (const Unsupported &e) {
            throw Unsupported(prefixed(e));
        } catch (const InvalidInput &e) {
            throw InvalidInput(prefixed(e));
        } catch (const std::exception &e) {
            throw std::runtime_error(prefixed(e));
        }
    }

    out.aggregates = aggregate(out.rows, out.depth);
    out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<SweepSummary> run_sweep(const SweepConfig &cfg) {
    const std::vector<LeafAssignment> assignments = sweep_assignments(cfg);
    const std::uint64_t seed = cfg.seed.value_or(0);
    std::vector<SweepSummary> out;
    if (cfg.mode != ModeSelection::Circuit) {
        out.push_back(success_sweep(assignments, Mode::Declared, cfg.interpretation, cfg.limits, seed, cfg.threads));
    }
    if (cfg.mode != ModeSelection::Declared) {
        out.push_back(success_sweep(assignments, Mode::Circuit, cfg.interpretation, cfg.limits, seed, cfg.threads));
    }
    return out;
}

std::string summary_json(const SweepSummary &s) {
    const SweepAggregates &a = s.aggregates;
    JsonWriter w;
    w.begin_object().key("summary").begin_object();
    w.field("mode", to_string(s.mode));
    w.key("interpretation");
    if (s.interpretation) {
        w.value(to_string(*s.interpretation));
    } else {
        w.null();
    }
    w.field("depth", s.depth);
    w.field("rows", static_cast<std::uint64_t>(a.rows));
    w.field("min_success", a.min_success);
    w.field("mean_success", a.mean_success);
    w.field("fraction_above_half", a.fraction_above_half);
    w.field("claim_matches", static_cast<std::uint64_t>(a.claim_matches));
    w.key("max_trace_distance").begin_array();
    for (double d : a.max_trace_distance) {
        w.value(d);
    }
    w.end_array();
    w.key("max_coherence_mass").begin_array();
    for (double d : a.max_coherence_mass) {
        w.value(d);
    }
    w.end_array();
    w.key("resource_totals").begin_object();
    w.field("oracle_queries", a.resource_totals.oracle_queries)
        .field("one_qubit_gates", a.resource_totals.one_qubit_gates)
        .field("two_qubit_gates", a.resource_totals.two_qubit_gates)
        .field("three_qubit_gates", a.resource_totals.three_qubit_gates);
    w.end_object();
    w.end_object().end_object();
    return w.str();
}

std::string to_jsonl(const SweepSummary &s) {
    std::string out;
    for (const RunReport &r : s.rows) {
        out += to_json(r);
        out += '\n';
    }
    out += summary_json(s);
    out += '\n';
    return out;
}

std::string csv_header() {
    return "mode,interpretation,depth,assignment_hex,p_root_0,p_root_1,oracle_root,success_probability,"
           "max_trace_distance,max_coherence_mass,oracle_queries,one_qubit_gates,two_qubit_gates,three_qubit_gates\n";
}

std::string to_csv(const SweepSummary &s) {
    std::string out;
    for (const RunReport &r : s.rows) {
        double max_td = 0.0;
        double max_cm = 0.0;
        for (const DivergenceRecord &d : r.per_iteration) {
            max_td = std::max(max_td, d.trace_distance);
            max_cm = std::max(max_cm, d.coherence_mass);
        }
        out += std::string(to_string(r.mode)) + ',' +
               (r.interpretation ? std::string(to_string(*r.interpretation)) : std::string()) + ',' +
               std::to_string(r.depth) + ',' + r.assignment_hex + ',' + format_double(r.root_distribution[0]) + ',' +
               format_double(r.root_distribution[1]) + ',' + std::to_string(r.oracle_root) + ',' +
               format_double(r.success_probability) + ',' + format_double(max_td) + ',' + format_double(max_cm) +
               ',' + std::to_string(r.resources.oracle_queries) + ',' + std::to_string(r.resources.one_qubit_gates) +
               ',' + std::to_string(r.resources.two_qubit_gates) + ',' +
               std::to_string(r.resources.three_qubit_gates) + '\n';
    }
    out += "# " + summary_json(s) + '\n';
    return out;
}

std::vector<ResourceRow> resource_table(unsigned n_max, Interpretation interp, const CircuitOptions &opts) {
    if (n_max > kDeclaredCountingLimit) {
        throw TooLarge("resource table is limited to depth " + std::to_string(kDeclaredCountingLimit));
    }
    std::vector<ResourceRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const LeafAssignment zeros(n, std::vector<Bit>(std::size_t{1} << n, 0));
        const DeclaredResult dr = declared_run(zeros);
        ResourceRow row;
        row.depth = n;
        row.declared = dr.trace.resources;
        row.steps = dr.trace.steps;
        row.closed_form_iteration_steps = closed_form_iteration_steps(n);
        row.closed_form_total_steps = closed_form_total_steps(n);
        row.closed_form_match = row.steps.iteration_steps() == row.closed_form_iteration_steps &&
                                row.steps.total() == row.closed_form_total_steps;
        if (n <= kCircuitCountingLimit && required_width(n, interp) <= opts.max_width) {
            const CircuitResult cr = circuit_simulate(zeros, interp, opts);
            row.circuit = cr.resources;
            row.circuit_width = cr.width;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string to_json(const ResourceRow &row) {
    JsonWriter w;
    w.begin_object();
    w.field("depth", row.depth);
    w.key("declared").begin_object();
    w.field("oracle_queries", row.declared.oracle_queries)
        .field("one_qubit_gates", row.declared.one_qubit_gates)
        .field("two_qubit_gates", row.declared.two_qubit_gates)
        .field("three_qubit_gates", row.declared.three_qubit_gates)
        .field("iteration_steps", row.steps.iteration_steps())
        .field("total_steps", row.steps.total());
    w.end_object();
    w.field("closed_form_iteration_steps", row.closed_form_iteration_steps);
    w.field("closed_form_total_steps", row.closed_form_total_steps);
    w.field("closed_form_match", row.closed_form_match);
    w.key("circuit");
    if (row.circuit) {
        w.begin_object()
            .field("width", *row.circuit_width)
            .field("oracle_queries", row.circuit->oracle_queries)
            .field("one_qubit_gates", row.circuit->one_qubit_gates)
            .field("two_qubit_gates", row.circuit->two_qubit_gates)
            .field("three_qubit_gates", row.circuit->three_qubit_gates)
            .end_object();
    } else {
        w.null();
    }
    w.end_object();
    return w.str();
}

std::string resource_csv(std::span<const ResourceRow> rows) {
    std::string out =
        "depth,declared_oracle_queries,iteration_steps,total_steps,closed_form_iteration_steps,"
        "closed_form_total_steps,closed_form_match,circuit_width,circuit_oracle_queries,circuit_one_qubit_gates,"
        "circuit_two_qubit_gates,circuit_three_qubit_gates\n";
    for (const ResourceRow &r : rows) {
        out += std::to_string(r.depth) + ',' + std::to_string(r.declared.oracle_queries) + ',' +
               std::to_string(r.steps.iteration_steps()) + ',' + std::to_string(r.steps.total()) + ',' +
               std::to_string(r.closed_form_iteration_steps) + ',' + std::to_string(r.closed_form_total_steps) + ',' +
               (r.closed_form_match ? "true" : "false") + ',';
        if (r.circuit) {
            out += std::to_string(*r.circuit_width) + ',' + std::to_string(r.circuit->oracle_queries) + ',' +
                   std::to_string(r.circuit->one_qubit_gates) + ',' + std::to_string(r.circuit->two_qubit_gates) +
                   ',' + std::to_string(r.circuit->three_qubit_gates);
        } else {
            out += ",,,,";
        }
        out += '\n';
    }
    return out;
}

}  // namespace nandsim
