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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

#include "nandsim/errors.hpp"

using namespace nandsim;

namespace {

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(RunReport, json_key_order) {
    RunReport r = circuit_run(LeafAssignment(2, {0, 1, 1, 1}), Interpretation::ReuseIndex);
    auto j = nlohmann::ordered_json::parse(to_json(r));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"mode", "interpretation", "depth", "assignment_hex", "root_distribution",
                                              "oracle_root", "success_probability", "per_iteration", "resources",
                                              "seed"}));
    EXPECT_EQ(j["mode"], "circuit");
    EXPECT_EQ(j["interpretation"], "reuse-index");
    EXPECT_EQ(j["assignment_hex"], "7");
    ASSERT_EQ(j["per_iteration"].size(), 2u);
    EXPECT_EQ(j["per_iteration"][1]["q"], 2);
    EXPECT_EQ(j["resources"]["oracle_queries"], 2);
    EXPECT_TRUE(j["resources"]["abstract_steps"].is_null());
}

TEST(RunReport, declared_report) {
    RunReport r = declared_report(LeafAssignment(2, {0, 1, 1, 1}), 42);
    EXPECT_EQ(r.oracle_root, 1);
    EXPECT_EQ(r.success_probability, 1.0);
    EXPECT_TRUE(r.oracle_agreement());
    EXPECT_TRUE(r.matches_declared_claim());
    auto j = nlohmann::json::parse(to_json(r));
    EXPECT_TRUE(j["interpretation"].is_null());
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["resources"]["iteration_steps"], 11);
    EXPECT_EQ(j["resources"]["abstract_steps"], 14);
}

TEST(SweepConfig, validation) {
    SweepConfig cfg;
    cfg.depth = 4;
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg.scope = SweepScope::parse("random:5");
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg.seed = 1;
    EXPECT_NO_THROW(cfg.validate());
    cfg.depth = 0;
    EXPECT_THROW(cfg.validate(), InvalidConfig);

    EXPECT_EQ(SweepScope::parse("random:12").count, 12u);
    EXPECT_THROW(SweepScope::parse("random:"), InvalidConfig);
    EXPECT_THROW(SweepScope::parse("random:x"), InvalidConfig);
    EXPECT_THROW(SweepScope::parse("all"), InvalidConfig);
    EXPECT_THROW(parse_mode("quantum"), InvalidConfig);
    EXPECT_THROW(parse_format("xml"), InvalidConfig);
}

TEST(SuccessSweep, declared_depths_succeed) {
    for (unsigned depth : {1u, 3u}) {
        auto assignments = enumerate_assignments(depth);
        SweepSummary s = success_sweep(assignments, Mode::Declared, Interpretation::FreshB);
        EXPECT_EQ(s.rows.size(), assignments.size());
        EXPECT_EQ(s.aggregates.mean_success, 1.0);
        EXPECT_EQ(s.aggregates.min_success, 1.0);
        EXPECT_EQ(s.aggregates.claim_matches, assignments.size());
    }
}

TEST(SuccessSweep, aggregates_recompute_from_rows) {
    auto assignments = enumerate_assignments(2);
    for (Interpretation interp : {Interpretation::FreshB, Interpretation::ReuseIndex}) {
        SweepSummary s = success_sweep(assignments, Mode::Circuit, interp);
        ASSERT_EQ(s.rows.size(), 16u);
        double min = 1.0, sum = 0.0;
        std::size_t above = 0;
        for (std::size_t k = 0; k < s.rows.size(); ++k) {
            EXPECT_EQ(s.rows[k].assignment_hex, assignments[k].to_hex());
            min = std::min(min, s.rows[k].success_probability);
            sum += s.rows[k].success_probability;
            above += s.rows[k].success_probability > 0.5;
            EXPECT_NEAR(s.rows[k].root_distribution[0] + s.rows[k].root_distribution[1], 1.0, 1e-12);
        }
        EXPECT_EQ(s.aggregates.min_success, min);
        EXPECT_DOUBLE_EQ(s.aggregates.mean_success, sum / 16.0);
        EXPECT_DOUBLE_EQ(s.aggregates.fraction_above_half, above / 16.0);
        EXPECT_EQ(s.aggregates, aggregate(s.rows, 2));
    }
}

TEST(SuccessSweep, depth_two_means) {
    // See CircuitSimulate.depth_two_closed_forms: 13/16 and 7/16.
    auto assignments = enumerate_assignments(2);
    EXPECT_DOUBLE_EQ(success_sweep(assignments, Mode::Circuit, Interpretation::FreshB).aggregates.mean_success,
                     0.8125);
    EXPECT_DOUBLE_EQ(success_sweep(assignments, Mode::Circuit, Interpretation::ReuseIndex).aggregates.mean_success,
                     0.4375);
}

TEST(SuccessSweep, thread_count_does_not_change_rows) {
    auto assignments = enumerate_assignments(2);
    SweepSummary one = success_sweep(assignments, Mode::Circuit, Interpretation::FreshB, {}, 0, 1);
    SweepSummary four = success_sweep(assignments, Mode::Circuit, Interpretation::FreshB, {}, 0, 4);
    EXPECT_EQ(one.rows, four.rows);
    EXPECT_EQ(to_jsonl(one), to_jsonl(four));
}

TEST(SuccessSweep, failure_names_assignment) {
    auto assignments = enumerate_assignments(2);
    try {
        success_sweep(assignments, Mode::Circuit, Interpretation::FreshB, {4, 12});
        FAIL() << "expected TooLarge";
    } catch (const TooLarge &e) {
        EXPECT_NE(std::string(e.what()).find("assignment 0"), std::string::npos) << e.what();
    }
}

TEST(SweepAssignments, random_scope_is_seeded_distinct_and_sorted) {
    SweepConfig cfg;
    cfg.depth = 4;
    cfg.scope = SweepScope::parse("random:20");
    cfg.seed = 99;
    auto a = sweep_assignments(cfg);
    auto b = sweep_assignments(cfg);
    ASSERT_EQ(a.size(), 20u);
    EXPECT_EQ(a, b);
    for (std::size_t k = 1; k < a.size(); ++k) {
        EXPECT_LT(a[k - 1].index(), a[k].index());
    }
    cfg.seed = 100;
    EXPECT_NE(sweep_assignments(cfg), a);

    cfg.depth = 1;
    cfg.scope = SweepScope::parse("random:5");
    EXPECT_THROW(sweep_assignments(cfg), InvalidConfig);
}

TEST(RunSweep, both_modes_and_output_forms) {
    SweepConfig cfg;
    cfg.depth = 1;
    cfg.mode = ModeSelection::Both;
    auto summaries = run_sweep(cfg);
    ASSERT_EQ(summaries.size(), 2u);
    EXPECT_EQ(summaries[0].mode, Mode::Declared);
    EXPECT_EQ(summaries[1].mode, Mode::Circuit);

    auto jl = lines(to_jsonl(summaries[1]));
    ASSERT_EQ(jl.size(), 5u);
    auto summary = nlohmann::json::parse(jl.back())["summary"];
    EXPECT_EQ(summary["rows"], 4);
    EXPECT_DOUBLE_EQ(summary["mean_success"].get<double>(), summaries[1].aggregates.mean_success);

    auto csv = lines(csv_header() + to_csv(summaries[0]));
    ASSERT_EQ(csv.size(), 6u);
    EXPECT_EQ(csv[1].substr(0, 12), "declared,,1,");
    EXPECT_EQ(csv.back().substr(0, 2), "# ");
}

TEST(ResourceTable, counts) {
    auto rows = resource_table(8, Interpretation::FreshB);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[0].steps.iteration_steps(), 5u);
    EXPECT_EQ(rows[1].steps.iteration_steps(), 11u);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_TRUE(rows[k].closed_form_match);
        EXPECT_EQ(rows[k].circuit.has_value(), rows[k].depth <= 4);
        if (k >= 2) {
            EXPECT_EQ(rows[k].steps.iteration_steps() - rows[k - 1].steps.iteration_steps(),
                      rows[k - 1].steps.iteration_steps() - rows[k - 2].steps.iteration_steps());
        }
    }
    EXPECT_EQ(rows[0].circuit->oracle_queries, 2u);
    EXPECT_EQ(*rows[3].circuit_width, 20u);
    EXPECT_THROW(resource_table(9, Interpretation::FreshB), TooLarge);
}
