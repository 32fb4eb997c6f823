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

#include "nandsim/report.hpp"

#include <cmath>

#include "nandsim/json_writer.hpp"

namespace nandsim {

std::string_view to_string(Mode m) { return m == Mode::Declared ? "declared" : "circuit"; }

bool RunReport::matches_declared_claim() const {
    if (std::abs(success_probability - 1.0) > kStateTolerance) {
        return false;
    }
    for (const DivergenceRecord &d : per_iteration) {
        if (d.trace_distance > kStateTolerance) {
            return false;
        }
    }
    return true;
}

RunReport declared_report(const LeafAssignment &a, std::uint64_t seed) {
    DeclaredResult dr = declared_run(a);
    RunReport r;
    r.mode = Mode::Declared;
    r.depth = a.depth();
    r.assignment_hex = a.to_hex();
    r.root_distribution[dr.root] = 1.0;
    r.oracle_root = eval_root(a);
    r.success_probability = r.root_distribution[r.oracle_root];
    r.resources = dr.trace.resources;
    r.steps = dr.trace.steps;
    r.seed = seed;
    return r;
}

RunReport circuit_run(const LeafAssignment &a, Interpretation interp, const CircuitOptions &opts, std::uint64_t seed) {
    CircuitResult cr = circuit_simulate(a, interp, opts);
    DeclaredResult dr = declared_run(a);
    RunReport r;
    r.mode = Mode::Circuit;
    r.interpretation = interp;
    r.depth = a.depth();
    r.assignment_hex = a.to_hex();
    r.root_distribution = cr.root;
    r.oracle_root = eval_root(a);
    r.success_probability = cr.root[r.oracle_root];
    r.per_iteration = compare_traces(dr.trace, cr.snapshots);
    r.resources = cr.resources;
    r.seed = seed;
    return r;
}

std::string to_json(const RunReport &r) {
    JsonWriter w;
    w.begin_object();
    w.field("mode", to_string(r.mode));
    w.key("interpretation");
    if (r.interpretation) {
        w.value(to_string(*r.interpretation));
    } else {
        w.null();
    }
    w.field("depth", r.depth);
    w.field("assignment_hex", r.assignment_hex);
    w.key("root_distribution").begin_object();
    w.field("0", r.root_distribution[0]).field("1", r.root_distribution[1]);
    w.end_object();
    w.field("oracle_root", static_cast<unsigned>(r.oracle_root));
    w.field("success_probability", r.success_probability);
    w.key("per_iteration").begin_array();
    for (const DivergenceRecord &d : r.per_iteration) {
        w.begin_object()
            .field("q", d.q)
            .field("trace_distance", d.trace_distance)
            .field("coherence_mass", d.coherence_mass)
            .end_object();
    }
    w.end_array();
    w.key("resources").begin_object();
    w.field("oracle_queries", r.resources.oracle_queries)
        .field("one_qubit_gates", r.resources.one_qubit_gates)
        .field("two_qubit_gates", r.resources.two_qubit_gates)
        .field("three_qubit_gates", r.resources.three_qubit_gates);
    w.key("abstract_steps");
    if (r.steps) {
        w.value(r.steps->total());
    } else {
        w.null();
    }
    w.key("iteration_steps");
    if (r.steps) {
        w.value(r.steps->iteration_steps());
    } else {
        w.null();
    }
    w.end_object();
    w.field("seed", r.seed);
    w.end_object();
    return w.str();
}

}  // namespace nandsim
