// Copyright 2026 The quantprof Authors
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

#include "quantprof/profile.hpp"

#include "quantprof/aggregates.hpp"
#include "quantprof/call_graph.hpp"
#include "quantprof/errors.hpp"
#include "quantprof/interchange.hpp"
#include "quantprof/qasm.hpp"

namespace quantprof {

FlatCallTree profile_source(std::string_view source, const GateTimes &times,
                            const ProfileOptions &options) {
    CircuitIR ir = options.format == InputFormat::Qasm
                       ? qasm::lower_qasm(qasm::parse_qasm(source), times, options.root)
                       : parse_interchange(source, times, options.root);
    CallGraph graph = build_call_graph(ir);
    std::vector<std::vector<std::string>> cycles = detect_cycles(ir, graph);
    if (!cycles.empty()) {
        throw RecursionUnsupported(cycles.front());
    }
    Aggregates agg = aggregate(ir, graph);
    ExecCounts counts = propagate_exec_counts(ir, graph);
    return build_flat_call_tree(ir, graph, agg, counts, times);
}

std::string render_report(const FlatCallTree &tree, ReportFormat format,
                          const DotThresholds &thresholds) {
    switch (format) {
    case ReportFormat::Gprof:
        return export_gprof(tree);
    case ReportFormat::Json:
        return export_json(tree);
    case ReportFormat::Dot:
        return export_dot(tree, thresholds);
    }
    return {};
}

} // namespace quantprof
