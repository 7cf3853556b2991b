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

#include "quantprof/flat_tree.hpp"

#include <algorithm>

#include "quantprof/errors.hpp"

namespace quantprof {

const FlatEntry *FlatCallTree::find(const std::string &name) const {
    for (const FlatEntry &entry : entries) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

namespace {

// Contribution of k calls into routine `callee`.
CallContribution contribution(const CircuitIR &ir, const Aggregates &agg, RoutineId callee,
                              std::uint64_t k, const std::string &record_name) {
    const Routine &r = ir.routine(callee);
    double self = r.is_native() ? static_cast<double>(k) * r.duration : 0.0;
    double total = static_cast<double>(k) * agg.at(callee).total_time;
    return CallContribution{record_name, k, self, total - self};
}

void sort_contributions(std::vector<CallContribution> &records) {
    std::sort(records.begin(), records.end(),
              [](const CallContribution &a, const CallContribution &b) {
                  double at = a.self + a.children;
                  double bt = b.self + b.children;
                  if (at != bt) return at > bt;
                  return a.name < b.name;
              });
}

} // namespace

FlatCallTree build_flat_call_tree(const CircuitIR &ir, const CallGraph &g,
                                  const Aggregates &agg, const ExecCounts &ec,
                                  const GateTimes &times) {
    FlatCallTree tree;
    tree.qubit_count = ir.qubit_count();
    tree.gate_times = times.entries();

    std::vector<FlatEntry> entries;
    entries.reserve(g.node_count());
    for (RoutineId id : g.nodes()) {
        const Routine &r = ir.routine(id);
        FlatEntry entry;
        entry.name = r.name;
        entry.exec_count = ec.node_exec[id];
        entry.self_time =
            r.is_native() ? static_cast<double>(entry.exec_count) * r.duration : 0.0;
        entry.children_time =
            static_cast<double>(entry.exec_count) * agg.at(id).total_time - entry.self_time;
        entries.push_back(std::move(entry));
    }

    // Caller and callee attribution from the dynamic edge counts. Records on
    // both endpoints of an edge carry identical numbers.
    std::vector<std::size_t> position(ir.routine_count(), 0);
    for (std::size_t i = 0; i < g.nodes().size(); ++i) position[g.nodes()[i]] = i;
    auto entry_of = [&](RoutineId id) -> FlatEntry & { return entries[position[id]]; };
    for (const auto &[edge, k] : ec.edge_calls) {
        auto [caller, callee] = edge;
        entry_of(callee).callers.push_back(
            contribution(ir, agg, callee, k, ir.name_of(caller)));
        entry_of(caller).callees.push_back(
            contribution(ir, agg, callee, k, ir.name_of(callee)));
    }
    for (FlatEntry &entry : entries) {
        sort_contributions(entry.callers);
        sort_contributions(entry.callees);
        tree.total_time += entry.self_time;
    }

    std::sort(entries.begin(), entries.end(), [](const FlatEntry &a, const FlatEntry &b) {
        if (a.self_time != b.self_time) return a.self_time > b.self_time;
        if (a.total_time() != b.total_time()) return a.total_time() > b.total_time();
        return a.name < b.name;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].index = i + 1;
    tree.entries = std::move(entries);
    return tree;
}

double total_percent(const FlatEntry &entry, const FlatCallTree &tree) {
    if (tree.total_time == 0.0) throw ZeroTotalTime();
    return 100.0 * entry.total_time() / tree.total_time;
}

} // namespace quantprof
