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

#include "quantprof/aggregates.hpp"

#include "quantprof/errors.hpp"

namespace quantprof {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw CountOverflow();
    return out;
}

std::vector<std::string> witness_for(const CircuitIR &ir, const CallGraph &g) {
    auto cycles = detect_cycles(ir, g);
    if (cycles.empty()) return {"<unknown>"};
    return cycles.front();
}

enum class VisitState : std::uint8_t { Unvisited, InProgress, Done };

} // namespace

Aggregates aggregate(const CircuitIR &ir, const CallGraph &g) {
    Aggregates result;
    result.per_node_.resize(ir.routine_count());

    std::vector<VisitState> state(ir.routine_count(), VisitState::Unvisited);

    struct Frame {
        RoutineId node;
        std::size_t next_edge = 0;
    };
    std::vector<Frame> stack{{g.root(), 0}};
    state[g.root()] = VisitState::InProgress;

    while (!stack.empty()) {
        Frame &f = stack.back();
        const auto &edges = g.edges(f.node);

        if (f.next_edge < edges.size()) {
            RoutineId child = edges[f.next_edge++];
            if (state[child] == VisitState::InProgress) {
                throw RecursionUnsupported(witness_for(ir, g));
            }
            if (state[child] == VisitState::Unvisited) {
                state[child] = VisitState::InProgress;
                stack.push_back({child, 0});
            }
            continue;
        }

        // All callees costed; cost this node exactly once.
        RoutineId node = f.node;
        stack.pop_back();
        state[node] = VisitState::Done;
        result.computations_++;

        const Routine &r = ir.routine(node);
        RoutineAggregate &agg = result.per_node_[node];
        if (r.is_native()) {
            agg.native_counts[r.name] = 1;
            agg.total_time = r.duration;
            agg.self_time = r.duration;
            continue;
        }
        for (RoutineId callee : g.edges(node)) {
            const RoutineAggregate &sub = result.per_node_[callee];
            for (const auto &[gate, count] : sub.native_counts) {
                auto [it, inserted] = agg.native_counts.try_emplace(gate, count);
                if (!inserted) it->second = checked_add(it->second, count);
            }
            agg.total_time += sub.total_time;
        }
        agg.self_time = 0.0;
    }
    return result;
}

ExecCounts propagate_exec_counts(const CircuitIR &ir, const CallGraph &g) {
    // Kahn topological order over the reachable subgraph.
    std::vector<std::uint64_t> in_degree(ir.routine_count(), 0);
    for (RoutineId node : g.nodes()) {
        for (RoutineId callee : g.edges(node)) in_degree[callee]++;
    }

    std::vector<RoutineId> order;
    order.reserve(g.node_count());
    std::vector<RoutineId> ready;
    for (RoutineId node : g.nodes()) {
        if (in_degree[node] == 0) ready.push_back(node);
    }
    while (!ready.empty()) {
        RoutineId node = ready.back();
        ready.pop_back();
        order.push_back(node);
        for (RoutineId callee : g.edges(node)) {
            if (--in_degree[callee] == 0) ready.push_back(callee);
        }
    }
    if (order.size() != g.node_count()) {
        throw RecursionUnsupported(witness_for(ir, g));
    }

    ExecCounts counts;
    counts.node_exec.assign(ir.routine_count(), 0);
    counts.node_exec[g.root()] = 1;
    for (RoutineId node : order) {
        std::uint64_t n = counts.node_exec[node];
        for (RoutineId callee : g.edges(node)) {
            auto [it, inserted] = counts.edge_calls.try_emplace({node, callee}, 0);
            it->second = checked_add(it->second, n);
            counts.node_exec[callee] = checked_add(counts.node_exec[callee], n);
        }
    }
    return counts;
}

} // namespace quantprof
