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

#include "quantprof/call_graph.hpp"

#include <algorithm>
#include <cstdint>

namespace quantprof {

CallGraph build_call_graph(const CircuitIR &ir) {
    CallGraph g;
    g.root_ = ir.root();
    g.reachable_.assign(ir.routine_count(), false);
    g.out_edges_.resize(ir.routine_count());

    std::vector<RoutineId> worklist{ir.root()};
    g.reachable_[ir.root()] = true;
    while (!worklist.empty()) {
        RoutineId id = worklist.back();
        worklist.pop_back();
        const Routine &r = ir.routine(id);
        g.out_edges_[id] = r.body;
        for (RoutineId callee : r.body) {
            if (!g.reachable_[callee]) {
                g.reachable_[callee] = true;
                worklist.push_back(callee);
            }
        }
    }
    for (RoutineId id = 0; id < ir.routine_count(); ++id) {
        if (g.reachable_[id]) g.nodes_.push_back(id);
    }
    return g;
}

namespace {

/// Iterative Tarjan SCC over the reachable subgraph.
struct TarjanState {
    static constexpr std::uint32_t kUnvisited = UINT32_MAX;
    std::vector<std::uint32_t> index;
    std::vector<std::uint32_t> lowlink;
    std::vector<bool> on_stack;
    std::vector<RoutineId> stack;
    std::uint32_t next_index = 0;
    std::vector<std::vector<RoutineId>> components; // in completion order
};

void tarjan_from(const CallGraph &g, RoutineId start, TarjanState &st) {
    struct Frame {
        RoutineId node;
        std::size_t next_edge;
    };
    std::vector<Frame> frames{{start, 0}};
    st.index[start] = st.lowlink[start] = st.next_index++;
    st.stack.push_back(start);
    st.on_stack[start] = true;

    while (!frames.empty()) {
        Frame &f = frames.back();
        const auto &edges = g.edges(f.node);
        bool descended = false;
        while (f.next_edge < edges.size()) {
            RoutineId child = edges[f.next_edge++];
            if (st.index[child] == TarjanState::kUnvisited) {
                st.index[child] = st.lowlink[child] = st.next_index++;
                st.stack.push_back(child);
                st.on_stack[child] = true;
                frames.push_back({child, 0});
                descended = true;
                break;
            }
            if (st.on_stack[child]) {
                st.lowlink[f.node] = std::min(st.lowlink[f.node], st.index[child]);
            }
        }
        if (descended) continue;

        RoutineId node = f.node;
        frames.pop_back();
        if (!frames.empty()) {
            RoutineId parent = frames.back().node;
            st.lowlink[parent] = std::min(st.lowlink[parent], st.lowlink[node]);
        }
        if (st.lowlink[node] == st.index[node]) {
            std::vector<RoutineId> component;
            RoutineId member;
            do {
                member = st.stack.back();
                st.stack.pop_back();
                st.on_stack[member] = false;
                component.push_back(member);
            } while (member != node);
            std::sort(component.begin(), component.end());
            st.components.push_back(std::move(component));
        }
    }
}

bool has_self_loop(const CallGraph &g, RoutineId node) {
    const auto &edges = g.edges(node);
    return std::find(edges.begin(), edges.end(), node) != edges.end();
}

/// A shortest path start -> ... -> pred where (pred -> start) closes the
/// cycle, restricted to nodes of one component. BFS keeps the witness short.
std::vector<RoutineId> witness_cycle(const CallGraph &g, const std::vector<RoutineId> &component) {
    RoutineId start = component.front(); // smallest id, for determinism
    if (component.size() == 1) return {start};

    std::vector<bool> in_component(*std::max_element(component.begin(), component.end()) + 1, false);
    for (RoutineId id : component) in_component[id] = true;

    std::vector<RoutineId> parent(in_component.size(), start);
    std::vector<bool> seen(in_component.size(), false);
    seen[start] = true;
    std::vector<RoutineId> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        RoutineId node = queue[head];
        for (RoutineId child : g.edges(node)) {
            if (child == start) {
                std::vector<RoutineId> path;
                for (RoutineId walk = node; walk != start; walk = parent[walk]) {
                    path.push_back(walk);
                }
                path.push_back(start);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (child < in_component.size() && in_component[child] && !seen[child]) {
                seen[child] = true;
                parent[child] = node;
                queue.push_back(child);
            }
        }
    }
    return {start}; // unreachable: a nontrivial SCC always closes a cycle
}

} // namespace

std::vector<std::vector<std::string>> detect_cycles(const CircuitIR &ir, const CallGraph &g) {
    TarjanState st;
    st.index.assign(ir.routine_count(), TarjanState::kUnvisited);
    st.lowlink.assign(ir.routine_count(), 0);
    st.on_stack.assign(ir.routine_count(), false);
    for (RoutineId node : g.nodes()) {
        if (st.index[node] == TarjanState::kUnvisited) tarjan_from(g, node, st);
    }

    std::vector<std::vector<std::string>> cycles;
    // Tarjan emits components in reverse topological order; report them in
    // ascending order of their smallest member for stable output.
    std::sort(st.components.begin(), st.components.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    for (const auto &component : st.components) {
        if (component.size() == 1 && !has_self_loop(g, component.front())) continue;
        std::vector<std::string> names;
        for (RoutineId id : witness_cycle(g, component)) {
            names.push_back(ir.name_of(id));
        }
        cycles.push_back(std::move(names));
    }
    return cycles;
}

} // namespace quantprof
