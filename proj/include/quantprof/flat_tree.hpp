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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quantprof/aggregates.hpp"
#include "quantprof/call_graph.hpp"
#include "quantprof/gate_times.hpp"

namespace quantprof {

/// Attribution of one caller/callee relationship: how many dynamic calls
/// flow along it and how much self/children time they account for.
struct CallContribution {
    std::string name;
    std::uint64_t calls = 0;
    double self = 0.0;
    double children = 0.0;

    bool operator==(const CallContribution &) const = default;
};

/// Per-routine summary row of the flat call-tree.
struct FlatEntry {
    std::size_t index = 0; // 1-based position in report order
    std::string name;
    std::uint64_t exec_count = 0;
    double self_time = 0.0;     // exec_count x native duration; 0 for composites
    double children_time = 0.0; // time spent in callees on this routine's behalf
    std::vector<CallContribution> callers; // empty for the root
    std::vector<CallContribution> callees; // empty for natives

    double total_time() const { return self_time + children_time; }

    bool operator==(const FlatEntry &) const = default;
};

/// Flattened summary of a directed call-tree, the structure every exporter
/// consumes. Entries are ordered by decreasing self time, then decreasing
/// total time, then name; indices are dense and assigned in that order.
struct FlatCallTree {
    std::vector<FlatEntry> entries;
    double total_time = 0.0;
    std::size_t qubit_count = 0;
    std::map<std::string, double> gate_times; // echoed for report headers

    const FlatEntry *find(const std::string &name) const;

    bool operator==(const FlatCallTree &) const = default;
};

/// Builds the flat call-tree from a costed DAG.
///
/// For an edge (A, B) carrying k dynamic calls, the caller record on B and
/// the mirrored callee record on A both attribute k x duration(B) of self
/// time (natives only) and k x per-call total of B minus that self portion
/// as children time.
FlatCallTree build_flat_call_tree(const CircuitIR &ir, const CallGraph &g,
                                  const Aggregates &agg, const ExecCounts &ec,
                                  const GateTimes &times);

/// Share of the total execution time spent in this routine or on its
/// behalf, in percent. Throws ZeroTotalTime if the tree's total is zero.
double total_percent(const FlatEntry &entry, const FlatCallTree &tree);

} // namespace quantprof
