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
#include <map>
#include <string>
#include <vector>

#include "quantprof/call_graph.hpp"
#include "quantprof/circuit_ir.hpp"

namespace quantprof {

/// What one call of a routine costs: how many times each native gate runs,
/// the resulting total time, and the routine's own hardware time. Only
/// native routines have a non-zero self time.
struct RoutineAggregate {
    std::map<std::string, std::uint64_t> native_counts;
    double total_time = 0.0;
    double self_time = 0.0;
};

/// Per-routine aggregates for every node of a call graph.
class Aggregates {
  public:
    const RoutineAggregate &at(RoutineId id) const { return per_node_[id]; }

    /// How many per-node computations the memoized pass performed. Equal to
    /// the reachable node count: shared subtrees are costed exactly once.
    std::size_t computation_count() const { return computations_; }

  private:
    friend Aggregates aggregate(const CircuitIR &ir, const CallGraph &g);
    std::vector<RoutineAggregate> per_node_; // indexed by RoutineId
    std::size_t computations_ = 0;
};

/// Memoized post-order costing over the call graph.
///
/// agg(native) = {itself: 1}; agg(composite) = elementwise sum of agg over
/// its edge sequence. Each node is computed once no matter how many callers
/// it has, so circuits whose full expansion is exponential still cost linear
/// work in the number of distinct routines.
///
/// Throws RecursionUnsupported when a cycle is reachable and CountOverflow
/// if a gate count exceeds 64 bits.
Aggregates aggregate(const CircuitIR &ir, const CallGraph &g);

/// Dynamic execution counts in the fully expanded program.
struct ExecCounts {
    /// Times each routine executes; 0 for unreachable ids. node_exec[root] = 1.
    std::vector<std::uint64_t> node_exec;
    /// Calls along each (caller, callee) pair, summed over call sites.
    std::map<std::pair<RoutineId, RoutineId>, std::uint64_t> edge_calls;
};

/// Forward propagation of execution counts from the root in topological
/// order: every call site of a routine executing n times contributes n
/// dynamic calls to its callee.
///
/// Throws RecursionUnsupported on cyclic graphs and CountOverflow if a
/// count exceeds 64 bits.
ExecCounts propagate_exec_counts(const CircuitIR &ir, const CallGraph &g);

} // namespace quantprof
