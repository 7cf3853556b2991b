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

#include <string>
#include <vector>

#include "quantprof/circuit_ir.hpp"

namespace quantprof {

/// Deduplicated call graph: one node per routine, one ordered out-edge per
/// call site. Only routines reachable from the root are nodes.
class CallGraph {
  public:
    RoutineId root() const { return root_; }

    /// Reachable routine ids, in deterministic (ascending id) order.
    const std::vector<RoutineId> &nodes() const { return nodes_; }

    bool is_node(RoutineId id) const {
        return id < reachable_.size() && reachable_[id];
    }

    /// Out-edges of `caller`, one entry per call site, in body order.
    const std::vector<RoutineId> &edges(RoutineId caller) const {
        return out_edges_[caller];
    }

    std::size_t node_count() const { return nodes_.size(); }

  private:
    friend CallGraph build_call_graph(const CircuitIR &ir);
    RoutineId root_ = 0;
    std::vector<RoutineId> nodes_;
    std::vector<bool> reachable_;                 // indexed by RoutineId
    std::vector<std::vector<RoutineId>> out_edges_; // indexed by RoutineId
};

/// Builds the call graph of the routines reachable from ir.root().
/// Edge sequences mirror routine bodies exactly.
CallGraph build_call_graph(const CircuitIR &ir);

/// Returns one witness cycle (as a routine-name sequence) per strongly
/// connected component that is larger than one node or has a self-loop.
/// An empty result means the graph is a DAG.
std::vector<std::vector<std::string>> detect_cycles(const CircuitIR &ir, const CallGraph &g);

} // namespace quantprof
