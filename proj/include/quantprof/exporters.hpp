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
#include <string_view>

#include "quantprof/flat_tree.hpp"

namespace quantprof {

/// Serializes the tree as a gprof-compatible text report: a flat profile
/// followed by a call-graph section. Column headers match gprof verbatim so
/// downstream tooling (gprof2dot and friends) keeps working; times are in
/// the configured unit despite the "seconds" captions. Byte-deterministic.
std::string export_gprof(const FlatCallTree &tree);

/// Serializes the tree as JSON with sorted keys. Deterministic; the exact
/// inverse of flat_tree_from_json.
std::string export_json(const FlatCallTree &tree);

/// Parses a report produced by export_json back into an equal FlatCallTree.
FlatCallTree flat_tree_from_json(std::string_view text);

/// Plot-noise cutoffs for the DOT exporter, in percent of total time.
/// Nodes strictly below node_percent are dropped; edges at or below
/// edge_percent are dropped, as are edges touching a dropped node.
struct DotThresholds {
    double node_percent = 0.5;
    double edge_percent = 0.1;
};

/// Renders the call graph as a Graphviz digraph. Node labels carry the
/// total and self percentages and the execution count; edge labels carry
/// dynamic call counts and the time share they account for.
std::string export_dot(const FlatCallTree &tree, const DotThresholds &thresholds = {});

} // namespace quantprof
