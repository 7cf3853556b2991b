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

#include <optional>
#include <string>
#include <string_view>

#include "quantprof/exporters.hpp"
#include "quantprof/flat_tree.hpp"
#include "quantprof/gate_times.hpp"

namespace quantprof {

enum class InputFormat { Qasm, Interchange };
enum class ReportFormat { Gprof, Json, Dot };

struct ProfileOptions {
    InputFormat format = InputFormat::Qasm;
    /// Profile this routine instead of the program entry point.
    std::optional<std::string> root;
};

/// Runs the whole pipeline on one source text: parse, lower to the interned
/// IR, build the call graph, reject cycles, compute memoized aggregates and
/// execution counts, and flatten into a report-ready call-tree.
FlatCallTree profile_source(std::string_view source, const GateTimes &times,
                            const ProfileOptions &options = {});

/// Renders a flat call-tree in the chosen report format. The thresholds
/// apply to the dot format only.
std::string render_report(const FlatCallTree &tree, ReportFormat format,
                          const DotThresholds &thresholds = {});

} // namespace quantprof
