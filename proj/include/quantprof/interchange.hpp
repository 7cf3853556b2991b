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

#include "quantprof/circuit_ir.hpp"
#include "quantprof/gate_times.hpp"

namespace quantprof {

/// Parses the JSON interchange format:
///
///   {
///     "root": "main",
///     "routines": [
///       {"name": "main", "body": ["h", "cx", "h"]},
///       ...
///     ]
///   }
///
/// A body name must either appear in "routines" or have a configured
/// duration (making it a native leaf). Unknown fields are rejected. The
/// entry routine is the file's "root" unless `root` overrides it.
///
/// Throws SchemaError for malformed documents, DuplicateRoutine for
/// repeated routine names, UnknownGate for dangling references,
/// EmptyComposite for undurated routines with empty bodies, and
/// UnknownRootRoutine if a root override names no routine.
CircuitIR parse_interchange(std::string_view source, const GateTimes &times,
                            const std::optional<std::string> &root = std::nullopt);

} // namespace quantprof
