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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quantprof/gate_times.hpp"

namespace quantprof {

/// Dense handle into the CircuitIR routine table.
using RoutineId = std::uint32_t;

enum class RoutineKind { Native, Composite };

/// One profiled unit: either a native hardware operation with a configured
/// duration, or a composite routine whose body is an ordered sequence of
/// calls to other routines.
struct Routine {
    std::string name;
    RoutineKind kind = RoutineKind::Composite;
    std::vector<RoutineId> body; // empty iff native; preserves source call order
    double duration = 0.0;       // meaningful for natives only

    bool is_native() const { return kind == RoutineKind::Native; }
};

/// Interned table of routines reachable from a single root. Exactly one
/// entry exists per distinct routine name. The table may be cyclic through
/// names; cycles are representable here and rejected later by aggregation.
class CircuitIR {
  public:
    RoutineId root() const { return root_; }
    std::size_t qubit_count() const { return qubit_count_; }

    const Routine &routine(RoutineId id) const { return routines_[id]; }
    std::size_t routine_count() const { return routines_.size(); }

    std::optional<RoutineId> find(std::string_view name) const;

    const std::string &name_of(RoutineId id) const { return routines_[id].name; }

  private:
    friend class IrBuilder;
    std::vector<Routine> routines_;
    std::unordered_map<std::string, RoutineId> by_name_;
    RoutineId root_ = 0;
    std::size_t qubit_count_ = 0;
};

/// The interface a frontend implements to expose its circuit representation.
///
/// `is_base()` marks native hardware operations; for those, `children()` is
/// empty. `identity_key()` drives interning: two adapters with equal keys
/// denote the same routine and only the first one encountered is traversed.
/// Equal keys must imply equal names.
class RoutineAdapter {
  public:
    virtual ~RoutineAdapter() = default;

    virtual std::string name() const = 0;
    virtual bool is_base() const = 0;
    virtual std::vector<std::shared_ptr<const RoutineAdapter>> children() const = 0;

    virtual std::string identity_key() const { return name(); }
};

/// Builds the interned IR by traversing an adapter tree.
///
/// A routine is native iff its name has a configured duration; for such
/// routines the adapter's children are never visited, which truncates the
/// decomposition at the configured gate set. Each identity key is traversed
/// at most once; re-encountering a key reuses its id, so recursive adapter
/// structures produce cyclic IRs instead of diverging.
///
/// Throws NativeGateWithoutTime if an `is_base()` adapter has no configured
/// duration, EmptyComposite for a non-native adapter without children, and
/// DuplicateRoutine if two distinct identity keys share a name.
CircuitIR build_ir(const RoutineAdapter &root, const GateTimes &times,
                   std::size_t qubit_count = 0);

} // namespace quantprof
