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

#include "quantprof/circuit_ir.hpp"

#include <utility>

#include "quantprof/errors.hpp"

namespace quantprof {

std::optional<RoutineId> CircuitIR::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

/// Incremental construction of a CircuitIR. Used by build_ir and kept
/// private to the implementation; frontends go through RoutineAdapter.
class IrBuilder {
  public:
    explicit IrBuilder(const GateTimes &times) : times_(times) {}

    /// Interns the routine for `key`, creating an empty slot on first use.
    /// Returns the id and whether the slot was newly created.
    std::pair<RoutineId, bool> intern(const std::string &key, const std::string &name) {
        auto it = by_key_.find(key);
        if (it != by_key_.end()) return {it->second, false};

        auto named = ir_.by_name_.find(name);
        if (named != ir_.by_name_.end()) {
            // A different identity key already claimed this name; the
            // one-routine-per-name invariant would break.
            throw DuplicateRoutine(name);
        }
        RoutineId id = static_cast<RoutineId>(ir_.routines_.size());
        ir_.routines_.push_back(Routine{name, RoutineKind::Composite, {}, 0.0});
        ir_.by_name_.emplace(name, id);
        by_key_.emplace(key, id);
        return {id, true};
    }

    Routine &routine(RoutineId id) { return ir_.routines_[id]; }

    CircuitIR finish(RoutineId root, std::size_t qubit_count) {
        ir_.root_ = root;
        ir_.qubit_count_ = qubit_count;
        return std::move(ir_);
    }

    const GateTimes &times() const { return times_; }

  private:
    const GateTimes &times_;
    CircuitIR ir_;
    std::unordered_map<std::string, RoutineId> by_key_;
};

namespace {

// One traversal frame per composite adapter whose body is being filled.
struct Frame {
    std::vector<std::shared_ptr<const RoutineAdapter>> children;
    std::size_t next = 0;
    RoutineId id = 0;
};

RoutineId visit(IrBuilder &builder, const RoutineAdapter &root) {
    // Interns `root` and, iteratively, everything reachable from it.
    // Returns the id assigned to `root`.
    auto enter = [&builder](const RoutineAdapter &node,
                            std::vector<Frame> &stack) -> RoutineId {
        const std::string key = node.identity_key();
        const std::string name = node.name();

        if (auto duration = builder.times().find(name)) {
            auto [id, fresh] = builder.intern(key, name);
            if (fresh) {
                Routine &r = builder.routine(id);
                r.kind = RoutineKind::Native;
                r.duration = *duration;
            }
            return id;
        }
        if (node.is_base()) throw NativeGateWithoutTime(name);

        auto [id, fresh] = builder.intern(key, name);
        if (!fresh) return id; // already traversed (or in progress: recursion)

        Frame frame;
        frame.id = id;
        frame.children = node.children();
        if (frame.children.empty()) throw EmptyComposite(name);
        builder.routine(id).body.reserve(frame.children.size());
        stack.push_back(std::move(frame));
        return id;
    };

    std::vector<Frame> stack;
    RoutineId root_id = enter(root, stack);
    while (!stack.empty()) {
        if (stack.back().next == stack.back().children.size()) {
            stack.pop_back();
            continue;
        }
        // enter() may push a frame and reallocate the stack, so grab what we
        // need from the current top before calling it.
        RoutineId parent = stack.back().id;
        std::shared_ptr<const RoutineAdapter> child = stack.back().children[stack.back().next++];
        RoutineId child_id = enter(*child, stack);
        builder.routine(parent).body.push_back(child_id);
    }
    return root_id;
}

} // namespace

CircuitIR build_ir(const RoutineAdapter &root, const GateTimes &times,
                   std::size_t qubit_count) {
    IrBuilder builder(times);
    RoutineId root_id = visit(builder, root);
    return builder.finish(root_id, qubit_count);
}

} // namespace quantprof
