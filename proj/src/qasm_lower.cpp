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

#include <limits>
#include <map>

#include "quantprof/errors.hpp"
#include "quantprof/qasm.hpp"

namespace quantprof::qasm {

namespace {

using AdapterPtr = std::shared_ptr<const RoutineAdapter>;

class NativeOp : public RoutineAdapter {
  public:
    explicit NativeOp(std::string name) : name_(std::move(name)) {}
    std::string name() const override { return name_; }
    bool is_base() const override { return true; }
    std::vector<AdapterPtr> children() const override { return {}; }

  private:
    std::string name_;
};

/// Resolves call sites to adapters. Shared by the synthetic main routine
/// and by gate-definition bodies.
///
/// Every definition carries its statement index, and a call site only sees
/// definitions with a strictly smaller index. This is the define-before-use
/// rule of the language; it makes recursion inexpressible, so lowered
/// programs always yield acyclic call graphs.
struct LoweringContext {
    template <typename T> struct Indexed {
        const T *node;
        std::size_t index;
    };

    const GateTimes &times;
    std::map<std::string, Indexed<GateDef>> defs;
    std::map<std::string, Indexed<OpaqueDecl>> opaques;
    std::map<std::string, std::size_t> qregs;
    std::map<std::string, AdapterPtr> cache;

    AdapterPtr native(const std::string &name);
    AdapterPtr native_builtin_target(const std::string &target);
    AdapterPtr resolve(const std::string &name, std::size_t n_params,
                       std::size_t n_qubits, int line, std::size_t visible_before);
    AdapterPtr adapter_for_def(const GateDef *def, std::size_t index);

    /// Number of calls a statement expands to: whole-register operands
    /// broadcast the operation across the register.
    std::size_t broadcast_factor(const std::vector<Operand> &operands) const {
        for (const Operand &op : operands) {
            if (op.kind == Operand::Kind::Whole) {
                return qregs.at(op.reg);
            }
        }
        return 1;
    }
};

class GateAdapter : public RoutineAdapter {
  public:
    GateAdapter(const GateDef *def, std::size_t index, LoweringContext *ctx)
        : def_(def), index_(index), ctx_(ctx) {}

    std::string name() const override { return def_->name; }
    bool is_base() const override { return false; }

    std::vector<AdapterPtr> children() const override {
        std::vector<AdapterPtr> out;
        for (const BodyStmt &stmt : def_->body) {
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                out.push_back(ctx_->resolve(call->name, call->params.size(),
                                            call->qubits.size(), call->pos.line, index_));
            }
            // Barriers are synchronization hints and contribute no calls.
        }
        return out;
    }

  private:
    const GateDef *def_;
    std::size_t index_;
    LoweringContext *ctx_;
};

/// The synthetic entry routine holding the program's top-level operations.
class MainAdapter : public RoutineAdapter {
  public:
    MainAdapter(const QasmAst *ast, LoweringContext *ctx) : ast_(ast), ctx_(ctx) {}

    std::string name() const override { return "main"; }
    bool is_base() const override { return false; }

    std::vector<AdapterPtr> children() const override {
        std::vector<AdapterPtr> out;
        for (std::size_t index = 0; index < ast_->statements.size(); ++index) {
            const Statement &stmt = ast_->statements[index];
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                AdapterPtr target =
                    ctx_->resolve(call->name, call->params.size(), call->qubits.size(),
                                  call->pos.line, index);
                std::size_t copies = ctx_->broadcast_factor(call->qubits);
                out.insert(out.end(), copies, target);
            } else if (const auto *measure = std::get_if<MeasureStmt>(&stmt)) {
                AdapterPtr target = ctx_->native("measure");
                std::size_t copies = measure->qubit.kind == Operand::Kind::Whole
                                         ? ctx_->qregs.at(measure->qubit.reg)
                                         : 1;
                out.insert(out.end(), copies, target);
            } else if (const auto *reset = std::get_if<ResetStmt>(&stmt)) {
                AdapterPtr target = ctx_->native("reset");
                std::size_t copies = reset->qubit.kind == Operand::Kind::Whole
                                         ? ctx_->qregs.at(reset->qubit.reg)
                                         : 1;
                out.insert(out.end(), copies, target);
            }
        }
        return out;
    }

  private:
    const QasmAst *ast_;
    LoweringContext *ctx_;
};

AdapterPtr LoweringContext::native(const std::string &name) {
    auto it = cache.find(name);
    if (it != cache.end()) {
        return it->second;
    }
    AdapterPtr adapter = std::make_shared<NativeOp>(name);
    cache.emplace(name, adapter);
    return adapter;
}

AdapterPtr LoweringContext::native_builtin_target(const std::string &target) {
    if (!times.contains(target)) {
        throw NativeGateWithoutTime(target);
    }
    return native(target);
}

AdapterPtr LoweringContext::adapter_for_def(const GateDef *def, std::size_t index) {
    auto it = cache.find(def->name);
    if (it != cache.end()) {
        return it->second;
    }
    AdapterPtr adapter = std::make_shared<GateAdapter>(def, index, this);
    cache.emplace(def->name, adapter);
    return adapter;
}

AdapterPtr LoweringContext::resolve(const std::string &name, std::size_t n_params,
                                    std::size_t n_qubits, int line,
                                    std::size_t visible_before) {
    // The builtins lower to their hardware realizations, which must be priced.
    if (name == "U") {
        if (n_params != 3) {
            throw ArityMismatch(name, 3, n_params, line, "parameters");
        }
        if (n_qubits != 1) {
            throw ArityMismatch(name, 1, n_qubits, line);
        }
        return native_builtin_target("u3");
    }
    if (name == "CX") {
        if (n_params != 0) {
            throw ArityMismatch(name, 0, n_params, line, "parameters");
        }
        if (n_qubits != 2) {
            throw ArityMismatch(name, 2, n_qubits, line);
        }
        return native_builtin_target("cx");
    }

    auto def_it = defs.find(name);
    if (def_it != defs.end() && def_it->second.index < visible_before) {
        const GateDef *def = def_it->second.node;
        if (def->params.size() != n_params) {
            throw ArityMismatch(name, def->params.size(), n_params, line, "parameters");
        }
        if (def->qargs.size() != n_qubits) {
            throw ArityMismatch(name, def->qargs.size(), n_qubits, line);
        }
        if (times.contains(name)) {
            return native(name); // configured duration truncates the decomposition
        }
        return adapter_for_def(def, def_it->second.index);
    }

    auto opaque_it = opaques.find(name);
    if (opaque_it != opaques.end() && opaque_it->second.index < visible_before) {
        const OpaqueDecl *decl = opaque_it->second.node;
        if (decl->params.size() != n_params) {
            throw ArityMismatch(name, decl->params.size(), n_params, line, "parameters");
        }
        if (decl->qargs.size() != n_qubits) {
            throw ArityMismatch(name, decl->qargs.size(), n_qubits, line);
        }
        if (times.contains(name)) {
            return native(name);
        }
        throw NativeGateWithoutTime(name);
    }

    throw UnknownGate(name, line);
}

} // namespace

CircuitIR lower_qasm(const QasmAst &ast, const GateTimes &times,
                     const std::optional<std::string> &root) {
    bool has_measure = false;
    bool has_reset = false;
    std::map<std::string, LoweringContext::Indexed<GateDef>> defs;
    std::map<std::string, LoweringContext::Indexed<OpaqueDecl>> opaques;
    std::map<std::string, std::size_t> qregs;
    for (std::size_t index = 0; index < ast.statements.size(); ++index) {
        const Statement &stmt = ast.statements[index];
        if (const auto *def = std::get_if<GateDef>(&stmt)) {
            defs.emplace(def->name, LoweringContext::Indexed<GateDef>{def, index});
        } else if (const auto *opaque = std::get_if<OpaqueDecl>(&stmt)) {
            opaques.emplace(opaque->name,
                            LoweringContext::Indexed<OpaqueDecl>{opaque, index});
        } else if (const auto *qreg = std::get_if<QregDecl>(&stmt)) {
            qregs.emplace(qreg->name, qreg->size);
        } else if (std::holds_alternative<MeasureStmt>(stmt)) {
            has_measure = true;
        } else if (std::holds_alternative<ResetStmt>(stmt)) {
            has_reset = true;
        }
    }

    // Measurement and reset are native operations even without a configured
    // duration; they default to 0 so purely unitary timing models still work.
    GateTimes effective = times;
    if ((has_measure && !times.contains("measure")) ||
        (has_reset && !times.contains("reset"))) {
        std::map<std::string, double> table = times.entries();
        if (has_measure) {
            table.emplace("measure", 0.0);
        }
        if (has_reset) {
            table.emplace("reset", 0.0);
        }
        effective = GateTimes::validate(table);
    }
    LoweringContext ctx{effective, std::move(defs), std::move(opaques), std::move(qregs),
                        {}};

    std::size_t qubit_count = 0;
    for (const auto &[name, size] : ctx.qregs) {
        qubit_count += size;
    }

    if (root.has_value()) {
        const std::string &name = *root;
        auto def_it = ctx.defs.find(name);
        if (def_it != ctx.defs.end()) {
            if (effective.contains(name)) {
                return build_ir(NativeOp(name), effective, qubit_count);
            }
            GateAdapter adapter(def_it->second.node, def_it->second.index, &ctx);
            return build_ir(adapter, effective, qubit_count);
        }
        if (ctx.opaques.count(name) != 0) {
            if (effective.contains(name)) {
                return build_ir(NativeOp(name), effective, qubit_count);
            }
            throw NativeGateWithoutTime(name);
        }
        throw UnknownRootRoutine(name);
    }

    if (ctx.defs.count("main") != 0 || ctx.opaques.count("main") != 0) {
        throw DuplicateRoutine("main");
    }
    MainAdapter main(&ast, &ctx);
    return build_ir(main, effective, qubit_count);
}

} // namespace quantprof::qasm
