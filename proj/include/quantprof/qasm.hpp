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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quantprof/circuit_ir.hpp"
#include "quantprof/gate_times.hpp"

namespace quantprof::qasm {

/// 1-based source position of an AST node.
struct SourcePos {
    int line = 0;
    int column = 0;
};

/// Parameter expression: numeric literals, pi, formal parameter names,
/// the four arithmetic operators and unary minus.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Pi, Ident, Unary, Binary };
    Kind kind = Kind::Number;
    std::string text; // Number: source lexeme; Ident: name
    char op = 0;      // Binary: + - * /; Unary: -
    ExprPtr lhs;
    ExprPtr rhs;
};

/// Structural equality; pointer identity is irrelevant.
bool expr_equal(const ExprPtr &a, const ExprPtr &b);
bool expr_lists_equal(const std::vector<ExprPtr> &a, const std::vector<ExprPtr> &b);

/// One register-ish operand of a statement.
struct Operand {
    enum class Kind {
        Whole,   // a declared register, broadcast over all its qubits
        Indexed, // one qubit/bit of a declared register
        Formal   // a gate-body formal argument
    };
    Kind kind = Kind::Whole;
    std::string reg;
    std::size_t index = 0; // Indexed only

    bool operator==(const Operand &other) const {
        return kind == other.kind && reg == other.reg &&
               (kind != Kind::Indexed || index == other.index);
    }
};

struct GateCall {
    std::string name;
    std::vector<ExprPtr> params;
    std::vector<Operand> qubits;
    SourcePos pos;

    bool operator==(const GateCall &other) const {
        return name == other.name && qubits == other.qubits &&
               expr_lists_equal(params, other.params);
    }
};

struct BarrierStmt {
    std::vector<Operand> qubits;
    SourcePos pos;
    bool operator==(const BarrierStmt &other) const { return qubits == other.qubits; }
};

struct MeasureStmt {
    Operand qubit;
    Operand target;
    SourcePos pos;
    bool operator==(const MeasureStmt &other) const {
        return qubit == other.qubit && target == other.target;
    }
};

struct ResetStmt {
    Operand qubit;
    SourcePos pos;
    bool operator==(const ResetStmt &other) const { return qubit == other.qubit; }
};

/// Statements allowed inside a gate definition body.
using BodyStmt = std::variant<GateCall, BarrierStmt>;

struct GateDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> qargs;
    std::vector<BodyStmt> body;
    bool from_include = false; // injected by `include "qelib1.inc"`
    SourcePos pos;

    bool operator==(const GateDef &other) const {
        return name == other.name && params == other.params && qargs == other.qargs &&
               body == other.body && from_include == other.from_include;
    }
};

struct OpaqueDecl {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> qargs;
    bool from_include = false;
    SourcePos pos;

    bool operator==(const OpaqueDecl &other) const {
        return name == other.name && params == other.params && qargs == other.qargs &&
               from_include == other.from_include;
    }
};

struct QregDecl {
    std::string name;
    std::size_t size = 0;
    SourcePos pos;
    bool operator==(const QregDecl &other) const {
        return name == other.name && size == other.size;
    }
};

struct CregDecl {
    std::string name;
    std::size_t size = 0;
    SourcePos pos;
    bool operator==(const CregDecl &other) const {
        return name == other.name && size == other.size;
    }
};

struct IncludeDecl {
    std::string name;
    SourcePos pos;
    bool operator==(const IncludeDecl &other) const { return name == other.name; }
};

using Statement = std::variant<QregDecl, CregDecl, GateDef, OpaqueDecl, IncludeDecl,
                               GateCall, BarrierStmt, MeasureStmt, ResetStmt>;

/// Parsed program. Statement order mirrors the source; including
/// "qelib1.inc" injects the standard-library gate definitions (flagged
/// from_include) right after the IncludeDecl.
struct QasmAst {
    std::string version; // "2.0"
    std::vector<Statement> statements;

    bool operator==(const QasmAst &other) const {
        return version == other.version && statements == other.statements;
    }
};

/// Parses the OpenQASM 2.0 subset. Register references are resolved and
/// range-checked here; gate existence and arity are checked at lowering.
/// Throws SyntaxError, MissingVersionHeader or UnknownInclude.
QasmAst parse_qasm(std::string_view source);

/// Prints the AST back to canonical source. Injected library definitions
/// are folded back into their include line, so parse(unparse(ast)) == ast.
std::string unparse(const QasmAst &ast);

/// Lowers the program to a circuit IR rooted at a synthetic "main" routine
/// holding the top-level calls in order (or at `root` when given). A gate
/// definition becomes a composite routine unless its name has a configured
/// duration; barriers are dropped; measure and reset become native
/// operations priced at their configured duration or 0.
///
/// Throws UnknownGate, ArityMismatch, NativeGateWithoutTime, EmptyComposite,
/// DuplicateRoutine or UnknownRootRoutine.
CircuitIR lower_qasm(const QasmAst &ast, const GateTimes &times,
                     const std::optional<std::string> &root = std::nullopt);

/// The embedded "qelib1.inc" source text.
std::string_view qelib1_source();

} // namespace quantprof::qasm
