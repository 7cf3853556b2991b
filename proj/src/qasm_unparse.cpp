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

#include <sstream>

#include "quantprof/qasm.hpp"

namespace quantprof::qasm {

namespace {

void print_expr(std::ostream &out, const ExprPtr &expr) {
    switch (expr->kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Ident:
        out << expr->text;
        break;
    case Expr::Kind::Pi:
        out << "pi";
        break;
    case Expr::Kind::Unary:
        out << '-';
        print_expr(out, expr->lhs);
        break;
    case Expr::Kind::Binary:
        out << '(';
        print_expr(out, expr->lhs);
        out << expr->op;
        print_expr(out, expr->rhs);
        out << ')';
        break;
    }
}

void print_operand(std::ostream &out, const Operand &op) {
    out << op.reg;
    if (op.kind == Operand::Kind::Indexed) {
        out << '[' << op.index << ']';
    }
}

void print_operands(std::ostream &out, const std::vector<Operand> &ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        print_operand(out, ops[i]);
    }
}

void print_call(std::ostream &out, const GateCall &call) {
    out << call.name;
    if (!call.params.empty()) {
        out << '(';
        for (std::size_t i = 0; i < call.params.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            print_expr(out, call.params[i]);
        }
        out << ')';
    }
    out << ' ';
    print_operands(out, call.qubits);
    out << ';';
}

void print_formals(std::ostream &out, const std::vector<std::string> &names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << names[i];
    }
}

void print_signature(std::ostream &out, const std::string &name,
                     const std::vector<std::string> &params,
                     const std::vector<std::string> &qargs) {
    out << name;
    if (!params.empty()) {
        out << '(';
        print_formals(out, params);
        out << ')';
    }
    out << ' ';
    print_formals(out, qargs);
}

struct StatementPrinter {
    std::ostream &out;

    void operator()(const QregDecl &decl) const {
        out << "qreg " << decl.name << '[' << decl.size << "];\n";
    }
    void operator()(const CregDecl &decl) const {
        out << "creg " << decl.name << '[' << decl.size << "];\n";
    }
    void operator()(const IncludeDecl &decl) const {
        out << "include \"" << decl.name << "\";\n";
    }
    void operator()(const GateDef &def) const {
        if (def.from_include) {
            return;
        }
        out << "gate ";
        print_signature(out, def.name, def.params, def.qargs);
        out << " {\n";
        for (const BodyStmt &stmt : def.body) {
            out << "  ";
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                print_call(out, *call);
            } else {
                const auto &barrier = std::get<BarrierStmt>(stmt);
                out << "barrier ";
                print_operands(out, barrier.qubits);
                out << ';';
            }
            out << '\n';
        }
        out << "}\n";
    }
    void operator()(const OpaqueDecl &decl) const {
        if (decl.from_include) {
            return;
        }
        out << "opaque ";
        print_signature(out, decl.name, decl.params, decl.qargs);
        out << ";\n";
    }
    void operator()(const GateCall &call) const {
        print_call(out, call);
        out << '\n';
    }
    void operator()(const BarrierStmt &barrier) const {
        out << "barrier ";
        print_operands(out, barrier.qubits);
        out << ";\n";
    }
    void operator()(const MeasureStmt &stmt) const {
        out << "measure ";
        print_operand(out, stmt.qubit);
        out << " -> ";
        print_operand(out, stmt.target);
        out << ";\n";
    }
    void operator()(const ResetStmt &stmt) const {
        out << "reset ";
        print_operand(out, stmt.qubit);
        out << ";\n";
    }
};

} // namespace

std::string unparse(const QasmAst &ast) {
    std::ostringstream out;
    out << "OPENQASM " << (ast.version.empty() ? "2.0" : ast.version) << ";\n";
    StatementPrinter printer{out};
    for (const Statement &stmt : ast.statements) {
        std::visit(printer, stmt);
    }
    return out.str();
}

} // namespace quantprof::qasm
