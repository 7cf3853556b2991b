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

#include <map>
#include <set>

#include "qasm_lexer.hpp"
#include "quantprof/errors.hpp"
#include "quantprof/qasm.hpp"

namespace quantprof::qasm {

namespace {

const std::set<std::string> kReserved = {"OPENQASM", "include", "qreg",  "creg",
                                         "gate",     "opaque",  "barrier", "measure",
                                         "reset",    "if",      "pi",      "U",
                                         "CX"};

/// Declarations shared between the main program and injected includes.
struct SymbolTables {
    std::map<std::string, std::size_t> qregs;
    std::map<std::string, std::size_t> cregs;
    std::set<std::string> gates; // gate definitions and opaque declarations
};

class Parser {
  public:
    Parser(std::string_view source, SymbolTables &tables, bool include_mode)
        : tokens_(tokenize(source)), tables_(tables), include_mode_(include_mode) {}

    void parse_into(QasmAst &ast) {
        if (!include_mode_) {
            parse_version(ast);
        }
        while (!at(TokKind::End)) {
            parse_statement(ast);
        }
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    SymbolTables &tables_;
    bool include_mode_;

    // --- token helpers ---

    const Token &peek() const { return tokens_[pos_]; }
    const Token &next() { return tokens_[pos_++]; }
    bool at(TokKind kind) const { return peek().kind == kind; }
    bool at_punct(const char *text) const {
        return peek().kind == TokKind::Punct && peek().text == text;
    }
    bool at_ident(const char *text) const {
        return peek().kind == TokKind::Ident && peek().text == text;
    }

    [[noreturn]] void fail(const Token &tok, const std::string &message) const {
        throw SyntaxError(tok.line, tok.column, message);
    }

    const Token &expect_punct(const char *text) {
        if (!at_punct(text)) {
            fail(peek(), std::string("expected '") + text + "'");
        }
        return next();
    }

    const Token &expect_ident() {
        if (!at(TokKind::Ident)) {
            fail(peek(), "expected an identifier");
        }
        return next();
    }

    /// An identifier usable as a user-defined name: lowercase start, not
    /// a reserved word.
    std::string expect_name(const char *what) {
        const Token &tok = peek();
        if (tok.kind != TokKind::Ident) {
            fail(tok, std::string("expected a ") + what + " name");
        }
        if (kReserved.count(tok.text) != 0) {
            fail(tok, "\"" + tok.text + "\" is a reserved word");
        }
        if (tok.text[0] < 'a' || tok.text[0] > 'z') {
            fail(tok, std::string(what) + " name \"" + tok.text +
                          "\" must start with a lowercase letter");
        }
        return next().text;
    }

    unsigned long long parse_integer(const Token &tok, const char *what) {
        try {
            return std::stoull(tok.text);
        } catch (const std::out_of_range &) {
            fail(tok, std::string(what) + " " + tok.text + " is too large");
        }
    }

    std::size_t expect_size() {
        const Token &tok = peek();
        if (tok.kind != TokKind::Integer) {
            fail(tok, "expected a register size");
        }
        unsigned long long value = parse_integer(tok, "register size");
        if (value == 0) {
            fail(tok, "register size must be positive");
        }
        next();
        return static_cast<std::size_t>(value);
    }

    static SourcePos position(const Token &tok) { return SourcePos{tok.line, tok.column}; }

    // --- program structure ---

    void parse_version(QasmAst &ast) {
        if (!at_ident("OPENQASM")) {
            throw MissingVersionHeader();
        }
        next();
        const Token &version = peek();
        if (version.kind != TokKind::Real && version.kind != TokKind::Integer) {
            fail(version, "expected a version number after OPENQASM");
        }
        if (version.text != "2.0") {
            fail(version, "only OPENQASM version 2.0 is supported, got " + version.text);
        }
        ast.version = next().text;
        expect_punct(";");
    }

    void parse_statement(QasmAst &ast) {
        const Token &tok = peek();
        if (tok.kind != TokKind::Ident) {
            fail(tok, "expected a statement");
        }
        if (tok.text == "include") {
            parse_include(ast);
        } else if (tok.text == "qreg") {
            parse_register(ast, /*quantum=*/true);
        } else if (tok.text == "creg") {
            parse_register(ast, /*quantum=*/false);
        } else if (tok.text == "gate") {
            parse_gate_def(ast);
        } else if (tok.text == "opaque") {
            parse_opaque(ast);
        } else if (tok.text == "barrier") {
            parse_barrier(ast);
        } else if (tok.text == "measure") {
            parse_measure(ast);
        } else if (tok.text == "reset") {
            parse_reset(ast);
        } else if (tok.text == "if") {
            fail(tok, "if statements are not supported");
        } else if (tok.text == "OPENQASM") {
            fail(tok, "unexpected OPENQASM header");
        } else {
            parse_top_level_call(ast);
        }
    }

    void parse_include(QasmAst &ast) {
        const Token &kw = next();
        if (!at(TokKind::String)) {
            fail(peek(), "expected a file name string after include");
        }
        std::string name = next().text;
        expect_punct(";");
        if (name != "qelib1.inc") {
            throw UnknownInclude(name);
        }
        ast.statements.push_back(IncludeDecl{name, position(kw)});
        Parser library(qelib1_source(), tables_, /*include_mode=*/true);
        library.parse_into(ast);
    }

    void parse_register(QasmAst &ast, bool quantum) {
        const Token &kw = next();
        std::string name = expect_name("register");
        if (tables_.qregs.count(name) != 0 || tables_.cregs.count(name) != 0) {
            fail(kw, "register \"" + name + "\" is already declared");
        }
        expect_punct("[");
        std::size_t size = expect_size();
        expect_punct("]");
        expect_punct(";");
        if (quantum) {
            tables_.qregs[name] = size;
            ast.statements.push_back(QregDecl{name, size, position(kw)});
        } else {
            tables_.cregs[name] = size;
            ast.statements.push_back(CregDecl{name, size, position(kw)});
        }
    }

    std::vector<std::string> parse_formal_list(const char *what) {
        std::vector<std::string> names;
        std::set<std::string> seen;
        while (true) {
            const Token &tok = peek();
            std::string name = expect_name(what);
            if (!seen.insert(name).second) {
                fail(tok, std::string("duplicate ") + what + " name \"" + name + "\"");
            }
            names.push_back(std::move(name));
            if (!at_punct(",")) {
                break;
            }
            next();
        }
        return names;
    }

    void parse_gate_signature(std::vector<std::string> &params,
                              std::vector<std::string> &qargs) {
        if (at_punct("(")) {
            next();
            if (!at_punct(")")) {
                params = parse_formal_list("parameter");
            }
            expect_punct(")");
        }
        qargs = parse_formal_list("qubit argument");
    }

    void parse_gate_def(QasmAst &ast) {
        const Token &kw = next();
        GateDef def;
        def.pos = position(kw);
        def.from_include = include_mode_;
        def.name = expect_name("gate");
        if (!tables_.gates.insert(def.name).second) {
            fail(kw, "gate \"" + def.name + "\" is already defined");
        }
        parse_gate_signature(def.params, def.qargs);
        std::set<std::string> params(def.params.begin(), def.params.end());
        std::set<std::string> qargs(def.qargs.begin(), def.qargs.end());

        expect_punct("{");
        while (!at_punct("}")) {
            const Token &tok = peek();
            if (tok.kind != TokKind::Ident) {
                fail(tok, "expected a gate call or barrier");
            }
            if (tok.text == "barrier") {
                next();
                BarrierStmt barrier;
                barrier.pos = position(tok);
                barrier.qubits = parse_body_operands(qargs);
                expect_punct(";");
                def.body.push_back(std::move(barrier));
                continue;
            }
            if (tok.text == "measure" || tok.text == "reset" || tok.text == "if") {
                fail(tok, tok.text + " is not allowed inside a gate definition");
            }
            GateCall call;
            call.pos = position(tok);
            call.name = next().text;
            if (kReserved.count(call.name) != 0 && call.name != "U" && call.name != "CX") {
                fail(tok, "\"" + call.name + "\" is a reserved word");
            }
            if (at_punct("(")) {
                next();
                if (!at_punct(")")) {
                    call.params = parse_expr_list(&params);
                }
                expect_punct(")");
            }
            call.qubits = parse_body_operands(qargs);
            expect_punct(";");
            def.body.push_back(std::move(call));
        }
        next(); // }
        ast.statements.push_back(std::move(def));
    }

    std::vector<Operand> parse_body_operands(const std::set<std::string> &qargs) {
        std::vector<Operand> out;
        while (true) {
            const Token &tok = expect_ident();
            if (qargs.count(tok.text) == 0) {
                fail(tok, "unknown qubit argument \"" + tok.text + "\"");
            }
            out.push_back(Operand{Operand::Kind::Formal, tok.text, 0});
            if (!at_punct(",")) {
                break;
            }
            next();
        }
        return out;
    }

    void parse_opaque(QasmAst &ast) {
        const Token &kw = next();
        OpaqueDecl decl;
        decl.pos = position(kw);
        decl.from_include = include_mode_;
        decl.name = expect_name("gate");
        if (!tables_.gates.insert(decl.name).second) {
            fail(kw, "gate \"" + decl.name + "\" is already defined");
        }
        parse_gate_signature(decl.params, decl.qargs);
        expect_punct(";");
        ast.statements.push_back(std::move(decl));
    }

    // --- top-level operations ---

    Operand parse_operand(bool quantum) {
        const Token &tok = expect_ident();
        Operand op;
        op.reg = tok.text;
        const auto &table = quantum ? tables_.qregs : tables_.cregs;
        auto it = table.find(op.reg);
        if (it == table.end()) {
            const auto &other = quantum ? tables_.cregs : tables_.qregs;
            if (other.count(op.reg) != 0) {
                fail(tok, "register \"" + op.reg + "\" is not a " +
                              (quantum ? "quantum" : "classical") + " register");
            }
            fail(tok, "undeclared register \"" + op.reg + "\"");
        }
        if (at_punct("[")) {
            next();
            const Token &idx = peek();
            if (idx.kind != TokKind::Integer) {
                fail(idx, "expected a register index");
            }
            unsigned long long value = parse_integer(idx, "register index");
            if (value >= it->second) {
                fail(idx, "index " + idx.text + " is out of range for register \"" +
                              op.reg + "\" of size " + std::to_string(it->second));
            }
            next();
            expect_punct("]");
            op.kind = Operand::Kind::Indexed;
            op.index = static_cast<std::size_t>(value);
        } else {
            op.kind = Operand::Kind::Whole;
        }
        return op;
    }

    std::vector<Operand> parse_operand_list(bool quantum) {
        std::vector<Operand> out;
        out.push_back(parse_operand(quantum));
        while (at_punct(",")) {
            next();
            out.push_back(parse_operand(quantum));
        }
        return out;
    }

    /// Whole-register operands broadcast a call; all of them must have the
    /// same length for the expansion to be well defined.
    void check_broadcast(const std::vector<Operand> &operands, const Token &site) {
        std::size_t size = 0;
        const std::string *first = nullptr;
        for (const Operand &op : operands) {
            if (op.kind != Operand::Kind::Whole) {
                continue;
            }
            std::size_t this_size = tables_.qregs.at(op.reg);
            if (first == nullptr) {
                first = &op.reg;
                size = this_size;
            } else if (this_size != size) {
                fail(site, "broadcast registers \"" + *first + "\" and \"" + op.reg +
                               "\" have different sizes (" + std::to_string(size) +
                               " versus " + std::to_string(this_size) + ")");
            }
        }
    }

    void parse_top_level_call(QasmAst &ast) {
        const Token &tok = next();
        GateCall call;
        call.pos = position(tok);
        call.name = tok.text;
        if (at_punct("(")) {
            next();
            if (!at_punct(")")) {
                call.params = parse_expr_list(nullptr);
            }
            expect_punct(")");
        }
        call.qubits = parse_operand_list(/*quantum=*/true);
        expect_punct(";");
        check_broadcast(call.qubits, tok);
        ast.statements.push_back(std::move(call));
    }

    void parse_barrier(QasmAst &ast) {
        const Token &kw = next();
        BarrierStmt barrier;
        barrier.pos = position(kw);
        barrier.qubits = parse_operand_list(/*quantum=*/true);
        expect_punct(";");
        ast.statements.push_back(std::move(barrier));
    }

    void parse_measure(QasmAst &ast) {
        const Token &kw = next();
        MeasureStmt stmt;
        stmt.pos = position(kw);
        stmt.qubit = parse_operand(/*quantum=*/true);
        expect_punct("->");
        stmt.target = parse_operand(/*quantum=*/false);
        expect_punct(";");
        if (stmt.qubit.kind != stmt.target.kind) {
            fail(kw, "measure operands must both be whole registers or both be indexed");
        }
        if (stmt.qubit.kind == Operand::Kind::Whole &&
            tables_.qregs.at(stmt.qubit.reg) != tables_.cregs.at(stmt.target.reg)) {
            fail(kw, "measure registers \"" + stmt.qubit.reg + "\" and \"" +
                         stmt.target.reg + "\" have different sizes");
        }
        ast.statements.push_back(std::move(stmt));
    }

    void parse_reset(QasmAst &ast) {
        const Token &kw = next();
        ResetStmt stmt;
        stmt.pos = position(kw);
        stmt.qubit = parse_operand(/*quantum=*/true);
        expect_punct(";");
        ast.statements.push_back(std::move(stmt));
    }

    // --- parameter expressions ---

    std::vector<ExprPtr> parse_expr_list(const std::set<std::string> *formals) {
        std::vector<ExprPtr> out;
        out.push_back(parse_expr(formals));
        while (at_punct(",")) {
            next();
            out.push_back(parse_expr(formals));
        }
        return out;
    }

    ExprPtr parse_expr(const std::set<std::string> *formals) {
        ExprPtr lhs = parse_term(formals);
        while (at_punct("+") || at_punct("-")) {
            char op = next().text[0];
            ExprPtr rhs = parse_term(formals);
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Binary;
            node->op = op;
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr parse_term(const std::set<std::string> *formals) {
        ExprPtr lhs = parse_factor(formals);
        while (at_punct("*") || at_punct("/")) {
            char op = next().text[0];
            ExprPtr rhs = parse_factor(formals);
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Binary;
            node->op = op;
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr parse_factor(const std::set<std::string> *formals) {
        const Token &tok = peek();
        if (at_punct("-")) {
            next();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Unary;
            node->op = '-';
            node->lhs = parse_factor(formals);
            return node;
        }
        if (at_punct("(")) {
            next();
            ExprPtr inner = parse_expr(formals);
            expect_punct(")");
            return inner;
        }
        if (tok.kind == TokKind::Integer || tok.kind == TokKind::Real) {
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Number;
            node->text = next().text;
            return node;
        }
        if (tok.kind == TokKind::Ident) {
            if (tok.text == "pi") {
                next();
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Pi;
                return node;
            }
            if (formals == nullptr) {
                fail(tok, "free parameter \"" + tok.text +
                              "\" is not allowed outside a gate definition");
            }
            if (formals->count(tok.text) == 0) {
                fail(tok, "unknown parameter \"" + tok.text + "\"");
            }
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Ident;
            node->text = next().text;
            return node;
        }
        fail(tok, "expected a parameter expression");
    }
};

} // namespace

bool expr_equal(const ExprPtr &a, const ExprPtr &b) {
    if (a == b) {
        return true;
    }
    if (a == nullptr || b == nullptr) {
        return false;
    }
    if (a->kind != b->kind || a->op != b->op || a->text != b->text) {
        return false;
    }
    return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

bool expr_lists_equal(const std::vector<ExprPtr> &a, const std::vector<ExprPtr> &b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!expr_equal(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

QasmAst parse_qasm(std::string_view source) {
    QasmAst ast;
    SymbolTables tables;
    Parser parser(source, tables, /*include_mode=*/false);
    parser.parse_into(ast);
    return ast;
}

} // namespace quantprof::qasm
