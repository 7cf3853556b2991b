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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "quantprof/errors.hpp"
#include "quantprof/qasm.hpp"

using quantprof::MissingVersionHeader;
using quantprof::SyntaxError;
using quantprof::UnknownInclude;
using namespace quantprof::qasm;

namespace {

std::string read_data(const std::string &name) {
    std::ifstream in(std::string(QUANTPROF_TEST_DATA_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open test fixture " << name);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int syntax_error_line(const std::string &source) {
    try {
        parse_qasm(source);
    } catch (const SyntaxError &err) {
        return err.line;
    }
    FAIL("expected a SyntaxError");
    return -1;
}

} // namespace

TEST_CASE("a Toffoli program parses into the expected statement sequence") {
    QasmAst ast = parse_qasm(read_data("toffoli.qasm"));
    CHECK(ast.version == "2.0");

    // include + 23 injected library gates + qreg + one call
    CHECK(ast.statements.size() == 26);
    CHECK(std::holds_alternative<IncludeDecl>(ast.statements[0]));
    int injected = 0;
    for (const Statement &stmt : ast.statements) {
        if (const auto *def = std::get_if<GateDef>(&stmt)) {
            CHECK(def->from_include);
            ++injected;
        }
    }
    CHECK(injected == 23);

    const auto &call = std::get<GateCall>(ast.statements.back());
    CHECK(call.name == "ccx");
    CHECK(call.qubits == std::vector<Operand>{{Operand::Kind::Indexed, "q", 0},
                                              {Operand::Kind::Indexed, "q", 1},
                                              {Operand::Kind::Indexed, "q", 2}});
}

TEST_CASE("the injected library defines the documented Toffoli body") {
    QasmAst ast = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    const GateDef *ccx = nullptr;
    for (const Statement &stmt : ast.statements) {
        if (const auto *def = std::get_if<GateDef>(&stmt)) {
            if (def->name == "ccx") {
                ccx = def;
            }
        }
    }
    REQUIRE(ccx != nullptr);
    CHECK(ccx->qargs == std::vector<std::string>{"a", "b", "c"});
    CHECK(ccx->body.size() == 15);

    std::vector<std::string> called;
    for (const BodyStmt &stmt : ccx->body) {
        called.push_back(std::get<GateCall>(stmt).name);
    }
    CHECK(called == std::vector<std::string>{"h", "cx", "tdg", "cx", "t", "cx", "tdg",
                                             "cx", "t", "t", "h", "cx", "t", "tdg",
                                             "cx"});
}

TEST_CASE("the version header is mandatory and checked") {
    CHECK_THROWS_AS(parse_qasm(""), MissingVersionHeader);
    CHECK_THROWS_AS(parse_qasm("qreg q[1];"), MissingVersionHeader);
    CHECK_THROWS_AS(parse_qasm("// only a comment\n"), MissingVersionHeader);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 3.0;\n"), SyntaxError);
    CHECK_NOTHROW(parse_qasm("// leading comment\nOPENQASM 2.0;\n"));
}

TEST_CASE("only the standard library can be included") {
    try {
        parse_qasm("OPENQASM 2.0;\ninclude \"mylib.inc\";\n");
        FAIL("expected UnknownInclude");
    } catch (const UnknownInclude &err) {
        CHECK(err.name == "mylib.inc");
    }
}

TEST_CASE("if statements are rejected with a dedicated message") {
    try {
        parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nif (c == 1) U(0,0,0) q[0];\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &err) {
        CHECK(err.line == 4);
        CHECK(std::string(err.what()).find("if statements are not supported") !=
              std::string::npos);
    }
}

TEST_CASE("register references are resolved and range-checked at parse time") {
    CHECK(syntax_error_line("OPENQASM 2.0;\nU(0,0,0) q[0];\n") == 2); // undeclared
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[2];\nU(0,0,0) q[2];\n") == 3);
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[2];\nqreg q[3];\n") == 3);
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[0];\n") == 2);
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nU(0,0,0) c[0];\n") ==
          4); // classical register used as quantum
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[1];\nmeasure q[0] -> q[0];\n") == 3);
}

TEST_CASE("broadcast operands must have matching register sizes") {
    const char *bad = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"
                      "qreg a[2];\nqreg b[3];\ncx a,b;\n";
    CHECK(syntax_error_line(bad) == 5);

    const char *good = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"
                       "qreg a[2];\nqreg b[2];\ncx a,b;\ncx a[0],b;\n";
    CHECK_NOTHROW(parse_qasm(good));

    const char *mismatch = "OPENQASM 2.0;\nqreg q[2];\ncreg c[3];\nmeasure q -> c;\n";
    CHECK(syntax_error_line(mismatch) == 4);
}

TEST_CASE("gate definitions validate their formal arguments") {
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate g a,a { }\n") == 2);
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate g a { h b; }\n") == 2);
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate g(t) a { u1(t2) a; }\n") == 2);
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate g a { measure a; }\n") == 2);
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate gate a { }\n") == 2); // reserved word
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate G a { }\n") == 2);    // uppercase
    CHECK(syntax_error_line("OPENQASM 2.0;\ngate g a { }\ngate g a { }\n") == 3);
    CHECK(syntax_error_line("OPENQASM 2.0;\nqreg q[1];\nrx(theta) q[0];\n") == 3);
}

TEST_CASE("lexical errors carry positions") {
    try {
        parse_qasm("OPENQASM 2.0;\nqreg q[1];\nU(0,0,0) q[0]\nU(0,0,0) q[0];\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &err) {
        CHECK(err.line == 4); // the missing semicolon is noticed at the next token
    }
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\n$\n"), SyntaxError);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\ninclude \"unterminated\n"), SyntaxError);
}

TEST_CASE("parsing is stable across unparse and reparse") {
    const char *sources[] = {"toffoli.qasm", "grover.qasm", "bell.qasm"};
    for (const char *name : sources) {
        QasmAst once = parse_qasm(read_data(name));
        QasmAst twice = parse_qasm(unparse(once));
        CHECK(once == twice);
        CHECK(unparse(once) == unparse(twice));
    }
}

TEST_CASE("unparse keeps parameter expressions and operand forms intact") {
    const char *source = "OPENQASM 2.0;\n"
                         "include \"qelib1.inc\";\n"
                         "qreg q[4];\n"
                         "creg c[4];\n"
                         "opaque noisy(level) a,b;\n"
                         "gate wiggle(alpha,beta) x,y {\n"
                         "  rx((alpha+beta)*0.5) x;\n"
                         "  u3(-pi/2,beta,alpha/4) y;\n"
                         "  barrier x,y;\n"
                         "  cx x,y;\n"
                         "}\n"
                         "wiggle(pi/8,0.25e1) q[0],q[1];\n"
                         "barrier q;\n"
                         "reset q[2];\n"
                         "measure q -> c;\n"
                         "measure q[3] -> c[3];\n";
    QasmAst once = parse_qasm(source);
    QasmAst twice = parse_qasm(unparse(once));
    CHECK(once == twice);

    // The wiggle definition survives with its expressions structurally equal.
    const GateDef *wiggle = nullptr;
    for (const Statement &stmt : twice.statements) {
        if (const auto *def = std::get_if<GateDef>(&stmt)) {
            if (def->name == "wiggle") {
                wiggle = def;
            }
        }
    }
    REQUIRE(wiggle != nullptr);
    CHECK(wiggle->params == std::vector<std::string>{"alpha", "beta"});
    REQUIRE(wiggle->body.size() == 4);
    const auto &rx_call = std::get<GateCall>(wiggle->body[0]);
    REQUIRE(rx_call.params.size() == 1);
    CHECK(rx_call.params[0]->kind == Expr::Kind::Binary);
    CHECK(rx_call.params[0]->op == '*');
}

TEST_CASE("numeric literals keep their spelling through unparse") {
    QasmAst ast = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nU(0.50,2e3,-pi/4) q[0];\n");
    std::string text = unparse(ast);
    CHECK(text.find("0.50") != std::string::npos);
    CHECK(text.find("2e3") != std::string::npos);
    CHECK(parse_qasm(text) == ast);
}
