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

#include <string>

#include "quantprof/call_graph.hpp"
#include "quantprof/errors.hpp"
#include "quantprof/interchange.hpp"
#include "table_adapter.hpp"

using quantprof::CircuitIR;
using quantprof::DuplicateRoutine;
using quantprof::EmptyComposite;
using quantprof::GateTimes;
using quantprof::SchemaError;
using quantprof::UnknownGate;
using quantprof::UnknownRootRoutine;
using quantprof::parse_interchange;
using quantprof::testing::ibmq_times;

namespace {

std::vector<std::string> body_names(const CircuitIR &ir, const std::string &name) {
    std::vector<std::string> out;
    for (quantprof::RoutineId child : ir.routine(*ir.find(name)).body) {
        out.push_back(ir.name_of(child));
    }
    return out;
}

} // namespace

TEST_CASE("a nested interchange document lowers to the expected circuit") {
    const char *doc = R"({
        "root": "main",
        "routines": [
            {"name": "main", "body": ["bell", "bell"]},
            {"name": "bell", "body": ["h", "cx"]},
            {"name": "h", "body": ["u2"]}
        ]
    })";
    CircuitIR ir = parse_interchange(doc, ibmq_times());
    CHECK(ir.routine_count() == 5);
    CHECK(ir.name_of(ir.root()) == "main");
    CHECK(body_names(ir, "main") == std::vector<std::string>{"bell", "bell"});
    CHECK(body_names(ir, "bell") == std::vector<std::string>{"h", "cx"});
    CHECK(ir.routine(*ir.find("cx")).is_native());
    CHECK(ir.routine(*ir.find("u2")).is_native());
    CHECK(ir.qubit_count() == 0);
}

TEST_CASE("the root may be a native gate with no routine entries") {
    CircuitIR ir = parse_interchange(R"({"root": "cx", "routines": []})", ibmq_times());
    CHECK(ir.routine_count() == 1);
    CHECK(ir.routine(ir.root()).is_native());
    CHECK(ir.routine(ir.root()).duration == 300.0);
}

TEST_CASE("a routine whose name has a configured duration is truncated") {
    const char *doc = R"({
        "root": "cx",
        "routines": [{"name": "cx", "body": ["u2", "u2", "u3"]}]
    })";
    CircuitIR ir = parse_interchange(doc, ibmq_times());
    CHECK(ir.routine_count() == 1);
    CHECK(ir.routine(ir.root()).is_native());
    CHECK(ir.routine(ir.root()).duration == 300.0);
}

TEST_CASE("duplicate routine names are rejected") {
    const char *doc = R"({
        "root": "a",
        "routines": [
            {"name": "a", "body": ["u2"]},
            {"name": "a", "body": ["u3"]}
        ]
    })";
    CHECK_THROWS_AS(parse_interchange(doc, ibmq_times()), DuplicateRoutine);
}

TEST_CASE("dangling references are rejected even in unreachable routines") {
    const char *reachable = R"({
        "root": "a",
        "routines": [{"name": "a", "body": ["ghost"]}]
    })";
    try {
        parse_interchange(reachable, ibmq_times());
        FAIL("expected UnknownGate");
    } catch (const UnknownGate &err) {
        CHECK(err.name == "ghost");
    }

    const char *unreachable = R"({
        "root": "a",
        "routines": [
            {"name": "a", "body": ["u2"]},
            {"name": "orphan", "body": ["ghost"]}
        ]
    })";
    CHECK_THROWS_AS(parse_interchange(unreachable, ibmq_times()), UnknownGate);
}

TEST_CASE("schema violations carry a JSON path") {
    auto schema_path = [](const char *doc) -> std::string {
        try {
            parse_interchange(doc, ibmq_times());
            return "<no error>";
        } catch (const SchemaError &err) {
            return err.path;
        }
    };

    CHECK(schema_path("{") == "$");
    CHECK(schema_path("[1, 2]") == "$");
    CHECK(schema_path(R"({"routines": []})") == "$");
    CHECK(schema_path(R"({"root": "a", "routines": [], "extra": 1})") == "$.extra");
    CHECK(schema_path(R"({"root": 5, "routines": []})") == "$.root");
    CHECK(schema_path(R"({"root": "", "routines": []})") == "$.root");
    CHECK(schema_path(R"({"root": "a", "routines": {}})") == "$.routines");
    CHECK(schema_path(R"({"root": "a", "routines": ["a"]})") == "$.routines[0]");
    CHECK(schema_path(R"({"root": "a", "routines": [{"name": "a"}]})") ==
          "$.routines[0]");
    CHECK(schema_path(
              R"({"root": "a", "routines": [{"name": "a", "body": [], "bogus": 1}]})") ==
          "$.routines[0].bogus");
    CHECK(schema_path(R"({"root": "a", "routines": [{"name": 1, "body": []}]})") ==
          "$.routines[0].name");
    CHECK(schema_path(R"({"root": "a", "routines": [{"name": "a", "body": "x"}]})") ==
          "$.routines[0].body");
    CHECK(schema_path(
              R"({"root": "a", "routines": [{"name": "a", "body": ["u2", 7]}]})") ==
          "$.routines[0].body[1]");
    CHECK(schema_path(
              R"({"root": "a", "routines": [{"name": "a", "body": [""]}]})") ==
          "$.routines[0].body[0]");
    CHECK(schema_path(
              R"({"root": "a", "routines": [{"name": "", "body": ["u2"]}]})") ==
          "$.routines[0].name");
}

TEST_CASE("invalid JSON is reported as a schema error at the document root") {
    try {
        parse_interchange("not json at all", ibmq_times());
        FAIL("expected SchemaError");
    } catch (const SchemaError &err) {
        CHECK(err.path == "$");
        CHECK(std::string(err.what()).find("invalid JSON") != std::string::npos);
    }
}

TEST_CASE("empty routine bodies cannot be profiled") {
    const char *doc = R"({
        "root": "a",
        "routines": [{"name": "a", "body": []}]
    })";
    CHECK_THROWS_AS(parse_interchange(doc, ibmq_times()), EmptyComposite);
}

TEST_CASE("recursive documents parse into a cyclic circuit") {
    const char *doc = R"({
        "root": "a",
        "routines": [
            {"name": "a", "body": ["b"]},
            {"name": "b", "body": ["a", "u2"]}
        ]
    })";
    CircuitIR ir = parse_interchange(doc, ibmq_times());
    CHECK(ir.routine_count() == 3);
    CHECK(body_names(ir, "b") == std::vector<std::string>{"a", "u2"});

    // The cycle is diagnosed by graph analysis, not by the parser.
    auto graph = quantprof::build_call_graph(ir);
    auto cycles = quantprof::detect_cycles(ir, graph);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<std::string>{"a", "b"});
}

TEST_CASE("root overrides are resolved against routines and gate times") {
    const char *doc = R"({
        "root": "main",
        "routines": [
            {"name": "main", "body": ["sub"]},
            {"name": "sub", "body": ["u2", "cx"]}
        ]
    })";
    CircuitIR sub = parse_interchange(doc, ibmq_times(), "sub");
    CHECK(sub.name_of(sub.root()) == "sub");
    CHECK(sub.find("main") == std::nullopt);

    CircuitIR native = parse_interchange(doc, ibmq_times(), "u3");
    CHECK(native.routine_count() == 1);
    CHECK(native.routine(native.root()).duration == 70.0);

    // An override that matches nothing is a configuration problem; a file
    // root that matches nothing is the document's own inconsistency.
    CHECK_THROWS_AS(parse_interchange(doc, ibmq_times(), "nope"), UnknownRootRoutine);
    CHECK_THROWS_AS(
        parse_interchange(R"({"root": "nope", "routines": []})", ibmq_times()),
        UnknownGate);
}
