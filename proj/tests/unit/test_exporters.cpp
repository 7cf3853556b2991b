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
#include <limits>
#include <random>
#include <sstream>

#include "quantprof/errors.hpp"
#include "quantprof/exporters.hpp"
#include "quantprof/profile.hpp"
#include "table_adapter.hpp"

using quantprof::DotThresholds;
using quantprof::export_dot;
using quantprof::export_gprof;
using quantprof::export_json;
using quantprof::flat_tree_from_json;
using quantprof::FlatCallTree;
using quantprof::FlatEntry;
using quantprof::GateTimes;
using quantprof::InputFormat;
using quantprof::profile_source;
using quantprof::ProfileOptions;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string data_path(const std::string &name) {
    return std::string(QUANTPROF_TEST_DATA_DIR) + "/" + name;
}

FlatCallTree toffoli_tree() {
    GateTimes times = quantprof::testing::ibmq_times();
    return profile_source(read_file(data_path("toffoli.qasm")), times, {});
}

FlatCallTree random_tree(std::mt19937 &rng) {
    std::uniform_int_distribution<int> entry_count_dist(1, 10);
    std::uniform_int_distribution<int> record_count_dist(0, 4);
    std::uniform_int_distribution<std::uint64_t> count_dist(
        0, std::numeric_limits<std::uint64_t>::max());
    std::uniform_real_distribution<double> time_dist(0.0, 1e6);

    FlatCallTree tree;
    int entries = entry_count_dist(rng);
    for (int i = 0; i < entries; ++i) {
        FlatEntry entry;
        entry.index = static_cast<std::size_t>(i) + 1;
        entry.name = "routine" + std::to_string(i);
        entry.exec_count = count_dist(rng);
        entry.self_time = time_dist(rng);
        entry.children_time = time_dist(rng);
        for (int k = record_count_dist(rng); k > 0; --k) {
            entry.callers.push_back({"routine" + std::to_string(k), count_dist(rng),
                                     time_dist(rng), time_dist(rng)});
        }
        for (int k = record_count_dist(rng); k > 0; --k) {
            entry.callees.push_back({"routine" + std::to_string(k), count_dist(rng),
                                     time_dist(rng), time_dist(rng)});
        }
        tree.total_time += entry.self_time;
        tree.entries.push_back(std::move(entry));
    }
    tree.qubit_count = static_cast<std::size_t>(record_count_dist(rng));
    tree.gate_times = {{"cx", time_dist(rng)}, {"u2", time_dist(rng)}};
    return tree;
}

} // namespace

TEST_CASE("the Toffoli gprof report matches the golden file byte for byte") {
    std::string report = export_gprof(toffoli_tree());
    CHECK(report == read_file(data_path("golden/toffoli_gprof.txt")));
}

TEST_CASE("the single-gate gprof report matches the golden file byte for byte") {
    GateTimes times = GateTimes::validate({{"x", 1.0}});
    ProfileOptions options;
    options.format = InputFormat::Interchange;
    FlatCallTree tree =
        profile_source(read_file(data_path("single_gate.json")), times, options);
    CHECK(export_gprof(tree) == read_file(data_path("golden/single_gate_gprof.txt")));
}

TEST_CASE("the gprof report uses the canonical section headers") {
    std::string report = export_gprof(toffoli_tree());
    CHECK(report.rfind("Flat profile:\n", 0) == 0);
    CHECK(report.find("Each sample counts as 1 unit") != std::string::npos);
    CHECK(report.find("  %   cumulative   self              self     total           \n") !=
          std::string::npos);
    CHECK(report.find(" time   seconds   seconds    calls  ms/call  ms/call  name    \n") !=
          std::string::npos);
    CHECK(report.find("\t\t     Call graph\n") != std::string::npos);
    CHECK(report.find("granularity: each call counted once") != std::string::npos);
    CHECK(report.find("index % time    self  children    called     name\n") !=
          std::string::npos);
    CHECK(report.find("<spontaneous>") != std::string::npos);
    CHECK(report.find(std::string(47, '-') + "\n") != std::string::npos);
    CHECK(report.find("6/6") != std::string::npos);  // full edge ratio
    CHECK(report.find("4/7") != std::string::npos);  // partial edge ratio
}

TEST_CASE("gprof export is deterministic") {
    FlatCallTree tree = toffoli_tree();
    CHECK(export_gprof(tree) == export_gprof(tree));
}

TEST_CASE("gprof export refuses a zero-total-time profile") {
    GateTimes times = GateTimes::validate({{"x", 0.0}});
    FlatCallTree tree;
    {
        using quantprof::testing::build_table_ir;
        auto ir = build_table_ir("main", {{"main", {"x"}}}, times);
        auto graph = quantprof::build_call_graph(ir);
        tree = quantprof::build_flat_call_tree(ir, graph, quantprof::aggregate(ir, graph),
                                               quantprof::propagate_exec_counts(ir, graph),
                                               times);
    }
    CHECK_THROWS_AS(export_gprof(tree), quantprof::ZeroTotalTime);
    CHECK_THROWS_AS(export_dot(tree, {}), quantprof::ZeroTotalTime);
}

TEST_CASE("JSON reports parse back into an identical tree") {
    FlatCallTree tree = toffoli_tree();
    CHECK(flat_tree_from_json(export_json(tree)) == tree);
}

TEST_CASE("JSON round-trip preserves randomized trees exactly") {
    std::mt19937 rng(424243);
    for (int trial = 0; trial < 100; ++trial) {
        FlatCallTree tree = random_tree(rng);
        FlatCallTree back = flat_tree_from_json(export_json(tree));
        CHECK(back == tree);
    }
}

TEST_CASE("JSON export is deterministic with sorted keys") {
    FlatCallTree tree = toffoli_tree();
    std::string a = export_json(tree);
    std::string b = export_json(tree);
    CHECK(a == b);
    CHECK(a.find("\"gate_times\"") < a.find("\"qubit_count\""));
    CHECK(a.find("\"qubit_count\"") < a.find("\"routines\""));
    CHECK(a.back() == '\n');
}

TEST_CASE("JSON import rejects malformed documents") {
    CHECK_THROWS_AS(flat_tree_from_json("nonsense"), quantprof::SchemaError);
    CHECK_THROWS_AS(flat_tree_from_json("{}"), quantprof::SchemaError);
    CHECK_THROWS_AS(flat_tree_from_json(R"({"total_time": "x"})"),
                    quantprof::SchemaError);
    CHECK_THROWS_AS(
        flat_tree_from_json(
            R"({"total_time": 1, "qubit_count": 0, "gate_times": {}, "routines": 5})"),
        quantprof::SchemaError);
}

TEST_CASE("default dot thresholds hide zero-cost routines") {
    std::string dot = export_dot(toffoli_tree(), {});
    CHECK(dot.rfind("digraph callgraph {", 0) == 0);
    CHECK(dot.find("\"cx\"") != std::string::npos);
    CHECK(dot.find("\"ccx\"") != std::string::npos);
    CHECK(dot.find("\"u1\"") == std::string::npos);
    CHECK(dot.find("\"t\"") == std::string::npos);
    // No edge may reference a hidden node.
    CHECK(dot.find("-> \"u1\"") == std::string::npos);
}

TEST_CASE("zeroed dot thresholds keep every routine visible") {
    DotThresholds thresholds;
    thresholds.node_percent = 0.0;
    thresholds.edge_percent = 0.0;
    std::string dot = export_dot(toffoli_tree(), thresholds);
    for (const char *name : {"main", "ccx", "h", "t", "tdg", "cx", "u2", "u1"}) {
        CHECK(dot.find("\"" + std::string(name) + "\" [label=") != std::string::npos);
    }
}

TEST_CASE("an edge at the threshold is omitted, above it is kept") {
    GateTimes times = GateTimes::validate({{"a", 1.0}, {"b", 99.0}});
    FlatCallTree tree;
    {
        using quantprof::testing::build_table_ir;
        auto ir = build_table_ir("main", {{"main", {"a", "b"}}}, times);
        auto graph = quantprof::build_call_graph(ir);
        tree = quantprof::build_flat_call_tree(ir, graph, quantprof::aggregate(ir, graph),
                                               quantprof::propagate_exec_counts(ir, graph),
                                               times);
    }
    DotThresholds at_boundary;
    at_boundary.node_percent = 0.0;
    at_boundary.edge_percent = 1.0; // the main -> a edge carries exactly 1%
    std::string dot = export_dot(tree, at_boundary);
    CHECK(dot.find("\"main\" -> \"a\"") == std::string::npos);
    CHECK(dot.find("\"main\" -> \"b\"") != std::string::npos);

    DotThresholds below;
    below.node_percent = 0.0;
    below.edge_percent = 0.99;
    CHECK(export_dot(tree, below).find("\"main\" -> \"a\"") != std::string::npos);
}

TEST_CASE("dot output escapes quotes and backslashes in names") {
    FlatCallTree tree;
    FlatEntry entry;
    entry.index = 1;
    entry.name = "we\"ird\\gate";
    entry.exec_count = 1;
    entry.self_time = 10.0;
    tree.total_time = 10.0;
    tree.entries.push_back(entry);

    std::string dot = export_dot(tree, {});
    CHECK(dot.find("\"we\\\"ird\\\\gate\"") != std::string::npos);
}
