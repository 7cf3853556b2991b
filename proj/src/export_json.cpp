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

#include <json.hpp>

#include "quantprof/errors.hpp"
#include "quantprof/exporters.hpp"

namespace quantprof {

namespace {

using nlohmann::json;

json contributions_to_json(const std::vector<CallContribution> &records) {
    json out = json::array();
    for (const CallContribution &record : records) {
        out.push_back({{"name", record.name},
                       {"calls", record.calls},
                       {"self", record.self},
                       {"children", record.children}});
    }
    return out;
}

std::vector<CallContribution> contributions_from_json(const json &array,
                                                      const std::string &path) {
    if (!array.is_array()) throw SchemaError(path, "expected an array");
    std::vector<CallContribution> records;
    for (const auto &item : array) {
        CallContribution record;
        record.name = item.at("name").get<std::string>();
        record.calls = item.at("calls").get<std::uint64_t>();
        record.self = item.at("self").get<double>();
        record.children = item.at("children").get<double>();
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace

std::string export_json(const FlatCallTree &tree) {
    json routines = json::array();
    for (const FlatEntry &entry : tree.entries) {
        routines.push_back({{"index", entry.index},
                            {"name", entry.name},
                            {"exec_count", entry.exec_count},
                            {"self_time", entry.self_time},
                            {"children_time", entry.children_time},
                            {"callers", contributions_to_json(entry.callers)},
                            {"callees", contributions_to_json(entry.callees)}});
    }
    json report{{"total_time", tree.total_time},
                {"qubit_count", tree.qubit_count},
                {"gate_times", tree.gate_times},
                {"routines", routines}};
    return report.dump(2) + "\n";
}

FlatCallTree flat_tree_from_json(std::string_view text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
    try {
        FlatCallTree tree;
        tree.total_time = parsed.at("total_time").get<double>();
        tree.qubit_count = parsed.at("qubit_count").get<std::size_t>();
        tree.gate_times = parsed.at("gate_times").get<std::map<std::string, double>>();
        const json &routines = parsed.at("routines");
        if (!routines.is_array()) throw SchemaError("/routines", "expected an array");
        for (const auto &item : routines) {
            FlatEntry entry;
            entry.index = item.at("index").get<std::size_t>();
            entry.name = item.at("name").get<std::string>();
            entry.exec_count = item.at("exec_count").get<std::uint64_t>();
            entry.self_time = item.at("self_time").get<double>();
            entry.children_time = item.at("children_time").get<double>();
            entry.callers = contributions_from_json(item.at("callers"), "/routines/callers");
            entry.callees = contributions_from_json(item.at("callees"), "/routines/callees");
            tree.entries.push_back(std::move(entry));
        }
        return tree;
    } catch (const json::exception &e) {
        throw SchemaError("/", e.what());
    }
}

} // namespace quantprof
