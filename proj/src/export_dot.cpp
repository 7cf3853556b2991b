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

#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "quantprof/errors.hpp"
#include "quantprof/exporters.hpp"

namespace quantprof {

namespace {

std::string percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", value);
    return buf;
}

std::string escaped(const std::string &name) {
    std::string out;
    for (char c : name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string &name) { return "\"" + escaped(name) + "\""; }

} // namespace

std::string export_dot(const FlatCallTree &tree, const DotThresholds &thresholds) {
    if (tree.total_time == 0.0) throw ZeroTotalTime();

    std::ostringstream out;
    out << "digraph callgraph {\n";
    out << "  node [shape=box, style=filled, fillcolor=\"#f2f2f2\"];\n";

    std::unordered_set<std::string> plotted;
    for (const FlatEntry &entry : tree.entries) {
        double node_percent = total_percent(entry, tree);
        if (node_percent < thresholds.node_percent) continue;
        double self_percent = 100.0 * entry.self_time / tree.total_time;
        out << "  " << quoted(entry.name) << " [label=\"" << escaped(entry.name) << "\\n"
            << percent(node_percent) << "\\n(" << percent(self_percent) << ")\\n"
            << entry.exec_count << "\xC3\x97\"];\n";
        plotted.insert(entry.name);
    }

    for (const FlatEntry &entry : tree.entries) {
        if (!plotted.count(entry.name)) continue;
        for (const CallContribution &callee : entry.callees) {
            if (!plotted.count(callee.name)) continue;
            double edge_percent = 100.0 * (callee.self + callee.children) / tree.total_time;
            if (edge_percent <= thresholds.edge_percent) continue;
            out << "  " << quoted(entry.name) << " -> " << quoted(callee.name)
                << " [label=\"calls " << callee.calls << " / " << percent(edge_percent)
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace quantprof
