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
#include <string>
#include <unordered_map>

#include "quantprof/errors.hpp"
#include "quantprof/exporters.hpp"

namespace quantprof {

namespace {

// Column recipe follows gprof's own layout; widths are minimums and wide
// values extend the line rather than being truncated.
std::string fixed(double value, int width) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%*.2f", width, value);
    return buf;
}

std::string unsigned_col(std::uint64_t value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%*llu", width,
                  static_cast<unsigned long long>(value));
    return buf;
}

std::string right(const std::string &text, std::size_t width) {
    if (text.size() >= width) return text;
    return std::string(width - text.size(), ' ') + text;
}

std::string left(const std::string &text, std::size_t width) {
    if (text.size() >= width) return text;
    return text + std::string(width - text.size(), ' ');
}

constexpr char kSeparator[] = "-----------------------------------------------";

void write_flat_profile(std::ostringstream &out, const FlatCallTree &tree) {
    out << "Flat profile:\n\n";
    out << "Each sample counts as 1 unit (time unit: as configured).\n";
    out << "  %   cumulative   self              self     total           \n";
    out << " time   seconds   seconds    calls  ms/call  ms/call  name    \n";

    double cumulative = 0.0;
    for (const FlatEntry &entry : tree.entries) {
        cumulative += entry.self_time;
        double self_percent = 100.0 * entry.self_time / tree.total_time;
        double per_call_self = entry.self_time / static_cast<double>(entry.exec_count);
        double per_call_total = entry.total_time() / static_cast<double>(entry.exec_count);
        out << fixed(self_percent, 6) << ' ' << fixed(cumulative, 10) << ' '
            << fixed(entry.self_time, 8) << ' ' << unsigned_col(entry.exec_count, 8) << ' '
            << fixed(per_call_self, 8) << ' ' << fixed(per_call_total, 8) << "  "
            << entry.name << '\n';
    }
}

std::string called_ratio(std::uint64_t calls, std::uint64_t total) {
    return std::to_string(calls) + "/" + std::to_string(total);
}

void write_call_graph(std::ostringstream &out, const FlatCallTree &tree) {
    out << "\n\t\t     Call graph\n\n\n";
    out << "granularity: each call counted once (time unit: as configured)\n\n";
    out << "index % time    self  children    called     name\n\n";

    std::unordered_map<std::string, std::size_t> index_of;
    std::unordered_map<std::string, std::uint64_t> exec_of;
    for (const FlatEntry &entry : tree.entries) {
        index_of[entry.name] = entry.index;
        exec_of[entry.name] = entry.exec_count;
    }
    auto referenced = [&](const std::string &name) {
        return name + " [" + std::to_string(index_of.at(name)) + "]";
    };

    const std::string member_indent(15, ' ');
    for (const FlatEntry &entry : tree.entries) {
        if (entry.callers.empty()) {
            out << std::string(49, ' ') << "<spontaneous>\n";
        } else {
            for (const CallContribution &caller : entry.callers) {
                out << member_indent << fixed(caller.self, 8) << ' '
                    << fixed(caller.children, 9) << ' '
                    << right(called_ratio(caller.calls, entry.exec_count), 9) << "      "
                    << referenced(caller.name) << '\n';
            }
        }

        out << left("[" + std::to_string(entry.index) + "]", 6) << ' '
            << fixed(total_percent(entry, tree), 7) << ' ' << fixed(entry.self_time, 8)
            << ' ' << fixed(entry.children_time, 9) << ' '
            << unsigned_col(entry.exec_count, 9) << "  " << referenced(entry.name) << '\n';

        for (const CallContribution &callee : entry.callees) {
            out << member_indent << fixed(callee.self, 8) << ' '
                << fixed(callee.children, 9) << ' '
                << right(called_ratio(callee.calls, exec_of.at(callee.name)), 9) << "      "
                << referenced(callee.name) << '\n';
        }
        out << kSeparator << '\n';
    }
}

} // namespace

std::string export_gprof(const FlatCallTree &tree) {
    if (tree.total_time == 0.0) throw ZeroTotalTime();
    std::ostringstream out;
    write_flat_profile(out, tree);
    write_call_graph(out, tree);
    return out.str();
}

} // namespace quantprof
