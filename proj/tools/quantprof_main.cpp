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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quantprof/errors.hpp"
#include "quantprof/profile.hpp"

namespace {

#ifndef QUANTPROF_VERSION
#define QUANTPROF_VERSION "0.0.0"
#endif

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw quantprof::ConfigError("cannot open \"" + path + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw quantprof::ConfigError("cannot read \"" + path + "\"");
    }
    return buffer.str();
}

bool ends_with(const std::string &text, const std::string &suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

quantprof::InputFormat pick_format(const std::string &flag, const std::string &path) {
    if (flag == "qasm") {
        return quantprof::InputFormat::Qasm;
    }
    if (flag == "interchange") {
        return quantprof::InputFormat::Interchange;
    }
    if (ends_with(path, ".qasm")) {
        return quantprof::InputFormat::Qasm;
    }
    if (ends_with(path, ".json")) {
        return quantprof::InputFormat::Interchange;
    }
    throw quantprof::ConfigError("cannot infer the input format from \"" + path +
                                 "\"; pass --format qasm or --format interchange");
}

quantprof::ReportFormat pick_exporter(const std::string &flag) {
    if (flag == "json") {
        return quantprof::ReportFormat::Json;
    }
    if (flag == "dot") {
        return quantprof::ReportFormat::Dot;
    }
    return quantprof::ReportFormat::Gprof;
}

void write_output(const std::string &path, const std::string &report) {
    if (path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw quantprof::ConfigError("cannot open \"" + path + "\" for writing");
    }
    out << report;
    out.flush();
    if (!out) {
        throw quantprof::ConfigError("cannot write \"" + path + "\"");
    }
}

int run(int argc, char **argv) {
    CLI::App app{"Gate-count and execution-time profiler for quantum circuits"};
    app.name("quantprof");

    std::string input_path;
    std::string times_path;
    std::string output_path;
    std::string format_flag;
    std::string exporter_flag = "gprof";
    std::string root_name;
    double node_threshold = 0.5;
    double edge_threshold = 0.1;

    app.add_option("input", input_path, "Circuit to profile (.qasm or interchange .json)")
        ->required();
    app.add_option("--gate-times", times_path,
                   "JSON file mapping native gate names to durations")
        ->required();
    app.add_option("--format", format_flag,
                   "Input format; inferred from the file extension when omitted")
        ->check(CLI::IsMember({"qasm", "interchange"}));
    app.add_option("--exporter", exporter_flag, "Report format (default: gprof)")
        ->check(CLI::IsMember({"gprof", "json", "dot"}));
    app.add_option("--output", output_path, "Write the report here instead of stdout");
    auto *root_opt =
        app.add_option("--root", root_name, "Profile this routine instead of the program");
    app.add_option("--node-threshold", node_threshold,
                   "dot: hide routines below this percentage of total time")
        ->capture_default_str();
    app.add_option("--edge-threshold", edge_threshold,
                   "dot: hide calls at or below this percentage of total time")
        ->capture_default_str();
    app.set_version_flag("--version", std::string("quantprof ") + QUANTPROF_VERSION);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &err) {
        return app.exit(err);
    } catch (const CLI::CallForVersion &err) {
        return app.exit(err);
    } catch (const CLI::ParseError &err) {
        app.exit(err);
        return 1;
    }

    if (node_threshold < 0.0 || edge_threshold < 0.0) {
        throw quantprof::ConfigError("thresholds must be non-negative percentages");
    }

    quantprof::GateTimes times = quantprof::GateTimes::from_json(read_file(times_path));

    quantprof::ProfileOptions options;
    options.format = pick_format(format_flag, input_path);
    if (root_opt->count() > 0) {
        options.root = root_name;
    }

    quantprof::FlatCallTree tree =
        quantprof::profile_source(read_file(input_path), times, options);

    quantprof::DotThresholds thresholds;
    thresholds.node_percent = node_threshold;
    thresholds.edge_percent = edge_threshold;

    write_output(output_path,
                 quantprof::render_report(tree, pick_exporter(exporter_flag), thresholds));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const quantprof::ConfigError &err) {
        std::cerr << "quantprof: error: " << err.what() << "\n";
        return 1;
    } catch (const quantprof::ParseError &err) {
        std::cerr << "quantprof: error: " << err.what() << "\n";
        return 2;
    } catch (const quantprof::ProfileError &err) {
        std::cerr << "quantprof: error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception &err) {
        std::cerr << "quantprof: internal error: " << err.what() << "\n";
        return 70;
    }
}
