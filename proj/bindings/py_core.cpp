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
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quantprof/errors.hpp"
#include "quantprof/profile.hpp"

namespace py = pybind11;

namespace {

#ifndef QUANTPROF_VERSION
#define QUANTPROF_VERSION "0.0.0"
#endif

quantprof::InputFormat parse_format(const std::string &format) {
    if (format == "qasm") {
        return quantprof::InputFormat::Qasm;
    }
    if (format == "interchange") {
        return quantprof::InputFormat::Interchange;
    }
    throw quantprof::ConfigError("format must be \"qasm\" or \"interchange\", got \"" +
                                 format + "\"");
}

quantprof::ReportFormat parse_exporter(const std::string &exporter) {
    if (exporter == "gprof") {
        return quantprof::ReportFormat::Gprof;
    }
    if (exporter == "json") {
        return quantprof::ReportFormat::Json;
    }
    if (exporter == "dot") {
        return quantprof::ReportFormat::Dot;
    }
    throw quantprof::ConfigError("exporter must be \"gprof\", \"json\" or \"dot\", got \"" +
                                 exporter + "\"");
}

std::string profile(const std::string &source,
                    const std::map<std::string, double> &gate_times,
                    const std::string &format, const std::optional<std::string> &root,
                    const std::string &exporter, double node_threshold,
                    double edge_threshold) {
    quantprof::ProfileOptions options;
    options.format = parse_format(format);
    options.root = root;

    quantprof::DotThresholds thresholds;
    thresholds.node_percent = node_threshold;
    thresholds.edge_percent = edge_threshold;

    quantprof::GateTimes times = quantprof::GateTimes::validate(gate_times);
    quantprof::FlatCallTree tree = quantprof::profile_source(source, times, options);
    return quantprof::render_report(tree, parse_exporter(exporter), thresholds);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gate-count and execution-time profiler for quantum circuits";

    auto error = py::register_exception<quantprof::Error>(m, "Error");
    py::register_exception<quantprof::ConfigError>(m, "ConfigError", error.ptr());
    py::register_exception<quantprof::ParseError>(m, "ParseError", error.ptr());
    py::register_exception<quantprof::ProfileError>(m, "ProfileError", error.ptr());

    m.def("profile", &profile, py::arg("source"), py::arg("gate_times"), py::kw_only(),
          py::arg("format") = "qasm", py::arg("root") = py::none(),
          py::arg("exporter") = "gprof", py::arg("node_threshold") = 0.5,
          py::arg("edge_threshold") = 0.1,
          R"(Profile a circuit and return the rendered report.

Args:
    source: circuit text, OpenQASM 2.0 or the JSON interchange format.
    gate_times: mapping of native gate names to durations.
    format: "qasm" or "interchange".
    root: profile this routine instead of the program entry point.
    exporter: "gprof", "json" or "dot".
    node_threshold: dot only; hide routines below this percent of total time.
    edge_threshold: dot only; hide calls at or below this percent.
)");

    m.attr("__version__") = QUANTPROF_VERSION;
}
