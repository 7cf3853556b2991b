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

#include "quantprof/gate_times.hpp"

#include <json.hpp>

#include "quantprof/errors.hpp"

namespace quantprof {

GateTimes GateTimes::validate(const std::map<std::string, double> &raw) {
    if (raw.empty()) throw EmptyGateTimes();
    for (const auto &[name, duration] : raw) {
        if (name.empty()) throw EmptyGateName();
        if (duration < 0.0) throw NegativeDuration(name);
    }
    GateTimes result;
    result.entries_ = raw;
    return result;
}

GateTimes GateTimes::from_json(std::string_view text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("gate-time table is not valid JSON: ") + e.what());
    }
    if (!parsed.is_object()) {
        throw ConfigError("gate-time table must be a JSON object of gate name to duration");
    }
    std::map<std::string, double> raw;
    for (const auto &[name, value] : parsed.items()) {
        if (!value.is_number()) {
            throw ConfigError("duration of gate \"" + name + "\" must be a number");
        }
        raw[name] = value.get<double>();
    }
    return validate(raw);
}

} // namespace quantprof
