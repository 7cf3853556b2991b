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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace quantprof {

/// Durations of the native gate set, in abstract time units.
///
/// Membership in this table is what makes a routine native: any routine
/// whose name appears here is treated as a hardware primitive and its
/// decomposition (if one exists) is ignored. Durations are unit-agnostic
/// non-negative reals; reports echo them verbatim.
class GateTimes {
  public:
    /// Validates a raw name -> duration map and copies it into a GateTimes.
    /// Throws NegativeDuration, EmptyGateTimes or EmptyGateName.
    static GateTimes validate(const std::map<std::string, double> &raw);

    /// Parses and validates a JSON object of the form {"cx": 300.0, ...}.
    static GateTimes from_json(std::string_view text);

    bool contains(std::string_view name) const {
        return entries_.find(std::string(name)) != entries_.end();
    }

    /// Duration of a native gate; the name must be present.
    double at(const std::string &name) const { return entries_.at(name); }

    std::optional<double> find(const std::string &name) const {
        auto it = entries_.find(name);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::string, double> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const GateTimes &other) const { return entries_ == other.entries_; }

  private:
    GateTimes() = default;
    std::map<std::string, double> entries_;
};

} // namespace quantprof
