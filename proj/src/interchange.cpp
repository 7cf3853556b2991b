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

#include "quantprof/interchange.hpp"

#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "quantprof/errors.hpp"

namespace quantprof {

namespace {

using nlohmann::json;
using AdapterPtr = std::shared_ptr<const RoutineAdapter>;

struct InterRoutine {
    std::string name;
    std::vector<std::string> body;
};

struct Document {
    std::string root;
    std::vector<InterRoutine> routines;
};

void require_fields(const json &object, const std::string &path,
                    const std::vector<std::string> &fields) {
    for (const std::string &field : fields) {
        if (!object.contains(field)) {
            throw SchemaError(path, "missing field \"" + field + "\"");
        }
    }
    for (const auto &item : object.items()) {
        bool known = false;
        for (const std::string &field : fields) {
            if (item.key() == field) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SchemaError(path + "." + item.key(), "unknown field");
        }
    }
}

std::string require_string(const json &value, const std::string &path) {
    if (!value.is_string()) {
        throw SchemaError(path, "expected a string");
    }
    return value.get<std::string>();
}

Document parse_document(std::string_view source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error &err) {
        throw SchemaError("$", std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("$", "expected an object");
    }
    require_fields(doc, "$", {"root", "routines"});

    Document out;
    out.root = require_string(doc["root"], "$.root");
    if (out.root.empty()) {
        throw SchemaError("$.root", "routine name must not be empty");
    }

    const json &routines = doc["routines"];
    if (!routines.is_array()) {
        throw SchemaError("$.routines", "expected an array");
    }
    for (std::size_t i = 0; i < routines.size(); ++i) {
        std::string path = "$.routines[" + std::to_string(i) + "]";
        const json &entry = routines[i];
        if (!entry.is_object()) {
            throw SchemaError(path, "expected an object");
        }
        require_fields(entry, path, {"name", "body"});

        InterRoutine routine;
        routine.name = require_string(entry["name"], path + ".name");
        if (routine.name.empty()) {
            throw SchemaError(path + ".name", "routine name must not be empty");
        }
        const json &body = entry["body"];
        if (!body.is_array()) {
            throw SchemaError(path + ".body", "expected an array");
        }
        for (std::size_t k = 0; k < body.size(); ++k) {
            std::string item_path = path + ".body[" + std::to_string(k) + "]";
            std::string callee = require_string(body[k], item_path);
            if (callee.empty()) {
                throw SchemaError(item_path, "routine name must not be empty");
            }
            routine.body.push_back(std::move(callee));
        }
        out.routines.push_back(std::move(routine));
    }
    return out;
}

struct Resolver {
    const GateTimes &times;
    std::map<std::string, const InterRoutine *> defined;
    std::map<std::string, AdapterPtr> cache;

    AdapterPtr resolve(const std::string &name);
};

class InterAdapter : public RoutineAdapter {
  public:
    InterAdapter(const InterRoutine *routine, Resolver *resolver)
        : routine_(routine), resolver_(resolver) {}

    std::string name() const override { return routine_->name; }
    bool is_base() const override { return false; }

    std::vector<AdapterPtr> children() const override {
        std::vector<AdapterPtr> out;
        out.reserve(routine_->body.size());
        for (const std::string &callee : routine_->body) {
            out.push_back(resolver_->resolve(callee));
        }
        return out;
    }

  private:
    const InterRoutine *routine_;
    Resolver *resolver_;
};

class NativeLeaf : public RoutineAdapter {
  public:
    explicit NativeLeaf(std::string name) : name_(std::move(name)) {}
    std::string name() const override { return name_; }
    bool is_base() const override { return true; }
    std::vector<AdapterPtr> children() const override { return {}; }

  private:
    std::string name_;
};

AdapterPtr Resolver::resolve(const std::string &name) {
    auto cached = cache.find(name);
    if (cached != cache.end()) {
        return cached->second;
    }
    AdapterPtr adapter;
    auto it = defined.find(name);
    if (it != defined.end()) {
        adapter = std::make_shared<InterAdapter>(it->second, this);
    } else if (times.contains(name)) {
        adapter = std::make_shared<NativeLeaf>(name);
    } else {
        throw UnknownGate(name);
    }
    cache.emplace(name, adapter);
    return adapter;
}

} // namespace

CircuitIR parse_interchange(std::string_view source, const GateTimes &times,
                            const std::optional<std::string> &root) {
    Document doc = parse_document(source);

    Resolver resolver{times, {}, {}};
    for (const InterRoutine &routine : doc.routines) {
        if (!resolver.defined.emplace(routine.name, &routine).second) {
            throw DuplicateRoutine(routine.name);
        }
    }

    // The file must be self-contained: every body entry resolves to a listed
    // routine or a configured native gate, reachable or not.
    for (const InterRoutine &routine : doc.routines) {
        for (const std::string &callee : routine.body) {
            if (resolver.defined.count(callee) == 0 && !times.contains(callee)) {
                throw UnknownGate(callee);
            }
        }
    }

    std::string entry = doc.root;
    if (root.has_value()) {
        if (resolver.defined.count(*root) == 0 && !times.contains(*root)) {
            throw UnknownRootRoutine(*root);
        }
        entry = *root;
    } else if (resolver.defined.count(entry) == 0 && !times.contains(entry)) {
        throw UnknownGate(entry);
    }

    AdapterPtr adapter = resolver.resolve(entry);
    return build_ir(*adapter, times, /*qubit_count=*/0);
}

} // namespace quantprof
