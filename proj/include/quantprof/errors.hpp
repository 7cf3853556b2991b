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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quantprof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &message) : std::runtime_error(message) {}
};

/// Invalid configuration: gate-time table, CLI flags, root selection.
/// The CLI maps these to exit code 1.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Malformed or semantically inconsistent circuit input.
/// The CLI maps these to exit code 2.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Input parsed fine but cannot be profiled (recursion, overflow, zero
/// total time). The CLI maps these to exit code 3.
class ProfileError : public Error {
  public:
    using Error::Error;
};

// --- configuration errors ---

class NegativeDuration : public ConfigError {
  public:
    explicit NegativeDuration(const std::string &gate)
        : ConfigError("gate \"" + gate + "\" has a negative duration"), gate(gate) {}
    std::string gate;
};

class EmptyGateTimes : public ConfigError {
  public:
    EmptyGateTimes() : ConfigError("gate-time table is empty; no gate can be native") {}
};

class EmptyGateName : public ConfigError {
  public:
    EmptyGateName() : ConfigError("gate-time table contains an empty gate name") {}
};

class UnknownRootRoutine : public ConfigError {
  public:
    explicit UnknownRootRoutine(const std::string &name)
        : ConfigError("requested root routine \"" + name + "\" does not exist in the circuit"),
          name(name) {}
    std::string name;
};

// --- parse errors ---

/// Lexical or grammatical error, with 1-based source position.
class SyntaxError : public ParseError {
  public:
    SyntaxError(int line, int column, const std::string &message)
        : ParseError("line " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     message),
          line(line), column(column) {}
    int line;
    int column;
};

class MissingVersionHeader : public ParseError {
  public:
    MissingVersionHeader()
        : ParseError("missing \"OPENQASM 2.0;\" header at the start of the program") {}
};

class UnknownInclude : public ParseError {
  public:
    explicit UnknownInclude(const std::string &name)
        : ParseError("unknown include \"" + name + "\" (only \"qelib1.inc\" is built in)"),
          name(name) {}
    std::string name;
};

class UnknownGate : public ParseError {
  public:
    UnknownGate(const std::string &name, int line)
        : ParseError("line " + std::to_string(line) + ": unknown gate \"" + name + "\""),
          name(name), line(line) {}
    explicit UnknownGate(const std::string &name)
        : ParseError("unknown gate \"" + name + "\""), name(name), line(0) {}
    std::string name;
    int line;
};

class ArityMismatch : public ParseError {
  public:
    ArityMismatch(const std::string &name, std::size_t expected, std::size_t got, int line,
                  const std::string &what_kind = "qubit arguments")
        : ParseError("line " + std::to_string(line) + ": gate \"" + name + "\" expects " +
                     std::to_string(expected) + " " + what_kind + ", got " +
                     std::to_string(got)),
          name(name), expected(expected), got(got), line(line) {}
    std::string name;
    std::size_t expected;
    std::size_t got;
    int line;
};

/// A routine flagged as native has no configured duration.
class NativeGateWithoutTime : public ParseError {
  public:
    explicit NativeGateWithoutTime(const std::string &name)
        : ParseError("native gate \"" + name + "\" has no entry in the gate-time table"),
          name(name) {}
    std::string name;
};

/// A non-native routine with an empty body cannot be profiled.
class EmptyComposite : public ParseError {
  public:
    explicit EmptyComposite(const std::string &name)
        : ParseError("composite routine \"" + name + "\" has an empty body"), name(name) {}
    std::string name;
};

/// Interchange JSON does not match the expected schema.
class SchemaError : public ParseError {
  public:
    SchemaError(const std::string &path, const std::string &message)
        : ParseError("schema violation at " + path + ": " + message), path(path) {}
    std::string path;
};

class DuplicateRoutine : public ParseError {
  public:
    explicit DuplicateRoutine(const std::string &name)
        : ParseError("routine \"" + name + "\" is defined more than once"), name(name) {}
    std::string name;
};

// --- profiling errors ---

/// Raised when an aggregate is requested over a cyclic call graph.
class RecursionUnsupported : public ProfileError {
  public:
    explicit RecursionUnsupported(std::vector<std::string> cycle_names)
        : ProfileError("recursive subroutine calls cannot be aggregated; cycle: " +
                       join(cycle_names)),
          cycle(std::move(cycle_names)) {}
    std::vector<std::string> cycle;

  private:
    static std::string join(const std::vector<std::string> &names) {
        std::string out = "[";
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i > 0) out += ", ";
            out += "\"" + names[i] + "\"";
        }
        return out + "]";
    }
};

class ZeroTotalTime : public ProfileError {
  public:
    ZeroTotalTime()
        : ProfileError("total execution time is zero; percentages are undefined "
                       "(all configured durations are zero)") {}
};

/// A dynamic call count exceeded the 64-bit range.
class CountOverflow : public ProfileError {
  public:
    CountOverflow() : ProfileError("dynamic call count overflows 64 bits") {}
};

} // namespace quantprof
