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

#include <string>
#include <string_view>
#include <vector>

namespace quantprof::qasm {

enum class TokKind {
    Ident,
    Integer,
    Real,
    String, // text holds the unquoted content
    Punct,  // text is the operator: ; , ( ) { } [ ] + - * / ->
    End
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

/// Tokenizes OpenQASM 2.0 source. Skips whitespace and // comments.
/// Throws SyntaxError on unterminated strings or stray characters.
std::vector<Token> tokenize(std::string_view source);

} // namespace quantprof::qasm
