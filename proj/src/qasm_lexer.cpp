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

#include "qasm_lexer.hpp"

#include <cctype>

#include "quantprof/errors.hpp"

namespace quantprof::qasm {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            while (i < source.size() && source[i] != '\n') {
                advance(1);
            }
            continue;
        }

        Token tok;
        tok.line = line;
        tok.column = column;

        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < source.size() && is_ident_char(source[i])) {
                advance(1);
            }
            tok.kind = TokKind::Ident;
            tok.text = std::string(source.substr(start, i - start));
            out.push_back(std::move(tok));
            continue;
        }

        if (is_digit(c) || (c == '.' && i + 1 < source.size() && is_digit(source[i + 1]))) {
            std::size_t start = i;
            bool real = false;
            while (i < source.size() && is_digit(source[i])) {
                advance(1);
            }
            if (i < source.size() && source[i] == '.') {
                real = true;
                advance(1);
                while (i < source.size() && is_digit(source[i])) {
                    advance(1);
                }
            }
            if (i < source.size() && (source[i] == 'e' || source[i] == 'E')) {
                std::size_t mark = i;
                advance(1);
                if (i < source.size() && (source[i] == '+' || source[i] == '-')) {
                    advance(1);
                }
                if (i < source.size() && is_digit(source[i])) {
                    real = true;
                    while (i < source.size() && is_digit(source[i])) {
                        advance(1);
                    }
                } else {
                    // Not an exponent after all; rewind and let the 'e'
                    // lex as an identifier.
                    while (i > mark) {
                        --i;
                        --column;
                    }
                }
            }
            tok.kind = real ? TokKind::Real : TokKind::Integer;
            tok.text = std::string(source.substr(start, i - start));
            out.push_back(std::move(tok));
            continue;
        }

        if (c == '"') {
            advance(1);
            std::size_t start = i;
            while (i < source.size() && source[i] != '"' && source[i] != '\n') {
                advance(1);
            }
            if (i >= source.size() || source[i] != '"') {
                throw SyntaxError(tok.line, tok.column, "unterminated string literal");
            }
            tok.kind = TokKind::String;
            tok.text = std::string(source.substr(start, i - start));
            advance(1);
            out.push_back(std::move(tok));
            continue;
        }

        if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
            tok.kind = TokKind::Punct;
            tok.text = "->";
            advance(2);
            out.push_back(std::move(tok));
            continue;
        }

        // Lexed so that an `if (c == 1)` statement reaches the parser and
        // gets the dedicated unsupported-statement diagnostic.
        if (c == '=' && i + 1 < source.size() && source[i + 1] == '=') {
            tok.kind = TokKind::Punct;
            tok.text = "==";
            advance(2);
            out.push_back(std::move(tok));
            continue;
        }

        switch (c) {
        case ';':
        case ',':
        case '(':
        case ')':
        case '{':
        case '}':
        case '[':
        case ']':
        case '+':
        case '-':
        case '*':
        case '/':
            tok.kind = TokKind::Punct;
            tok.text = std::string(1, c);
            advance(1);
            out.push_back(std::move(tok));
            continue;
        default:
            throw SyntaxError(line, column,
                              std::string("unexpected character '") + c + "'");
        }
    }

    Token end;
    end.kind = TokKind::End;
    end.line = line;
    end.column = column;
    out.push_back(std::move(end));
    return out;
}

} // namespace quantprof::qasm
