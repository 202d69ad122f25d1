#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onto/error.hpp"

namespace onto {

// One node of the surface syntax.
//
//   program  = form*
//   form     = list | vector | symbol | keyword | string
//   list     = '(' form* ')'
//   vector   = '[' form* ']'
//   symbol   = [A-Za-z][A-Za-z0-9_-]*
//   keyword  = ':' symbol
//   string   = '"' ... '"'   (verbatim; may span lines; no escapes)
//
// ';' starts a comment running to end of line.  Every node remembers the
// 1-based line/column where it started.
struct Form {
    enum class Kind { List, Vector, Symbol, Keyword, String };

    Kind kind = Kind::List;
    std::string text;        // symbol name, keyword name (no ':'), or
                             // string contents
    std::vector<Form> items; // list/vector members
    SourceLoc loc;

    bool is(Kind k) const { return kind == k; }
    bool is_symbol(std::string_view name) const {
        return kind == Kind::Symbol && text == name;
    }
    bool is_keyword(std::string_view name) const {
        return kind == Kind::Keyword && text == name;
    }
};

// Throws Error{UnbalancedDelimiter | UnterminatedString | IllegalToken}
// with the offending location.
std::vector<Form> parse(std::string_view text);

// Canonical text: minimal whitespace, one space between members.
// parse(print_program(forms)) reproduces the same forms.
std::string print_form(const Form& form);
std::string print_program(std::span<const Form> forms);

} // namespace onto
