#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace onto {

// 1-based position in a source file; {0,0} means "unknown".
struct SourceLoc {
    int line = 0;
    int column = 0;

    bool known() const { return line > 0; }
    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class ErrorCode {
    // names and identifiers
    MalformedIri,
    KindClash,
    UndeclaredEntity,
    DuplicateValueName,
    DuplicateName,

    // expression / axiom construction
    InvalidExpression,
    InvalidAxiom,
    EmptyFillers,

    // facet registry
    FacetConflict,
    UnregisteredFacetClass,
    DuplicateFacetProperty,

    // reader
    UnbalancedDelimiter,
    UnterminatedString,
    IllegalToken,

    // evaluator
    MissingOntologyForm,
    UnknownHead,
    UnboundSymbol,
    ArityError,

    // tabular input
    BadHeader,
    BadRow,
    BadEnumValue,

    // classification
    UniverseMismatch,
    FragmentViolation,
    OracleInapplicable,

    // i/o
    Io,
};

const char* error_code_name(ErrorCode code);

// Single exception type for every domain failure.  what() is the bare
// message; callers that know the input file prepend "file:line:col:".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(ErrorCode code, SourceLoc loc, std::string message)
        : std::runtime_error(std::move(message)), code_(code), loc_(loc) {}

    ErrorCode code() const noexcept { return code_; }
    const std::optional<SourceLoc>& where() const noexcept { return loc_; }

private:
    ErrorCode code_;
    std::optional<SourceLoc> loc_;
};

// "file:line:col: message" when the error carries a location,
// otherwise "file: message".
std::string format_diagnostic(const std::string& file, const Error& err);

} // namespace onto
