#include "onto/iri.hpp"

#include "onto/error.hpp"

namespace onto {

namespace {

bool alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool alnum_or_underscore(char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

bool valid_name_part(std::string_view s) {
    if (s.empty() || !alpha(s.front()))
        return false;
    for (char c : s.substr(1))
        if (!alnum_or_underscore(c))
            return false;
    return true;
}

Iri Iri::make(std::string_view prefix, std::string_view fragment) {
    if (!valid_name_part(prefix))
        throw Error(ErrorCode::MalformedIri,
                    "malformed prefix '" + std::string(prefix) + "'");
    if (!valid_name_part(fragment))
        throw Error(ErrorCode::MalformedIri,
                    "malformed name '" + std::string(fragment) + "'");
    return Iri{std::string(prefix), std::string(fragment)};
}

Iri Iri::parse(std::string_view rendered) {
    auto colon = rendered.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorCode::MalformedIri,
                    "expected 'prefix:name', got '" + std::string(rendered) + "'");
    return make(rendered.substr(0, colon), rendered.substr(colon + 1));
}

} // namespace onto
