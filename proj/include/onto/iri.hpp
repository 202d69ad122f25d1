#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace onto {

// Compact prefixed name, e.g. {"o", "AminoAcid"} rendered as "o:AminoAcid".
// Both parts match [A-Za-z][A-Za-z0-9_]*.
struct Iri {
    std::string prefix;
    std::string fragment;

    // Validating constructors.  Throw Error{MalformedIri} on bad parts.
    static Iri make(std::string_view prefix, std::string_view fragment);
    static Iri parse(std::string_view rendered); // "o:AminoAcid"

    std::string str() const { return prefix + ":" + fragment; }

    // Total order for use as a map key.  Note: this orders by
    // (prefix, fragment) which is NOT always the same as ordering by the
    // rendered string; display code sorts rendered strings explicitly.
    friend auto operator<=>(const Iri&, const Iri&) = default;
};

bool valid_name_part(std::string_view s);

} // namespace onto
