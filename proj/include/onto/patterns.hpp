#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onto/model.hpp"

namespace onto {

// ----------------------------------------------------------------------
// some-only closure: existential restrictions for every filler plus one
// universal restriction to the disjunction of all fillers.

std::vector<ClassExprPtr> some_only(const Iri& property,
                                    std::vector<ClassExprPtr> fillers);

// ----------------------------------------------------------------------
// Facet registry: which object property carries each value class.
// Derived entirely from tawny:facetProperty annotations, so it can be
// rebuilt from any ontology at any time.

class FacetRegistry {
public:
    static FacetRegistry from_ontology(const Ontology& ont);

    std::optional<Iri> property_of(const Iri& value_class) const;
    const std::map<Iri, Iri>& entries() const { return entries_; }
    // Value classes of one property, in registration order.
    std::vector<Iri> values_of(const Iri& property) const;
    // Properties that carry at least one value, in registration order.
    std::vector<Iri> properties() const;
    bool empty() const { return entries_.empty(); }

private:
    std::map<Iri, Iri> entries_;          // value class -> property
    std::vector<std::pair<Iri, Iri>> order_; // registration order
};

// Registers classes as facet values of `property` by writing
// tawny:facetProperty annotations.  Re-registering a class with the same
// property is a no-op; with a different property it is a FacetConflict.
void as_facet(Ontology& ont, const Iri& property, std::span<const Iri> classes);

// One existential restriction per class through its registered facet
// property, ordered by rendered property name (stable for ties).
// Error{UnregisteredFacetClass} if any class has no facet property.
std::vector<ClassExprPtr> facet(const FacetRegistry& registry,
                                std::span<const Iri> classes);

// ----------------------------------------------------------------------
// Tiers and partitions.

struct TierSpec {
    std::string name;
    std::vector<std::string> values; // >= 1, pairwise distinct
    std::optional<Iri> domain;
    std::optional<Iri> super;
    bool suffix = false;     // value class names become value+name
    bool functional = true;
    bool disjoint = true;
    bool cover = true;
    bool make_property = true;
    std::optional<std::string> property_name; // default "has" + name
};

struct TierResult {
    Iri tier_class;
    std::vector<Iri> value_classes;
    std::optional<Iri> property;
};

TierResult deftier(Ontology& ont, const TierSpec& spec);

// A partition is a tier with functional, disjoint and cover forced on.
TierResult defpartition(Ontology& ont, TierSpec spec);

// ----------------------------------------------------------------------
// Gems: classes described purely by one value per facet.

struct GemSpec {
    std::string name;
    std::vector<Iri> facets; // registered value classes, one per property
    std::optional<std::string> comment;
    std::vector<ClassExprPtr> extra_supers;
    bool defined = false; // equivalence instead of subclass axioms
};

Iri defgem(Ontology& ont, const GemSpec& spec);

} // namespace onto
