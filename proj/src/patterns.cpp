#include "onto/patterns.hpp"

#include <algorithm>
#include <set>

namespace onto {

std::vector<ClassExprPtr> some_only(const Iri& property,
                                    std::vector<ClassExprPtr> fillers) {
    if (fillers.empty())
        throw Error(ErrorCode::EmptyFillers,
                    "some-only on " + property.str() + " needs fillers");
    std::vector<ClassExprPtr> out;
    out.reserve(fillers.size() + 1);
    for (const auto& f : fillers)
        out.push_back(some(property, f));
    if (fillers.size() == 1)
        out.push_back(only(property, fillers.front()));
    else
        out.push_back(only(property, or_of(std::move(fillers))));
    return out;
}

// ----------------------------------------------------------------------

FacetRegistry FacetRegistry::from_ontology(const Ontology& ont) {
    FacetRegistry reg;
    for (const auto& ax : ont.axioms()) {
        const auto* ann = std::get_if<AnnotationAssertion>(&ax.node);
        if (!ann || ann->property != vocab::facet_property())
            continue;
        const Iri* prop = std::get_if<Iri>(&ann->value);
        if (!prop)
            throw Error(ErrorCode::FacetConflict,
                        "facet annotation on " + ann->subject.str() +
                            " does not name a property");
        auto it = reg.entries_.find(ann->subject);
        if (it != reg.entries_.end()) {
            if (it->second != *prop)
                throw Error(ErrorCode::FacetConflict,
                            ann->subject.str() + " is registered to both " +
                                it->second.str() + " and " + prop->str());
            continue;
        }
        reg.entries_.emplace(ann->subject, *prop);
        reg.order_.emplace_back(ann->subject, *prop);
    }
    return reg;
}

std::optional<Iri> FacetRegistry::property_of(const Iri& value_class) const {
    auto it = entries_.find(value_class);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Iri> FacetRegistry::values_of(const Iri& property) const {
    std::vector<Iri> out;
    for (const auto& [cls, prop] : order_)
        if (prop == property)
            out.push_back(cls);
    return out;
}

std::vector<Iri> FacetRegistry::properties() const {
    std::vector<Iri> out;
    for (const auto& [cls, prop] : order_)
        if (std::find(out.begin(), out.end(), prop) == out.end())
            out.push_back(prop);
    return out;
}

void as_facet(Ontology& ont, const Iri& property,
              std::span<const Iri> classes) {
    if (ont.kind_of(property) != EntityKind::ObjectProperty)
        throw Error(ErrorCode::KindClash,
                    property.str() + " is not an object property");
    auto registry = FacetRegistry::from_ontology(ont);
    for (const Iri& cls : classes) {
        if (ont.kind_of(cls) != EntityKind::Class)
            throw Error(ErrorCode::UndeclaredEntity,
                        cls.str() + " is not a declared class");
        if (auto existing = registry.property_of(cls)) {
            if (*existing != property)
                throw Error(ErrorCode::FacetConflict,
                            cls.str() + " is already a facet of " +
                                existing->str() + ", cannot re-register to " +
                                property.str());
            continue; // idempotent
        }
        ont.add_axiom(
            Axiom{AnnotationAssertion{cls, vocab::facet_property(), property}});
    }
}

std::vector<ClassExprPtr> facet(const FacetRegistry& registry,
                                std::span<const Iri> classes) {
    std::vector<std::pair<std::string, ClassExprPtr>> keyed;
    keyed.reserve(classes.size());
    for (const Iri& cls : classes) {
        auto prop = registry.property_of(cls);
        if (!prop)
            throw Error(ErrorCode::UnregisteredFacetClass,
                        cls.str() + " has no facet property");
        keyed.emplace_back(prop->str(), some(*prop, named(cls)));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ClassExprPtr> out;
    out.reserve(keyed.size());
    for (auto& [key, expr] : keyed)
        out.push_back(std::move(expr));
    return out;
}

// ----------------------------------------------------------------------

namespace {

TierResult expand_tier(Ontology& ont, const TierSpec& spec, PatternKind kind) {
    if (spec.values.empty())
        throw Error(ErrorCode::InvalidExpression,
                    "tier " + spec.name + " needs at least one value");
    {
        std::set<std::string> seen;
        for (const auto& v : spec.values)
            if (!seen.insert(v).second)
                throw Error(ErrorCode::DuplicateValueName,
                            "tier " + spec.name + " repeats value " + v);
    }

    TierResult result;
    result.tier_class = ont.declare(EntityKind::Class, spec.name).iri;
    ont.annotate_pattern(result.tier_class, kind);

    for (const auto& value : spec.values) {
        std::string fragment = spec.suffix ? value + spec.name : value;
        Iri cls = ont.declare(EntityKind::Class, fragment).iri;
        ont.annotate_pattern(cls, kind);
        if (spec.suffix)
            ont.add_axiom(
                Axiom{AnnotationAssertion{cls, vocab::label(), fragment}});
        result.value_classes.push_back(std::move(cls));
    }

    for (const Iri& cls : result.value_classes)
        ont.add_axiom(
            Axiom{SubClassOf{named(cls), named(result.tier_class)}});

    if (spec.super)
        ont.add_axiom(
            Axiom{SubClassOf{named(result.tier_class), named(*spec.super)}});

    if (spec.cover) {
        ClassExprPtr rhs;
        if (result.value_classes.size() == 1) {
            rhs = named(result.value_classes.front());
        } else {
            std::vector<ClassExprPtr> operands;
            for (const Iri& cls : result.value_classes)
                operands.push_back(named(cls));
            rhs = or_of(std::move(operands));
        }
        ont.add_axiom(
            Axiom{EquivalentClasses{{named(result.tier_class), rhs}}});
    }

    if (spec.disjoint && result.value_classes.size() >= 2)
        ont.add_axiom(Axiom{DisjointClasses{result.value_classes}});

    if (spec.make_property) {
        std::string prop_name = spec.property_name.value_or("has" + spec.name);
        Iri prop = ont.declare(EntityKind::ObjectProperty, prop_name).iri;
        ont.annotate_pattern(prop, kind);
        ont.add_axiom(
            Axiom{ObjectPropertyRange{prop, named(result.tier_class)}});
        if (spec.domain)
            ont.add_axiom(
                Axiom{ObjectPropertyDomain{prop, named(*spec.domain)}});
        if (spec.functional)
            ont.add_axiom(Axiom{FunctionalObjectProperty{prop}});
        as_facet(ont, prop, result.value_classes);
        result.property = std::move(prop);
    }

    return result;
}

} // namespace

TierResult deftier(Ontology& ont, const TierSpec& spec) {
    return expand_tier(ont, spec, PatternKind::Tier);
}

TierResult defpartition(Ontology& ont, TierSpec spec) {
    spec.functional = true;
    spec.disjoint = true;
    spec.cover = true;
    return expand_tier(ont, spec, PatternKind::Partition);
}

// ----------------------------------------------------------------------

Iri defgem(Ontology& ont, const GemSpec& spec) {
    auto registry = FacetRegistry::from_ontology(ont);

    // One value per facet property.
    std::map<Iri, Iri> by_property;
    for (const Iri& cls : spec.facets) {
        auto prop = registry.property_of(cls);
        if (!prop)
            throw Error(ErrorCode::UnregisteredFacetClass,
                        cls.str() + " has no facet property");
        auto [it, fresh] = by_property.emplace(*prop, cls);
        if (!fresh && it->second != cls)
            throw Error(ErrorCode::DuplicateFacetProperty,
                        "gem " + spec.name + " sets " + prop->str() +
                            " twice (" + it->second.str() + " and " +
                            cls.str() + ")");
    }

    std::vector<ClassExprPtr> restrictions = facet(registry, spec.facets);

    Iri cls = ont.declare(EntityKind::Class, spec.name).iri;
    ont.annotate_pattern(cls, PatternKind::Gem);

    if (spec.defined) {
        std::vector<ClassExprPtr> operands = spec.extra_supers;
        operands.insert(operands.end(), restrictions.begin(),
                        restrictions.end());
        if (operands.empty())
            throw Error(ErrorCode::InvalidExpression,
                        "defined gem " + spec.name +
                            " needs at least one facet or super");
        ClassExprPtr rhs = operands.size() == 1 ? operands.front()
                                                : and_of(std::move(operands));
        ont.add_axiom(Axiom{EquivalentClasses{{named(cls), rhs}}});
    } else {
        for (const auto& s : spec.extra_supers)
            ont.add_axiom(Axiom{SubClassOf{named(cls), s}});
        for (const auto& r : restrictions)
            ont.add_axiom(Axiom{SubClassOf{named(cls), r}});
    }

    if (spec.comment)
        ont.add_axiom(
            Axiom{AnnotationAssertion{cls, vocab::comment(), *spec.comment}});

    return cls;
}

} // namespace onto
