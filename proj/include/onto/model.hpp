#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "onto/error.hpp"
#include "onto/iri.hpp"

namespace onto {

enum class EntityKind { Class, ObjectProperty, AnnotationProperty };

const char* entity_kind_name(EntityKind kind);

struct Entity {
    EntityKind kind;
    Iri iri;

    friend bool operator==(const Entity&, const Entity&) = default;
};

// ----------------------------------------------------------------------
// Class expressions.  Immutable trees shared by pointer; structural
// equality is what matters, never pointer identity.

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

struct NamedClass {
    Iri iri;
};

struct SomeRestriction {
    Iri property;
    ClassExprPtr filler;
};

struct OnlyRestriction {
    Iri property;
    ClassExprPtr filler;
};

struct Conjunction {
    std::vector<ClassExprPtr> operands; // >= 2
};

struct Disjunction {
    std::vector<ClassExprPtr> operands; // >= 2
};

struct ClassExpr {
    std::variant<NamedClass, SomeRestriction, OnlyRestriction, Conjunction,
                 Disjunction>
        node;
};

ClassExprPtr named(Iri iri);
ClassExprPtr some(Iri property, ClassExprPtr filler);
ClassExprPtr only(Iri property, ClassExprPtr filler);
// Both require at least two operands and throw Error{InvalidExpression}
// otherwise; operand order is preserved.
ClassExprPtr and_of(std::vector<ClassExprPtr> operands);
ClassExprPtr or_of(std::vector<ClassExprPtr> operands);

bool equal(const ClassExpr& a, const ClassExpr& b);
bool equal(const ClassExprPtr& a, const ClassExprPtr& b);

const NamedClass* as_named(const ClassExprPtr& e);

// Unambiguous single-line form used for diagnostics and duplicate
// detection, e.g. (some o:hasSize o:Tiny).  Distinct expressions always
// produce distinct strings.
std::string debug_string(const ClassExpr& e);
std::string debug_string(const ClassExprPtr& e);

// ----------------------------------------------------------------------
// Axioms.

struct SubClassOf {
    ClassExprPtr sub;
    ClassExprPtr super;
};

struct EquivalentClasses {
    std::vector<ClassExprPtr> operands; // >= 2
};

struct DisjointClasses {
    std::vector<Iri> operands; // >= 2, pairwise distinct
};

struct ObjectPropertyDomain {
    Iri property;
    ClassExprPtr domain;
};

struct ObjectPropertyRange {
    Iri property;
    ClassExprPtr range;
};

struct FunctionalObjectProperty {
    Iri property;
};

using AnnotationValue = std::variant<std::string, Iri>;

struct AnnotationAssertion {
    Iri subject;
    Iri property;
    AnnotationValue value;
};

struct Axiom {
    std::variant<SubClassOf, EquivalentClasses, DisjointClasses,
                 ObjectPropertyDomain, ObjectPropertyRange,
                 FunctionalObjectProperty, AnnotationAssertion>
        node;
};

bool equal(const Axiom& a, const Axiom& b);
std::string debug_string(const Axiom& ax);

// Every IRI mentioned anywhere in the axiom, in encounter order, with
// duplicates.
std::vector<Iri> mentioned_iris(const Axiom& ax);

// ----------------------------------------------------------------------
// Pattern bookkeeping vocabulary.  Entities created by a pattern
// expansion are tagged with internal annotations so later stages can
// recognise the machinery without guessing from names.

enum class PatternKind { Tier, Partition, Facet, Gem, Closure };

const char* pattern_kind_name(PatternKind kind);

namespace vocab {
inline constexpr const char* prefix = "tawny";
Iri pattern();        // tawny:pattern        (string-valued)
Iri facet_property(); // tawny:facetProperty  (IRI-valued)
Iri label();          // tawny:label          (string-valued)
Iri comment();        // tawny:comment        (string-valued)
} // namespace vocab

// ----------------------------------------------------------------------
// Ontology: an insertion-ordered signature plus an insertion-ordered,
// duplicate-free axiom list.  Axioms may only mention declared entities,
// and each name has exactly one kind.

class Ontology {
public:
    Ontology(Iri iri, std::string default_prefix);

    const Iri& iri() const { return iri_; }
    const std::string& default_prefix() const { return default_prefix_; }

    void register_prefix(std::string prefix, std::string expansion);
    const std::map<std::string, std::string>& prefixes() const {
        return prefixes_;
    }

    // Builds prefix:fragment with the default prefix.
    Iri make_iri(std::string_view fragment) const;

    // Idempotent for an identical redeclaration; Error{KindClash} when the
    // IRI is already declared with a different kind; Error{MalformedIri}
    // when the prefix has not been registered.
    Entity declare(EntityKind kind, std::string_view fragment);
    Entity declare(EntityKind kind, Iri iri);

    bool is_declared(const Iri& iri) const;
    std::optional<EntityKind> kind_of(const Iri& iri) const;

    // Validates shape, declaredness and kinds, then appends unless an
    // equal axiom is already present (silent de-duplication).
    void add_axiom(Axiom ax);

    // AnnotationAssertion(subject, tawny:pattern, kind name).
    void annotate_pattern(const Iri& subject, PatternKind kind);

    std::span<const Entity> signature() const { return entities_; }
    std::span<const Axiom> axioms() const { return axioms_; }

    // Axioms mentioning the IRI, in assertion order.
    // Error{UndeclaredEntity} when the IRI was never declared.
    std::vector<Axiom> axioms_about(const Iri& iri) const;

private:
    Iri iri_;
    std::string default_prefix_;
    std::map<std::string, std::string> prefixes_;
    std::vector<Entity> entities_;
    std::map<Iri, EntityKind> kinds_;
    std::vector<Axiom> axioms_;
    std::unordered_set<std::string> axiom_keys_;

    void check_axiom(const Axiom& ax) const;
    void require_kind(const Iri& iri, EntityKind kind,
                      const char* role) const;
};

// Convenience: parse the ontology IRI and register the default prefix
// (plus the internal annotation vocabulary).
Ontology new_ontology(std::string_view iri, std::string_view default_prefix);

// First tawny:pattern annotation value on the entity, if any.
std::optional<std::string> pattern_tag(const Ontology& ont, const Iri& iri);

} // namespace onto
