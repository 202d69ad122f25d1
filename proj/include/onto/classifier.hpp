#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "onto/model.hpp"
#include "onto/patterns.hpp"

namespace onto {

// ----------------------------------------------------------------------
// The classifier works on a restricted shape of class: a conjunction of
//   * named classes that are not facet values ("anchors"), and
//   * existential restrictions through facet properties whose fillers
//     are single facet values.
//
// Such a class normalises to a FacetConstraint: per-property sets of
// still-allowed values (absent property = unconstrained) plus the set of
// named anchors.  Facet semantics are closed-world: an individual has
// exactly one value per facet property, so intersecting a property down
// to the empty set makes the class unsatisfiable.
//
// Constraints are closed over the asserted named-superclass graph: when
// a class names another class as a conjunct (or inherits one through a
// chain of named superclasses), that class's own declared conjuncts are
// absorbed too.  Anchor sets are therefore upward-closed, which makes
// the derived subsumption relation a preorder.  Classes tagged as tier
// or partition machinery are treated as opaque anchors: their defining
// axioms (covers, value lists) are not absorbed.

struct FacetConstraint {
    std::set<Iri> anchors;                // upward-closed named conjuncts
    std::map<Iri, std::set<Iri>> allowed; // facet property -> allowed values
    bool defined = false; // has necessary-and-sufficient conditions

    bool unsatisfiable() const {
        for (const auto& [prop, values] : allowed)
            if (values.empty())
                return true;
        return false;
    }
};

struct NotInFragment {
    Iri cls;
    std::string reason;
};

using ConstraintResult = std::variant<FacetConstraint, NotInFragment>;

// ----------------------------------------------------------------------
// The finite universe the classifier and the oracle share: every facet
// property with its value classes, in a fixed order.  An assignment
// picks exactly one value for every property; the universe also keeps
// the reachability closure of asserted named subclass/equivalence axioms
// for anchor reasoning.

class AssignmentUniverse {
public:
    struct Options {
        // Give every non-covering facet a synthetic extra value that
        // stands for "some value outside the enumerated ones".
        bool pad_non_covering = false;
    };

    static AssignmentUniverse build(const Ontology& ont,
                                    const FacetRegistry& registry,
                                    const Options& options);
    static AssignmentUniverse build(const Ontology& ont,
                                    const FacetRegistry& registry);

    std::span<const Iri> properties() const { return properties_; }
    std::span<const Iri> values(const Iri& property) const;
    bool has_property(const Iri& property) const;
    std::optional<Iri> property_of_value(const Iri& cls) const;
    bool is_value(const Iri& cls) const;

    // Product of the per-property value counts (1 when empty).
    std::size_t assignment_count() const;

    // Properties that received a synthetic value, in property order.
    std::span<const Iri> padded_properties() const { return padded_; }

    // Reflexive-transitive reachability over asserted named SubClassOf
    // (and named-named EquivalentClasses) axioms.
    bool named_reaches(const Iri& sub, const Iri& super) const;
    const std::set<Iri>& named_supers(const Iri& cls) const;

    // Declared classes, sorted by rendered name.
    std::span<const Iri> all_classes() const { return classes_; }

    // Domain of a facet property, when asserted with a named class.
    std::optional<Iri> domain_of(const Iri& property) const;

private:
    std::vector<Iri> properties_; // sorted by rendered name
    std::map<Iri, std::vector<Iri>> values_;
    std::map<Iri, Iri> value_property_;
    std::vector<Iri> padded_;
    std::map<Iri, std::set<Iri>> named_supers_;
    std::map<Iri, Iri> domains_;
    std::vector<Iri> classes_;
    std::set<Iri> empty_;
};

// True when the facet's enumerated values provably cover the property's
// named range (the range has an equivalence to the disjunction of
// exactly the registered values).
bool facet_covering(const Ontology& ont, const Iri& property,
                    std::span<const Iri> values);

// Normalises one class.  Error{UndeclaredEntity} for unknown classes;
// out-of-fragment shapes come back as NotInFragment, not an exception.
ConstraintResult constraint_of(const Ontology& ont,
                               const AssignmentUniverse& universe,
                               const Iri& cls);

// "Every instance of b is an instance of a."  Facet part: each property
// constrained by a must be at least as constrained in b.  Anchor part:
// a's anchors must all be reachable from b's.  b unsatisfiable subsumes
// into anything.  Error{UniverseMismatch} when a constraint mentions
// properties or values the universe does not know.
bool subsumes(const AssignmentUniverse& universe, const FacetConstraint& a,
              const FacetConstraint& b);

// ----------------------------------------------------------------------
// Brute-force oracle: enumerate every assignment and test it against the
// constraint's allowed-value sets directly.

struct Assignment {
    // Parallel to universe.properties().
    std::vector<Iri> values;
};

std::vector<Assignment> oracle_extension(const AssignmentUniverse& universe,
                                         const FacetConstraint& c);

// Extensional containment over the finite model.  The facet dimension is
// the assignment enumeration above; the anchor dimension checks the
// canonical counter-model individuals (one per upward-closed anchor set,
// plus the anchorless individual).
bool oracle_subsumes(const AssignmentUniverse& universe,
                     const FacetConstraint& a, const FacetConstraint& b);

// ----------------------------------------------------------------------
// Classification of a whole ontology.

struct ClassificationOptions {
    // Report out-of-fragment classes as skipped instead of failing with
    // Error{FragmentViolation}.
    bool skip_non_fragment = false;
};

struct SkippedClass {
    Iri cls;
    std::string reason;
};

// In-fragment classes with their constraints and the full subsumption
// relation.  Tier and partition machinery is always skipped.
struct ClassifiedSet {
    std::vector<Iri> classes;
    std::vector<FacetConstraint> constraints;
    std::vector<SkippedClass> skipped;
    std::vector<char> rel; // rel[i * n + j]: classes[i] below classes[j]

    bool subsumed(std::size_t i, std::size_t j) const {
        return rel[i * classes.size() + j] != 0;
    }
};

ClassifiedSet classify_relation(const Ontology& ont,
                                const ClassificationOptions& options = {});

// Condensation of the relation: equivalence groups, transitively reduced
// edges, unsatisfiable classes set apart.
struct SubsumptionDag {
    struct Group {
        std::vector<Iri> members; // sorted by rendered name
        std::vector<std::size_t> direct_supers; // ascending group indices
    };

    std::vector<Group> groups; // sorted by representative (members[0])
    std::vector<Iri> unsatisfiable;  // sorted by rendered name
    std::vector<SkippedClass> skipped; // sorted by rendered name

    std::optional<std::size_t> group_of(const Iri& cls) const;
    bool reachable(std::size_t from, std::size_t to) const;
};

SubsumptionDag reduce(const ClassifiedSet& set);
SubsumptionDag classify(const Ontology& ont,
                        const ClassificationOptions& options = {});

// Indented text tree, roots first.  Equivalent classes print on one line
// joined by " = "; a group already printed elsewhere prints with a
// trailing " ^" and is not expanded again.
std::string render_tree(const SubsumptionDag& dag);

// ----------------------------------------------------------------------
// classifier-vs-oracle comparison over every ordered pair of in-fragment
// classes.

struct CheckOptions {
    // Allow non-covering facets by padding the universe with synthetic
    // values; the result is then marked approximate.
    bool open_world_pad = false;
    bool skip_non_fragment = false;
};

struct Mismatch {
    Iri a; // candidate subsumer
    Iri b; // candidate subsumee
    bool classifier_says;
    bool oracle_says;
};

struct CheckReport {
    std::size_t classes = 0;
    std::size_t pairs = 0; // ordered, including reflexive
    std::vector<Mismatch> mismatches;
    bool approximate = false;
    std::vector<Iri> padded_properties;
    std::vector<SkippedClass> skipped;

    bool ok() const { return mismatches.empty(); }
};

// Error{OracleInapplicable} unless every facet property has a functional
// axiom, a disjointness axiom over its values (two or more values), and
// either a covering equivalence or open-world padding enabled.
CheckReport check_against_oracle(const Ontology& ont,
                                 const CheckOptions& options = {});

std::string render_report(const CheckReport& report);

} // namespace onto
