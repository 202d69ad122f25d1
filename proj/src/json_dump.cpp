#include "onto/json_dump.hpp"

#include <json.hpp>

namespace onto {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

const char* kind_string(EntityKind kind) {
    switch (kind) {
    case EntityKind::Class: return "class";
    case EntityKind::ObjectProperty: return "object_property";
    case EntityKind::AnnotationProperty: return "annotation_property";
    }
    return "?";
}

json expr_json(const ClassExprPtr& e) {
    return std::visit(
        overloaded{
            [](const NamedClass& n) {
                return json{{"kind", "named"}, {"iri", n.iri.str()}};
            },
            [](const SomeRestriction& r) {
                return json{{"kind", "some"},
                            {"property", r.property.str()},
                            {"filler", expr_json(r.filler)}};
            },
            [](const OnlyRestriction& r) {
                return json{{"kind", "only"},
                            {"property", r.property.str()},
                            {"filler", expr_json(r.filler)}};
            },
            [](const Conjunction& c) {
                json operands = json::array();
                for (const auto& op : c.operands)
                    operands.push_back(expr_json(op));
                return json{{"kind", "and"}, {"operands", operands}};
            },
            [](const Disjunction& d) {
                json operands = json::array();
                for (const auto& op : d.operands)
                    operands.push_back(expr_json(op));
                return json{{"kind", "or"}, {"operands", operands}};
            },
        },
        e->node);
}

json axiom_json(const Axiom& ax) {
    return std::visit(
        overloaded{
            [](const SubClassOf& x) {
                return json{{"type", "sub_class_of"},
                            {"sub", expr_json(x.sub)},
                            {"super", expr_json(x.super)}};
            },
            [](const EquivalentClasses& x) {
                json operands = json::array();
                for (const auto& op : x.operands)
                    operands.push_back(expr_json(op));
                return json{{"type", "equivalent_classes"},
                            {"operands", operands}};
            },
            [](const DisjointClasses& x) {
                json operands = json::array();
                for (const Iri& iri : x.operands)
                    operands.push_back(iri.str());
                return json{{"type", "disjoint_classes"},
                            {"operands", operands}};
            },
            [](const ObjectPropertyDomain& x) {
                return json{{"type", "object_property_domain"},
                            {"property", x.property.str()},
                            {"domain", expr_json(x.domain)}};
            },
            [](const ObjectPropertyRange& x) {
                return json{{"type", "object_property_range"},
                            {"property", x.property.str()},
                            {"range", expr_json(x.range)}};
            },
            [](const FunctionalObjectProperty& x) {
                return json{{"type", "functional_object_property"},
                            {"property", x.property.str()}};
            },
            [](const AnnotationAssertion& x) {
                json value = std::visit(
                    overloaded{
                        [](const std::string& s) {
                            return json{{"string", s}};
                        },
                        [](const Iri& iri) {
                            return json{{"iri", iri.str()}};
                        },
                    },
                    x.value);
                return json{{"type", "annotation_assertion"},
                            {"subject", x.subject.str()},
                            {"property", x.property.str()},
                            {"value", value}};
            },
        },
        ax.node);
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string dump_json(const Ontology& ont) {
    json j;
    j["ontology"] = ont.iri().str();
    json prefixes = json::object();
    for (const auto& [prefix, expansion] : ont.prefixes())
        prefixes[prefix] = expansion;
    j["prefixes"] = prefixes;
    json entities = json::array();
    for (const Entity& e : ont.signature())
        entities.push_back(
            json{{"kind", kind_string(e.kind)}, {"iri", e.iri.str()}});
    j["entities"] = entities;
    json axioms = json::array();
    for (const Axiom& ax : ont.axioms())
        axioms.push_back(axiom_json(ax));
    j["axioms"] = axioms;
    return finish(j);
}

std::string dump_json(const SubsumptionDag& dag) {
    json j;
    json groups = json::array();
    for (const auto& group : dag.groups) {
        json members = json::array();
        for (const Iri& m : group.members)
            members.push_back(m.str());
        json supers = json::array();
        for (std::size_t s : group.direct_supers)
            supers.push_back(s);
        groups.push_back(json{{"members", members}, {"direct_supers", supers}});
    }
    j["groups"] = groups;
    json unsat = json::array();
    for (const Iri& cls : dag.unsatisfiable)
        unsat.push_back(cls.str());
    j["unsatisfiable"] = unsat;
    json skipped = json::array();
    for (const SkippedClass& s : dag.skipped)
        skipped.push_back(json{{"class", s.cls.str()}, {"reason", s.reason}});
    j["skipped"] = skipped;
    return finish(j);
}

std::string dump_json(const CheckReport& report) {
    json j;
    j["classes"] = report.classes;
    j["pairs"] = report.pairs;
    json mismatches = json::array();
    for (const Mismatch& m : report.mismatches)
        mismatches.push_back(json{{"a", m.a.str()},
                                  {"b", m.b.str()},
                                  {"classifier", m.classifier_says},
                                  {"oracle", m.oracle_says}});
    j["mismatches"] = mismatches;
    j["approximate"] = report.approximate;
    json padded = json::array();
    for (const Iri& p : report.padded_properties)
        padded.push_back(p.str());
    j["padded_properties"] = padded;
    json skipped = json::array();
    for (const SkippedClass& s : report.skipped)
        skipped.push_back(json{{"class", s.cls.str()}, {"reason", s.reason}});
    j["skipped"] = skipped;
    return finish(j);
}

} // namespace onto
