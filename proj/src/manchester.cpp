#include "onto/manchester.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace onto {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_named(const ClassExpr& e) {
    return std::holds_alternative<NamedClass>(e.node);
}

// Bare rendering; callers parenthesise composites where needed.
std::string render_bare(const ClassExpr& e);

std::string render_wrapped(const ClassExpr& e) {
    std::string s = render_bare(e);
    return is_named(e) ? s : "(" + s + ")";
}

std::string render_junction(const std::vector<ClassExprPtr>& operands,
                            const char* joiner) {
    // Sort by the bare text, then parenthesise composites.
    std::vector<std::pair<std::string, bool>> keyed; // (bare, composite)
    keyed.reserve(operands.size());
    for (const auto& op : operands)
        keyed.emplace_back(render_bare(*op), !is_named(*op));
    std::sort(keyed.begin(), keyed.end());
    std::string out;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i)
            out += joiner;
        out += keyed[i].second ? "(" + keyed[i].first + ")" : keyed[i].first;
    }
    return out;
}

std::string render_bare(const ClassExpr& e) {
    return std::visit(
        overloaded{
            [&](const NamedClass& n) { return n.iri.str(); },
            [&](const SomeRestriction& r) {
                return r.property.str() + " some " + render_wrapped(*r.filler);
            },
            [&](const OnlyRestriction& r) {
                return r.property.str() + " only " + render_wrapped(*r.filler);
            },
            [&](const Conjunction& c) {
                return render_junction(c.operands, " and ");
            },
            [&](const Disjunction& d) {
                return render_junction(d.operands, " or ");
            },
        },
        e.node);
}

std::string render_annotation_value(const AnnotationValue& v) {
    return std::visit(overloaded{
                          [](const std::string& s) {
                              std::string out = "\"";
                              for (char c : s) {
                                  if (c == '"' || c == '\\')
                                      out += '\\';
                                  out += c;
                              }
                              out += '"';
                              return out;
                          },
                          [](const Iri& iri) { return iri.str(); },
                      },
                      v);
}

struct ClassFrame {
    std::vector<std::string> annotations;
    std::vector<std::string> equivalent;
    std::vector<std::string> supers;

    bool empty() const {
        return annotations.empty() && equivalent.empty() && supers.empty();
    }
};

struct PropertyFrame {
    std::vector<std::string> annotations;
    std::vector<std::string> domains;
    std::vector<std::string> ranges;
    std::vector<std::string> characteristics;

    bool empty() const {
        return annotations.empty() && domains.empty() && ranges.empty() &&
               characteristics.empty();
    }
};

std::string section(const char* header, std::vector<std::string> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::string out = "    ";
    out += header;
    out += ": \n        ";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i)
            out += ",\n        ";
        out += members[i];
    }
    return out;
}

} // namespace

std::string render_expression(const ClassExpr& e) { return render_bare(e); }

std::string render_expression(const ClassExprPtr& e) {
    if (!e)
        throw Error(ErrorCode::InvalidExpression, "null expression");
    return render_bare(*e);
}

std::string render(const Ontology& ont, const RenderOptions& options) {
    std::map<std::string, ClassFrame> classes;
    std::map<std::string, PropertyFrame> properties;
    std::vector<std::string> disjoint_blocks;

    for (const auto& ax : ont.axioms()) {
        std::visit(
            overloaded{
                [&](const SubClassOf& x) {
                    if (const NamedClass* sub = as_named(x.sub))
                        classes[sub->iri.str()].supers.push_back(
                            render_bare(*x.super));
                    // GCIs have no frame; skip.
                },
                [&](const EquivalentClasses& x) {
                    // The alphabetically-first named operand hosts the
                    // frame; the rest become its members.
                    size_t host = x.operands.size();
                    std::string host_name;
                    for (size_t i = 0; i < x.operands.size(); ++i) {
                        if (const NamedClass* n = as_named(x.operands[i])) {
                            std::string name = n->iri.str();
                            if (host == x.operands.size() || name < host_name) {
                                host = i;
                                host_name = name;
                            }
                        }
                    }
                    if (host == x.operands.size())
                        return; // no named operand, nothing to hang it on
                    auto& frame = classes[host_name];
                    for (size_t i = 0; i < x.operands.size(); ++i)
                        if (i != host)
                            frame.equivalent.push_back(
                                render_bare(*x.operands[i]));
                },
                [&](const DisjointClasses& x) {
                    std::vector<std::string> names;
                    for (const Iri& iri : x.operands)
                        names.push_back(iri.str());
                    std::sort(names.begin(), names.end());
                    std::string line;
                    for (size_t i = 0; i < names.size(); ++i) {
                        if (i)
                            line += ",";
                        line += names[i];
                    }
                    disjoint_blocks.push_back(std::move(line));
                },
                [&](const ObjectPropertyDomain& x) {
                    properties[x.property.str()].domains.push_back(
                        render_bare(*x.domain));
                },
                [&](const ObjectPropertyRange& x) {
                    properties[x.property.str()].ranges.push_back(
                        render_bare(*x.range));
                },
                [&](const FunctionalObjectProperty& x) {
                    properties[x.property.str()].characteristics.push_back(
                        "Functional");
                },
                [&](const AnnotationAssertion& x) {
                    if (!options.include_annotations)
                        return;
                    std::string member = x.property.str() + " " +
                                         render_annotation_value(x.value);
                    auto kind = ont.kind_of(x.subject);
                    if (kind == EntityKind::Class)
                        classes[x.subject.str()].annotations.push_back(
                            std::move(member));
                    else if (kind == EntityKind::ObjectProperty)
                        properties[x.subject.str()].annotations.push_back(
                            std::move(member));
                    // Annotations on annotation properties have no frame.
                },
            },
            ax.node);
    }

    std::vector<std::string> blocks;

    for (auto& [name, frame] : classes) {
        if (frame.empty())
            continue;
        std::vector<std::string> sections;
        if (!frame.annotations.empty())
            sections.push_back(
                section("Annotations", std::move(frame.annotations)));
        if (!frame.equivalent.empty())
            sections.push_back(
                section("EquivalentTo", std::move(frame.equivalent)));
        if (!frame.supers.empty())
            sections.push_back(section("SubClassOf", std::move(frame.supers)));
        std::string block = "Class: " + name;
        for (size_t i = 0; i < sections.size(); ++i)
            block += (i ? "\n\n" : "\n") + sections[i];
        blocks.push_back(std::move(block));
    }

    if (options.include_property_frames) {
        for (auto& [name, frame] : properties) {
            if (frame.empty())
                continue;
            std::vector<std::string> sections;
            if (!frame.annotations.empty())
                sections.push_back(
                    section("Annotations", std::move(frame.annotations)));
            if (!frame.domains.empty())
                sections.push_back(section("Domain", std::move(frame.domains)));
            if (!frame.ranges.empty())
                sections.push_back(section("Range", std::move(frame.ranges)));
            if (!frame.characteristics.empty())
                sections.push_back(
                    section("Characteristics", std::move(frame.characteristics)));
            std::string block = "ObjectProperty: " + name;
            for (size_t i = 0; i < sections.size(); ++i)
                block += (i ? "\n\n" : "\n") + sections[i];
            blocks.push_back(std::move(block));
        }
    }

    std::sort(disjoint_blocks.begin(), disjoint_blocks.end());
    for (auto& line : disjoint_blocks)
        blocks.push_back("DisjointClasses: \n    " + line);

    if (blocks.empty())
        return "";
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            out += "\n\n";
        out += blocks[i];
    }
    out += "\n";
    return out;
}

} // namespace onto
