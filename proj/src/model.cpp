#include "onto/model.hpp"

#include <algorithm>
#include <sstream>

namespace onto {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

void escape_into(std::ostringstream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
        if (c == '"' || c == '\\')
            out << '\\';
        out << c;
    }
    out << '"';
}

} // namespace

const char* entity_kind_name(EntityKind kind) {
    switch (kind) {
    case EntityKind::Class: return "class";
    case EntityKind::ObjectProperty: return "object property";
    case EntityKind::AnnotationProperty: return "annotation property";
    }
    return "?";
}

const char* pattern_kind_name(PatternKind kind) {
    switch (kind) {
    case PatternKind::Tier: return "tier";
    case PatternKind::Partition: return "partition";
    case PatternKind::Facet: return "facet";
    case PatternKind::Gem: return "gem";
    case PatternKind::Closure: return "closure";
    }
    return "?";
}

namespace vocab {
Iri pattern() { return Iri{prefix, "pattern"}; }
Iri facet_property() { return Iri{prefix, "facetProperty"}; }
Iri label() { return Iri{prefix, "label"}; }
Iri comment() { return Iri{prefix, "comment"}; }
} // namespace vocab

// ----------------------------------------------------------------------
// Expressions.

ClassExprPtr named(Iri iri) {
    return std::make_shared<const ClassExpr>(ClassExpr{NamedClass{std::move(iri)}});
}

ClassExprPtr some(Iri property, ClassExprPtr filler) {
    if (!filler)
        throw Error(ErrorCode::InvalidExpression, "'some' needs a filler");
    return std::make_shared<const ClassExpr>(
        ClassExpr{SomeRestriction{std::move(property), std::move(filler)}});
}

ClassExprPtr only(Iri property, ClassExprPtr filler) {
    if (!filler)
        throw Error(ErrorCode::InvalidExpression, "'only' needs a filler");
    return std::make_shared<const ClassExpr>(
        ClassExpr{OnlyRestriction{std::move(property), std::move(filler)}});
}

namespace {

void check_operands(const std::vector<ClassExprPtr>& operands,
                    const char* what) {
    if (operands.size() < 2)
        throw Error(ErrorCode::InvalidExpression,
                    std::string(what) + " needs at least two operands, got " +
                        std::to_string(operands.size()));
    for (const auto& op : operands)
        if (!op)
            throw Error(ErrorCode::InvalidExpression,
                        std::string(what) + " has a null operand");
}

} // namespace

ClassExprPtr and_of(std::vector<ClassExprPtr> operands) {
    check_operands(operands, "'and'");
    return std::make_shared<const ClassExpr>(
        ClassExpr{Conjunction{std::move(operands)}});
}

ClassExprPtr or_of(std::vector<ClassExprPtr> operands) {
    check_operands(operands, "'or'");
    return std::make_shared<const ClassExpr>(
        ClassExpr{Disjunction{std::move(operands)}});
}

const NamedClass* as_named(const ClassExprPtr& e) {
    if (!e)
        return nullptr;
    return std::get_if<NamedClass>(&e->node);
}

namespace {

void write_expr(std::ostringstream& out, const ClassExpr& e) {
    std::visit(
        overloaded{
            [&](const NamedClass& n) { out << n.iri.str(); },
            [&](const SomeRestriction& r) {
                out << "(some " << r.property.str() << " ";
                write_expr(out, *r.filler);
                out << ")";
            },
            [&](const OnlyRestriction& r) {
                out << "(only " << r.property.str() << " ";
                write_expr(out, *r.filler);
                out << ")";
            },
            [&](const Conjunction& c) {
                out << "(and";
                for (const auto& op : c.operands) {
                    out << " ";
                    write_expr(out, *op);
                }
                out << ")";
            },
            [&](const Disjunction& d) {
                out << "(or";
                for (const auto& op : d.operands) {
                    out << " ";
                    write_expr(out, *op);
                }
                out << ")";
            },
        },
        e.node);
}

} // namespace

std::string debug_string(const ClassExpr& e) {
    std::ostringstream out;
    write_expr(out, e);
    return out.str();
}

std::string debug_string(const ClassExprPtr& e) {
    return e ? debug_string(*e) : std::string("<null>");
}

bool equal(const ClassExpr& a, const ClassExpr& b) {
    return debug_string(a) == debug_string(b);
}

bool equal(const ClassExprPtr& a, const ClassExprPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return equal(*a, *b);
}

// ----------------------------------------------------------------------
// Axioms.

std::string debug_string(const Axiom& ax) {
    std::ostringstream out;
    std::visit(
        overloaded{
            [&](const SubClassOf& x) {
                out << "(sub " << debug_string(x.sub) << " "
                    << debug_string(x.super) << ")";
            },
            [&](const EquivalentClasses& x) {
                out << "(equivalent";
                for (const auto& op : x.operands)
                    out << " " << debug_string(op);
                out << ")";
            },
            [&](const DisjointClasses& x) {
                out << "(disjoint";
                for (const auto& op : x.operands)
                    out << " " << op.str();
                out << ")";
            },
            [&](const ObjectPropertyDomain& x) {
                out << "(domain " << x.property.str() << " "
                    << debug_string(x.domain) << ")";
            },
            [&](const ObjectPropertyRange& x) {
                out << "(range " << x.property.str() << " "
                    << debug_string(x.range) << ")";
            },
            [&](const FunctionalObjectProperty& x) {
                out << "(functional " << x.property.str() << ")";
            },
            [&](const AnnotationAssertion& x) {
                out << "(annotation " << x.subject.str() << " "
                    << x.property.str() << " ";
                std::visit(overloaded{
                               [&](const std::string& s) { escape_into(out, s); },
                               [&](const Iri& iri) { out << iri.str(); },
                           },
                           x.value);
                out << ")";
            },
        },
        ax.node);
    return out.str();
}

bool equal(const Axiom& a, const Axiom& b) {
    return debug_string(a) == debug_string(b);
}

namespace {

void collect_iris(const ClassExprPtr& e, std::vector<Iri>& out) {
    if (!e)
        return;
    std::visit(overloaded{
                   [&](const NamedClass& n) { out.push_back(n.iri); },
                   [&](const SomeRestriction& r) {
                       out.push_back(r.property);
                       collect_iris(r.filler, out);
                   },
                   [&](const OnlyRestriction& r) {
                       out.push_back(r.property);
                       collect_iris(r.filler, out);
                   },
                   [&](const Conjunction& c) {
                       for (const auto& op : c.operands)
                           collect_iris(op, out);
                   },
                   [&](const Disjunction& d) {
                       for (const auto& op : d.operands)
                           collect_iris(op, out);
                   },
               },
               e->node);
}

} // namespace

std::vector<Iri> mentioned_iris(const Axiom& ax) {
    std::vector<Iri> out;
    std::visit(
        overloaded{
            [&](const SubClassOf& x) {
                collect_iris(x.sub, out);
                collect_iris(x.super, out);
            },
            [&](const EquivalentClasses& x) {
                for (const auto& op : x.operands)
                    collect_iris(op, out);
            },
            [&](const DisjointClasses& x) {
                out.insert(out.end(), x.operands.begin(), x.operands.end());
            },
            [&](const ObjectPropertyDomain& x) {
                out.push_back(x.property);
                collect_iris(x.domain, out);
            },
            [&](const ObjectPropertyRange& x) {
                out.push_back(x.property);
                collect_iris(x.range, out);
            },
            [&](const FunctionalObjectProperty& x) {
                out.push_back(x.property);
            },
            [&](const AnnotationAssertion& x) {
                out.push_back(x.subject);
                out.push_back(x.property);
                if (const Iri* iri = std::get_if<Iri>(&x.value))
                    out.push_back(*iri);
            },
        },
        ax.node);
    return out;
}

// ----------------------------------------------------------------------
// Ontology.

Ontology::Ontology(Iri iri, std::string default_prefix)
    : iri_(std::move(iri)), default_prefix_(std::move(default_prefix)) {
    if (!valid_name_part(default_prefix_))
        throw Error(ErrorCode::MalformedIri,
                    "malformed prefix '" + default_prefix_ + "'");
    register_prefix(default_prefix_, "urn:onto:" + default_prefix_ + "#");
    register_prefix(vocab::prefix, "urn:onto:internal#");
    declare(EntityKind::AnnotationProperty, vocab::pattern());
    declare(EntityKind::AnnotationProperty, vocab::facet_property());
    declare(EntityKind::AnnotationProperty, vocab::label());
    declare(EntityKind::AnnotationProperty, vocab::comment());
}

void Ontology::register_prefix(std::string prefix, std::string expansion) {
    if (!valid_name_part(prefix))
        throw Error(ErrorCode::MalformedIri,
                    "malformed prefix '" + prefix + "'");
    prefixes_[std::move(prefix)] = std::move(expansion);
}

Iri Ontology::make_iri(std::string_view fragment) const {
    return Iri::make(default_prefix_, fragment);
}

Entity Ontology::declare(EntityKind kind, std::string_view fragment) {
    return declare(kind, make_iri(fragment));
}

Entity Ontology::declare(EntityKind kind, Iri iri) {
    if (!valid_name_part(iri.prefix) || !valid_name_part(iri.fragment))
        throw Error(ErrorCode::MalformedIri,
                    "malformed name '" + iri.str() + "'");
    if (!prefixes_.count(iri.prefix))
        throw Error(ErrorCode::MalformedIri,
                    "unregistered prefix '" + iri.prefix + "'");
    auto it = kinds_.find(iri);
    if (it != kinds_.end()) {
        if (it->second != kind)
            throw Error(ErrorCode::KindClash,
                        iri.str() + " is already declared as " +
                            entity_kind_name(it->second) +
                            ", cannot redeclare as " + entity_kind_name(kind));
        return Entity{kind, std::move(iri)};
    }
    kinds_.emplace(iri, kind);
    entities_.push_back(Entity{kind, iri});
    return Entity{kind, std::move(iri)};
}

bool Ontology::is_declared(const Iri& iri) const {
    return kinds_.count(iri) > 0;
}

std::optional<EntityKind> Ontology::kind_of(const Iri& iri) const {
    auto it = kinds_.find(iri);
    if (it == kinds_.end())
        return std::nullopt;
    return it->second;
}

void Ontology::require_kind(const Iri& iri, EntityKind kind,
                            const char* role) const {
    auto it = kinds_.find(iri);
    if (it == kinds_.end())
        throw Error(ErrorCode::UndeclaredEntity,
                    "undeclared entity " + iri.str());
    if (it->second != kind)
        throw Error(ErrorCode::KindClash,
                    iri.str() + " used as " + role + " but declared as " +
                        entity_kind_name(it->second));
}

namespace {

void check_expr_shape(const ClassExprPtr& e) {
    if (!e)
        throw Error(ErrorCode::InvalidAxiom, "axiom has a null expression");
    std::visit(overloaded{
                   [&](const NamedClass&) {},
                   [&](const SomeRestriction& r) { check_expr_shape(r.filler); },
                   [&](const OnlyRestriction& r) { check_expr_shape(r.filler); },
                   [&](const Conjunction& c) {
                       check_operands(c.operands, "'and'");
                       for (const auto& op : c.operands)
                           check_expr_shape(op);
                   },
                   [&](const Disjunction& d) {
                       check_operands(d.operands, "'or'");
                       for (const auto& op : d.operands)
                           check_expr_shape(op);
                   },
               },
               e->node);
}

} // namespace

void Ontology::check_axiom(const Axiom& ax) const {
    // Shape first, kinds second.
    const auto check_class_expr = [&](const ClassExprPtr& e, auto&& self) -> void {
        std::visit(overloaded{
                       [&](const NamedClass& n) {
                           require_kind(n.iri, EntityKind::Class, "a class");
                       },
                       [&](const SomeRestriction& r) {
                           require_kind(r.property, EntityKind::ObjectProperty,
                                        "an object property");
                           self(r.filler, self);
                       },
                       [&](const OnlyRestriction& r) {
                           require_kind(r.property, EntityKind::ObjectProperty,
                                        "an object property");
                           self(r.filler, self);
                       },
                       [&](const Conjunction& c) {
                           for (const auto& op : c.operands)
                               self(op, self);
                       },
                       [&](const Disjunction& d) {
                           for (const auto& op : d.operands)
                               self(op, self);
                       },
                   },
                   e->node);
    };

    std::visit(
        overloaded{
            [&](const SubClassOf& x) {
                check_expr_shape(x.sub);
                check_expr_shape(x.super);
                check_class_expr(x.sub, check_class_expr);
                check_class_expr(x.super, check_class_expr);
            },
            [&](const EquivalentClasses& x) {
                if (x.operands.size() < 2)
                    throw Error(ErrorCode::InvalidAxiom,
                                "EquivalentClasses needs at least two operands");
                for (const auto& op : x.operands) {
                    check_expr_shape(op);
                    check_class_expr(op, check_class_expr);
                }
            },
            [&](const DisjointClasses& x) {
                if (x.operands.size() < 2)
                    throw Error(ErrorCode::InvalidAxiom,
                                "DisjointClasses needs at least two operands");
                for (size_t i = 0; i < x.operands.size(); ++i)
                    for (size_t j = i + 1; j < x.operands.size(); ++j)
                        if (x.operands[i] == x.operands[j])
                            throw Error(ErrorCode::InvalidAxiom,
                                        "DisjointClasses repeats " +
                                            x.operands[i].str());
                for (const auto& op : x.operands)
                    require_kind(op, EntityKind::Class, "a class");
            },
            [&](const ObjectPropertyDomain& x) {
                require_kind(x.property, EntityKind::ObjectProperty,
                             "an object property");
                check_expr_shape(x.domain);
                check_class_expr(x.domain, check_class_expr);
            },
            [&](const ObjectPropertyRange& x) {
                require_kind(x.property, EntityKind::ObjectProperty,
                             "an object property");
                check_expr_shape(x.range);
                check_class_expr(x.range, check_class_expr);
            },
            [&](const FunctionalObjectProperty& x) {
                require_kind(x.property, EntityKind::ObjectProperty,
                             "an object property");
            },
            [&](const AnnotationAssertion& x) {
                if (!is_declared(x.subject))
                    throw Error(ErrorCode::UndeclaredEntity,
                                "undeclared entity " + x.subject.str());
                require_kind(x.property, EntityKind::AnnotationProperty,
                             "an annotation property");
                if (const Iri* iri = std::get_if<Iri>(&x.value))
                    if (!is_declared(*iri))
                        throw Error(ErrorCode::UndeclaredEntity,
                                    "undeclared entity " + iri->str());
            },
        },
        ax.node);
}

void Ontology::add_axiom(Axiom ax) {
    check_axiom(ax);
    std::string key = debug_string(ax);
    if (axiom_keys_.count(key))
        return;
    axiom_keys_.insert(std::move(key));
    axioms_.push_back(std::move(ax));
}

void Ontology::annotate_pattern(const Iri& subject, PatternKind kind) {
    add_axiom(Axiom{AnnotationAssertion{
        subject, vocab::pattern(), std::string(pattern_kind_name(kind))}});
}

std::vector<Axiom> Ontology::axioms_about(const Iri& iri) const {
    if (!is_declared(iri))
        throw Error(ErrorCode::UndeclaredEntity,
                    "undeclared entity " + iri.str());
    std::vector<Axiom> out;
    for (const auto& ax : axioms_) {
        auto iris = mentioned_iris(ax);
        if (std::find(iris.begin(), iris.end(), iri) != iris.end())
            out.push_back(ax);
    }
    return out;
}

Ontology new_ontology(std::string_view iri, std::string_view default_prefix) {
    return Ontology(Iri::parse(iri), std::string(default_prefix));
}

std::optional<std::string> pattern_tag(const Ontology& ont, const Iri& iri) {
    for (const auto& ax : ont.axioms()) {
        const auto* ann = std::get_if<AnnotationAssertion>(&ax.node);
        if (!ann || ann->subject != iri || ann->property != vocab::pattern())
            continue;
        if (const std::string* s = std::get_if<std::string>(&ann->value))
            return *s;
    }
    return std::nullopt;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedIri: return "MalformedIri";
    case ErrorCode::KindClash: return "KindClash";
    case ErrorCode::UndeclaredEntity: return "UndeclaredEntity";
    case ErrorCode::DuplicateValueName: return "DuplicateValueName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidExpression: return "InvalidExpression";
    case ErrorCode::InvalidAxiom: return "InvalidAxiom";
    case ErrorCode::EmptyFillers: return "EmptyFillers";
    case ErrorCode::FacetConflict: return "FacetConflict";
    case ErrorCode::UnregisteredFacetClass: return "UnregisteredFacetClass";
    case ErrorCode::DuplicateFacetProperty: return "DuplicateFacetProperty";
    case ErrorCode::UnbalancedDelimiter: return "UnbalancedDelimiter";
    case ErrorCode::UnterminatedString: return "UnterminatedString";
    case ErrorCode::IllegalToken: return "IllegalToken";
    case ErrorCode::MissingOntologyForm: return "MissingOntologyForm";
    case ErrorCode::UnknownHead: return "UnknownHead";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadRow: return "BadRow";
    case ErrorCode::BadEnumValue: return "BadEnumValue";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::FragmentViolation: return "FragmentViolation";
    case ErrorCode::OracleInapplicable: return "OracleInapplicable";
    case ErrorCode::Io: return "Io";
    }
    return "?";
}

std::string format_diagnostic(const std::string& file, const Error& err) {
    std::ostringstream out;
    out << file;
    if (err.where() && err.where()->known())
        out << ":" << err.where()->line << ":" << err.where()->column;
    out << ": " << err.what();
    return out.str();
}

} // namespace onto
