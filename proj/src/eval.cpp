#include "onto/eval.hpp"

#include <map>
#include <optional>

#include "onto/patterns.hpp"

namespace onto {

namespace {

const char* kind_label(Form::Kind kind) {
    switch (kind) {
    case Form::Kind::List: return "list";
    case Form::Kind::Vector: return "vector";
    case Form::Kind::Symbol: return "symbol";
    case Form::Kind::Keyword: return "keyword";
    case Form::Kind::String: return "string";
    }
    return "?";
}

// Arguments following one keyword, e.g. the three symbols after :facet.
struct Section {
    const Form* keyword;
    std::vector<const Form*> args;
};

std::vector<Section> split_sections(const Form& form, size_t first_arg) {
    std::vector<Section> sections;
    for (size_t i = first_arg; i < form.items.size(); ++i) {
        const Form& item = form.items[i];
        if (item.kind == Form::Kind::Keyword) {
            sections.push_back(Section{&item, {}});
        } else if (sections.empty()) {
            throw Error(ErrorCode::ArityError, item.loc,
                        "expected a keyword before this " +
                            std::string(kind_label(item.kind)));
        } else {
            sections.back().args.push_back(&item);
        }
    }
    return sections;
}

const Form& single_arg(const Section& s) {
    if (s.args.size() != 1)
        throw Error(ErrorCode::ArityError, s.keyword->loc,
                    ":" + s.keyword->text + " takes exactly one argument");
    return *s.args.front();
}

const Form& symbol_arg(const Section& s) {
    const Form& arg = single_arg(s);
    if (arg.kind != Form::Kind::Symbol)
        throw Error(ErrorCode::ArityError, arg.loc,
                    ":" + s.keyword->text + " expects a symbol");
    return arg;
}

std::string string_arg(const Section& s) {
    const Form& arg = single_arg(s);
    if (arg.kind != Form::Kind::String)
        throw Error(ErrorCode::ArityError, arg.loc,
                    ":" + s.keyword->text + " expects a string");
    return arg.text;
}

bool bool_arg(const Section& s) {
    const Form& arg = single_arg(s);
    if (arg.is_symbol("true"))
        return true;
    if (arg.is_symbol("false"))
        return false;
    throw Error(ErrorCode::ArityError, arg.loc,
                ":" + s.keyword->text + " expects true or false");
}

void require_args(const Section& s) {
    if (s.args.empty())
        throw Error(ErrorCode::ArityError, s.keyword->loc,
                    ":" + s.keyword->text + " needs at least one argument");
}

class Evaluator {
public:
    EvalOutput run(std::span<const Form> forms) {
        if (forms.empty())
            throw Error(ErrorCode::MissingOntologyForm, SourceLoc{1, 1},
                        "empty program; expected (defontology ...)");
        for (const Form& form : forms) {
            size_t before = ont_ ? ont_->axioms().size() : 0;
            try {
                eval_top(form);
            } catch (const Error& e) {
                if (e.where())
                    throw;
                // Attach at least the form's position to layer errors.
                throw Error(e.code(), form.loc, e.what());
            }
            TraceEntry entry;
            entry.form = form;
            auto axs = ont_->axioms();
            entry.axioms.assign(axs.begin() + before, axs.end());
            trace_.push_back(std::move(entry));
        }
        return EvalOutput{std::move(*ont_), std::move(trace_)};
    }

private:
    std::optional<Ontology> ont_;
    std::map<std::string, Entity> bindings_;
    std::vector<TraceEntry> trace_;

    void bind(const std::string& name, const Entity& entity) {
        bindings_[name] = entity;
    }

    const Entity& lookup(const Form& sym, EntityKind kind, const char* role) {
        if (sym.kind != Form::Kind::Symbol)
            throw Error(ErrorCode::ArityError, sym.loc,
                        std::string("expected a symbol naming ") + role);
        auto it = bindings_.find(sym.text);
        if (it == bindings_.end())
            throw Error(ErrorCode::UnboundSymbol, sym.loc,
                        "unbound name '" + sym.text + "'");
        if (it->second.kind != kind)
            throw Error(ErrorCode::KindClash, sym.loc,
                        "'" + sym.text + "' names " +
                            entity_kind_name(it->second.kind) + " " +
                            it->second.iri.str() + " but " + role +
                            " is expected here");
        return it->second;
    }

    const Form& head_symbol(const Form& form) {
        if (form.kind != Form::Kind::List || form.items.empty())
            throw Error(ErrorCode::UnknownHead, form.loc,
                        "expected a (head ...) form");
        const Form& head = form.items.front();
        if (head.kind != Form::Kind::Symbol)
            throw Error(ErrorCode::UnknownHead, head.loc,
                        std::string(kind_label(head.kind)) +
                            " cannot appear in head position");
        return head;
    }

    const Form& name_arg(const Form& form) {
        if (form.items.size() < 2 ||
            form.items[1].kind != Form::Kind::Symbol)
            throw Error(ErrorCode::ArityError, form.loc,
                        form.items.front().text + " needs a name symbol");
        return form.items[1];
    }

    void eval_top(const Form& form) {
        const Form& head = head_symbol(form);
        if (!ont_) {
            if (!head.is_symbol("defontology"))
                throw Error(ErrorCode::MissingOntologyForm, form.loc,
                            "the first form must be (defontology ...)");
            eval_defontology(form);
            return;
        }
        if (head.is_symbol("defontology"))
            throw Error(ErrorCode::MissingOntologyForm, form.loc,
                        "defontology may appear only once, first");
        if (head.is_symbol("defclass"))
            eval_defclass(form);
        else if (head.is_symbol("defoproperty"))
            eval_defoproperty(form);
        else if (head.is_symbol("deftier"))
            eval_deftier(form, false);
        else if (head.is_symbol("defpartition"))
            eval_deftier(form, true);
        else if (head.is_symbol("as-facet"))
            eval_as_facet(form);
        else if (head.is_symbol("defgem"))
            eval_defgem(form);
        else
            throw Error(ErrorCode::UnknownHead, head.loc,
                        "unknown form '" + head.text + "'");
    }

    void eval_defontology(const Form& form) {
        const Form& name = name_arg(form);
        std::optional<std::string> prefix;
        for (const Section& s : split_sections(form, 2)) {
            if (s.keyword->text == "prefix")
                prefix = string_arg(s);
            else
                throw Error(ErrorCode::UnknownHead, s.keyword->loc,
                            "defontology does not understand :" +
                                s.keyword->text);
        }
        if (!prefix)
            throw Error(ErrorCode::ArityError, form.loc,
                        "defontology needs :prefix \"...\"");
        ont_.emplace(Iri::make(*prefix, name.text), *prefix);
    }

    // ------------------------------------------------------------------
    // Expressions.  A sub-form may evaluate to several expressions that
    // splice into the surrounding member list (some-only, facet).

    std::vector<ClassExprPtr> eval_expr(const Form& form) {
        switch (form.kind) {
        case Form::Kind::Symbol:
            return {named(lookup(form, EntityKind::Class, "a class").iri)};
        case Form::Kind::List:
            break;
        default:
            throw Error(ErrorCode::InvalidExpression, form.loc,
                        std::string("a ") + kind_label(form.kind) +
                            " is not a class expression");
        }

        const Form& head = head_symbol(form);
        auto rest = [&](size_t from) {
            std::vector<const Form*> out;
            for (size_t i = from; i < form.items.size(); ++i)
                out.push_back(&form.items[i]);
            return out;
        };

        if (head.is_symbol("some") || head.is_symbol("only")) {
            if (form.items.size() != 3)
                throw Error(ErrorCode::ArityError, form.loc,
                            "(" + head.text +
                                " property filler) takes two arguments");
            Iri prop = lookup(form.items[1], EntityKind::ObjectProperty,
                              "an object property")
                           .iri;
            ClassExprPtr filler = eval_single(form.items[2]);
            return {head.is_symbol("some") ? some(prop, filler)
                                           : only(prop, filler)};
        }

        if (head.is_symbol("and") || head.is_symbol("or")) {
            std::vector<ClassExprPtr> operands;
            for (const Form* arg : rest(1)) {
                auto exprs = eval_expr(*arg);
                operands.insert(operands.end(), exprs.begin(), exprs.end());
            }
            if (operands.empty())
                throw Error(ErrorCode::InvalidExpression, form.loc,
                            "(" + head.text + " ...) needs operands");
            if (operands.size() == 1)
                return {operands.front()};
            return {head.is_symbol("and") ? and_of(std::move(operands))
                                          : or_of(std::move(operands))};
        }

        if (head.is_symbol("some-only")) {
            if (form.items.size() < 3)
                throw Error(ErrorCode::ArityError, form.loc,
                            "(some-only property filler...) needs fillers");
            Iri prop = lookup(form.items[1], EntityKind::ObjectProperty,
                              "an object property")
                           .iri;
            std::vector<ClassExprPtr> fillers;
            for (const Form* arg : rest(2)) {
                auto exprs = eval_expr(*arg);
                fillers.insert(fillers.end(), exprs.begin(), exprs.end());
            }
            return some_only(prop, std::move(fillers));
        }

        if (head.is_symbol("facet")) {
            if (form.items.size() < 2)
                throw Error(ErrorCode::ArityError, form.loc,
                            "(facet class...) needs at least one class");
            std::vector<Iri> classes;
            for (const Form* arg : rest(1))
                classes.push_back(
                    lookup(*arg, EntityKind::Class, "a class").iri);
            return facet(FacetRegistry::from_ontology(*ont_), classes);
        }

        throw Error(ErrorCode::UnknownHead, head.loc,
                    "unknown operator '" + head.text + "'");
    }

    ClassExprPtr eval_single(const Form& form) {
        auto exprs = eval_expr(form);
        if (exprs.size() != 1)
            throw Error(ErrorCode::InvalidExpression, form.loc,
                        "a splicing form is not allowed here");
        return exprs.front();
    }

    // ------------------------------------------------------------------

    void eval_defclass(const Form& form) {
        const Form& name = name_arg(form);
        Entity cls = ont_->declare(EntityKind::Class, name.text);
        bind(name.text, cls);
        for (const Section& s : split_sections(form, 2)) {
            if (s.keyword->text == "super") {
                require_args(s);
                for (const Form* arg : s.args)
                    for (auto& e : eval_expr(*arg))
                        ont_->add_axiom(Axiom{SubClassOf{named(cls.iri), e}});
            } else if (s.keyword->text == "equivalent") {
                require_args(s);
                for (const Form* arg : s.args)
                    for (auto& e : eval_expr(*arg))
                        ont_->add_axiom(
                            Axiom{EquivalentClasses{{named(cls.iri), e}}});
            } else if (s.keyword->text == "comment") {
                ont_->add_axiom(Axiom{AnnotationAssertion{
                    cls.iri, vocab::comment(), string_arg(s)}});
            } else {
                throw Error(ErrorCode::UnknownHead, s.keyword->loc,
                            "defclass does not understand :" +
                                s.keyword->text);
            }
        }
    }

    void eval_defoproperty(const Form& form) {
        const Form& name = name_arg(form);
        Entity prop = ont_->declare(EntityKind::ObjectProperty, name.text);
        bind(name.text, prop);
        for (const Section& s : split_sections(form, 2)) {
            if (s.keyword->text == "domain")
                ont_->add_axiom(Axiom{ObjectPropertyDomain{
                    prop.iri, eval_single(single_arg(s))}});
            else if (s.keyword->text == "range")
                ont_->add_axiom(Axiom{ObjectPropertyRange{
                    prop.iri, eval_single(single_arg(s))}});
            else if (s.keyword->text == "functional") {
                if (bool_arg(s))
                    ont_->add_axiom(Axiom{FunctionalObjectProperty{prop.iri}});
            } else
                throw Error(ErrorCode::UnknownHead, s.keyword->loc,
                            "defoproperty does not understand :" +
                                s.keyword->text);
        }
    }

    void eval_deftier(const Form& form, bool partition) {
        const char* self = partition ? "defpartition" : "deftier";
        const Form& name = name_arg(form);
        if (form.items.size() < 3 ||
            form.items[2].kind != Form::Kind::Vector)
            throw Error(ErrorCode::ArityError, form.loc,
                        std::string(self) + " needs a [value...] vector");
        const Form& values = form.items[2];
        if (values.items.empty())
            throw Error(ErrorCode::ArityError, values.loc,
                        std::string(self) + " needs at least one value");

        TierSpec spec;
        spec.name = name.text;
        for (const Form& v : values.items) {
            if (v.kind != Form::Kind::Symbol)
                throw Error(ErrorCode::ArityError, v.loc,
                            "tier values must be symbols");
            spec.values.push_back(v.text);
        }

        for (const Section& s : split_sections(form, 3)) {
            const std::string& kw = s.keyword->text;
            if (kw == "domain")
                spec.domain =
                    lookup(symbol_arg(s), EntityKind::Class, "a class").iri;
            else if (kw == "super")
                spec.super =
                    lookup(symbol_arg(s), EntityKind::Class, "a class").iri;
            else if (kw == "suffix")
                spec.suffix = bool_arg(s);
            else if (kw == "property")
                spec.make_property = bool_arg(s);
            else if (kw == "property-name")
                spec.property_name = symbol_arg(s).text;
            else if (!partition && kw == "functional")
                spec.functional = bool_arg(s);
            else if (!partition && kw == "disjoint")
                spec.disjoint = bool_arg(s);
            else if (!partition && kw == "cover")
                spec.cover = bool_arg(s);
            else if (partition &&
                     (kw == "functional" || kw == "disjoint" || kw == "cover"))
                throw Error(ErrorCode::ArityError, s.keyword->loc,
                            "defpartition always has :" + kw +
                                "; the flag cannot be set");
            else
                throw Error(ErrorCode::UnknownHead, s.keyword->loc,
                            std::string(self) + " does not understand :" + kw);
        }

        TierResult result = partition ? defpartition(*ont_, spec)
                                      : deftier(*ont_, spec);

        bind(spec.name, Entity{EntityKind::Class, result.tier_class});
        // Values bind under their source names even when :suffix renamed
        // the classes themselves.
        for (size_t i = 0; i < spec.values.size(); ++i)
            bind(spec.values[i],
                 Entity{EntityKind::Class, result.value_classes[i]});
        if (result.property)
            bind(result.property->fragment,
                 Entity{EntityKind::ObjectProperty, *result.property});
    }

    void eval_as_facet(const Form& form) {
        if (form.items.size() < 3)
            throw Error(ErrorCode::ArityError, form.loc,
                        "(as-facet property class...) needs a property and "
                        "at least one class");
        Iri prop = lookup(form.items[1], EntityKind::ObjectProperty,
                          "an object property")
                       .iri;
        std::vector<Iri> classes;
        for (size_t i = 2; i < form.items.size(); ++i)
            classes.push_back(
                lookup(form.items[i], EntityKind::Class, "a class").iri);
        as_facet(*ont_, prop, classes);
    }

    void eval_defgem(const Form& form) {
        const Form& name = name_arg(form);
        GemSpec spec;
        spec.name = name.text;
        for (const Section& s : split_sections(form, 2)) {
            const std::string& kw = s.keyword->text;
            if (kw == "facet") {
                require_args(s);
                for (const Form* arg : s.args)
                    spec.facets.push_back(
                        lookup(*arg, EntityKind::Class, "a class").iri);
            } else if (kw == "comment") {
                spec.comment = string_arg(s);
            } else if (kw == "super") {
                require_args(s);
                for (const Form* arg : s.args)
                    for (auto& e : eval_expr(*arg))
                        spec.extra_supers.push_back(e);
            } else if (kw == "defined") {
                spec.defined = bool_arg(s);
            } else {
                throw Error(ErrorCode::UnknownHead, s.keyword->loc,
                            "defgem does not understand :" + kw);
            }
        }
        Iri cls = defgem(*ont_, spec);
        bind(spec.name, Entity{EntityKind::Class, cls});
    }
};

} // namespace

EvalOutput expand_trace(std::span<const Form> forms) {
    return Evaluator().run(forms);
}

EvalOutput expand_trace(std::string_view text) {
    auto forms = parse(text);
    return expand_trace(forms);
}

Ontology eval_program(std::span<const Form> forms) {
    return expand_trace(forms).ontology;
}

Ontology eval_program(std::string_view text) {
    return expand_trace(text).ontology;
}

} // namespace onto
