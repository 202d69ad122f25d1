#include "onto/classifier.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace onto {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_tier_machinery(const Ontology& ont, const Iri& cls) {
    auto tag = pattern_tag(ont, cls);
    return tag == "tier" || tag == "partition";
}

} // namespace

// ----------------------------------------------------------------------
// AssignmentUniverse.

AssignmentUniverse AssignmentUniverse::build(const Ontology& ont,
                                             const FacetRegistry& registry) {
    return build(ont, registry, Options{});
}

AssignmentUniverse AssignmentUniverse::build(const Ontology& ont,
                                             const FacetRegistry& registry,
                                             const Options& options) {
    AssignmentUniverse u;

    u.properties_ = registry.properties();
    std::sort(u.properties_.begin(), u.properties_.end(),
              [](const Iri& a, const Iri& b) { return a.str() < b.str(); });
    for (const Iri& p : u.properties_) {
        u.values_[p] = registry.values_of(p);
        for (const Iri& v : u.values_[p])
            u.value_property_.emplace(v, p);
    }

    for (const auto& ax : ont.axioms())
        if (const auto* dom = std::get_if<ObjectPropertyDomain>(&ax.node))
            if (const NamedClass* n = as_named(dom->domain))
                u.domains_.emplace(dom->property, n->iri);

    if (options.pad_non_covering) {
        for (const Iri& p : u.properties_) {
            if (facet_covering(ont, p, u.values_[p]))
                continue;
            std::string base = p.fragment;
            for (const auto& ax : ont.axioms())
                if (const auto* rng = std::get_if<ObjectPropertyRange>(&ax.node))
                    if (rng->property == p)
                        if (const NamedClass* n = as_named(rng->range)) {
                            base = n->iri.fragment;
                            break;
                        }
            std::string fragment = "Other" + base;
            while (ont.is_declared(Iri{p.prefix, fragment}) ||
                   u.value_property_.count(Iri{p.prefix, fragment}))
                fragment += "_";
            Iri synthetic{p.prefix, fragment};
            u.values_[p].push_back(synthetic);
            u.value_property_.emplace(synthetic, p);
            u.padded_.push_back(p);
        }
    }

    for (const Entity& e : ont.signature())
        if (e.kind == EntityKind::Class)
            u.classes_.push_back(e.iri);
    std::sort(u.classes_.begin(), u.classes_.end(),
              [](const Iri& a, const Iri& b) { return a.str() < b.str(); });

    // Reachability over asserted named-to-named axioms.
    std::map<Iri, std::vector<Iri>> edges;
    for (const auto& ax : ont.axioms()) {
        if (const auto* sub = std::get_if<SubClassOf>(&ax.node)) {
            const NamedClass* lhs = as_named(sub->sub);
            const NamedClass* rhs = as_named(sub->super);
            if (lhs && rhs)
                edges[lhs->iri].push_back(rhs->iri);
        } else if (const auto* eq = std::get_if<EquivalentClasses>(&ax.node)) {
            std::vector<Iri> names;
            for (const auto& op : eq->operands)
                if (const NamedClass* n = as_named(op))
                    names.push_back(n->iri);
            for (const Iri& a : names)
                for (const Iri& b : names)
                    if (a != b)
                        edges[a].push_back(b);
        }
    }
    for (const Iri& cls : u.classes_) {
        std::set<Iri>& reach = u.named_supers_[cls];
        std::vector<Iri> queue{cls};
        reach.insert(cls);
        while (!queue.empty()) {
            Iri n = queue.back();
            queue.pop_back();
            auto it = edges.find(n);
            if (it == edges.end())
                continue;
            for (const Iri& next : it->second)
                if (reach.insert(next).second)
                    queue.push_back(next);
        }
    }

    return u;
}

std::span<const Iri> AssignmentUniverse::values(const Iri& property) const {
    auto it = values_.find(property);
    if (it == values_.end())
        throw Error(ErrorCode::UniverseMismatch,
                    property.str() + " is not a facet property");
    return it->second;
}

bool AssignmentUniverse::has_property(const Iri& property) const {
    return values_.count(property) > 0;
}

std::optional<Iri> AssignmentUniverse::property_of_value(const Iri& cls) const {
    auto it = value_property_.find(cls);
    if (it == value_property_.end())
        return std::nullopt;
    return it->second;
}

bool AssignmentUniverse::is_value(const Iri& cls) const {
    return value_property_.count(cls) > 0;
}

std::size_t AssignmentUniverse::assignment_count() const {
    std::size_t count = 1;
    for (const Iri& p : properties_)
        count *= values_.at(p).size();
    return count;
}

bool AssignmentUniverse::named_reaches(const Iri& sub, const Iri& super) const {
    if (sub == super)
        return true;
    auto it = named_supers_.find(sub);
    return it != named_supers_.end() && it->second.count(super) > 0;
}

const std::set<Iri>& AssignmentUniverse::named_supers(const Iri& cls) const {
    auto it = named_supers_.find(cls);
    return it == named_supers_.end() ? empty_ : it->second;
}

std::optional<Iri> AssignmentUniverse::domain_of(const Iri& property) const {
    auto it = domains_.find(property);
    if (it == domains_.end())
        return std::nullopt;
    return it->second;
}

bool facet_covering(const Ontology& ont, const Iri& property,
                    std::span<const Iri> values) {
    std::optional<Iri> range;
    for (const auto& ax : ont.axioms())
        if (const auto* rng = std::get_if<ObjectPropertyRange>(&ax.node))
            if (rng->property == property)
                if (const NamedClass* n = as_named(rng->range)) {
                    range = n->iri;
                    break;
                }
    if (!range)
        return false;

    std::set<Iri> wanted(values.begin(), values.end());
    for (const auto& ax : ont.axioms()) {
        const auto* eq = std::get_if<EquivalentClasses>(&ax.node);
        if (!eq)
            continue;
        bool has_range = false;
        for (const auto& op : eq->operands)
            if (const NamedClass* n = as_named(op))
                if (n->iri == *range)
                    has_range = true;
        if (!has_range)
            continue;
        for (const auto& op : eq->operands) {
            if (const NamedClass* n = as_named(op)) {
                if (wanted.size() == 1 && n->iri != *range &&
                    wanted.count(n->iri))
                    return true;
            } else if (const auto* dis = std::get_if<Disjunction>(&op->node)) {
                std::set<Iri> listed;
                bool all_named = true;
                for (const auto& d : dis->operands) {
                    if (const NamedClass* n = as_named(d))
                        listed.insert(n->iri);
                    else
                        all_named = false;
                }
                if (all_named && listed == wanted)
                    return true;
            }
        }
    }
    return false;
}

// ----------------------------------------------------------------------
// constraint_of.

namespace {

void flatten_conjuncts(const ClassExprPtr& e,
                       std::vector<ClassExprPtr>& out) {
    if (const auto* con = std::get_if<Conjunction>(&e->node)) {
        for (const auto& op : con->operands)
            flatten_conjuncts(op, out);
    } else {
        out.push_back(e);
    }
}

} // namespace

ConstraintResult constraint_of(const Ontology& ont,
                               const AssignmentUniverse& universe,
                               const Iri& cls) {
    auto kind = ont.kind_of(cls);
    if (!kind)
        throw Error(ErrorCode::UndeclaredEntity,
                    "undeclared entity " + cls.str());
    if (*kind != EntityKind::Class)
        throw Error(ErrorCode::KindClash, cls.str() + " is not a class");

    FacetConstraint c;
    std::set<Iri> seen{cls};
    std::vector<Iri> queue{cls};
    std::optional<NotInFragment> bad;

    auto offender = [&](const Iri& via, const std::string& what) {
        std::string reason = what;
        if (via != cls)
            reason += " (inherited via " + via.str() + ")";
        bad = NotInFragment{cls, reason};
    };

    auto take_named = [&](const Iri& m, const Iri& via) {
        if (universe.is_value(m)) {
            offender(via, "names the facet value " + m.str() +
                              " directly; values may only appear as "
                              "existential fillers");
            return;
        }
        c.anchors.insert(m);
        // Tier machinery is opaque: anchor it, do not absorb its axioms.
        if (is_tier_machinery(ont, m))
            return;
        if (seen.insert(m).second)
            queue.push_back(m);
    };

    auto take_conjunct = [&](const ClassExprPtr& leaf, const Iri& via) {
        std::visit(
            overloaded{
                [&](const NamedClass& n) { take_named(n.iri, via); },
                [&](const SomeRestriction& r) {
                    if (!universe.has_property(r.property)) {
                        offender(via, "existential through " +
                                          r.property.str() +
                                          ", which is not a facet property");
                        return;
                    }
                    const NamedClass* f = as_named(r.filler);
                    if (!f || !universe.is_value(f->iri)) {
                        offender(via, "existential filler " +
                                          debug_string(r.filler) +
                                          " is not a facet value");
                        return;
                    }
                    auto [it, fresh] = c.allowed.try_emplace(
                        r.property,
                        std::set<Iri>(universe.values(r.property).begin(),
                                      universe.values(r.property).end()));
                    std::set<Iri>& allowed = it->second;
                    bool keep = allowed.count(f->iri) > 0;
                    allowed.clear();
                    if (keep)
                        allowed.insert(f->iri);
                    if (auto dom = universe.domain_of(r.property))
                        take_named(*dom, via);
                },
                [&](const OnlyRestriction&) {
                    offender(via, "universal restrictions are outside the "
                                  "classifiable fragment");
                },
                [&](const Disjunction&) {
                    offender(via, "disjunctions are outside the classifiable "
                                  "fragment");
                },
                [&](const Conjunction&) {
                    // flatten_conjuncts already removed these
                },
            },
            leaf->node);
    };

    while (!queue.empty() && !bad) {
        Iri n = queue.back();
        queue.pop_back();
        for (const auto& ax : ont.axioms()) {
            if (bad)
                break;
            if (const auto* sub = std::get_if<SubClassOf>(&ax.node)) {
                const NamedClass* lhs = as_named(sub->sub);
                if (!lhs || lhs->iri != n)
                    continue;
                std::vector<ClassExprPtr> leaves;
                flatten_conjuncts(sub->super, leaves);
                for (const auto& leaf : leaves) {
                    take_conjunct(leaf, n);
                    if (bad)
                        break;
                }
            } else if (const auto* eq =
                           std::get_if<EquivalentClasses>(&ax.node)) {
                bool mentions = false;
                for (const auto& op : eq->operands)
                    if (const NamedClass* named_op = as_named(op))
                        if (named_op->iri == n)
                            mentions = true;
                if (!mentions)
                    continue;
                if (n == cls)
                    c.defined = true;
                for (const auto& op : eq->operands) {
                    if (const NamedClass* named_op = as_named(op))
                        if (named_op->iri == n)
                            continue;
                    std::vector<ClassExprPtr> leaves;
                    flatten_conjuncts(op, leaves);
                    for (const auto& leaf : leaves) {
                        take_conjunct(leaf, n);
                        if (bad)
                            break;
                    }
                    if (bad)
                        break;
                }
            }
        }
    }

    if (bad)
        return *bad;
    return c;
}

// ----------------------------------------------------------------------
// subsumes.

namespace {

void validate_constraint(const AssignmentUniverse& u,
                         const FacetConstraint& c) {
    for (const auto& [prop, values] : c.allowed) {
        if (!u.has_property(prop))
            throw Error(ErrorCode::UniverseMismatch,
                        "constraint mentions " + prop.str() +
                            ", which is not in the universe");
        auto table = u.values(prop);
        for (const Iri& v : values)
            if (std::find(table.begin(), table.end(), v) == table.end())
                throw Error(ErrorCode::UniverseMismatch,
                            v.str() + " is not a value of " + prop.str());
    }
}

} // namespace

bool subsumes(const AssignmentUniverse& universe, const FacetConstraint& a,
              const FacetConstraint& b) {
    validate_constraint(universe, a);
    validate_constraint(universe, b);

    if (b.unsatisfiable())
        return true;
    if (a.unsatisfiable())
        return false;

    for (const auto& [prop, allowed_a] : a.allowed) {
        auto it = b.allowed.find(prop);
        if (it == b.allowed.end()) {
            // b unconstrained: b allows the full table.
            auto table = universe.values(prop);
            bool full = std::all_of(table.begin(), table.end(),
                                    [&](const Iri& v) {
                                        return allowed_a.count(v) > 0;
                                    });
            if (!full)
                return false;
        } else {
            const std::set<Iri>& allowed_b = it->second;
            if (!std::includes(allowed_a.begin(), allowed_a.end(),
                               allowed_b.begin(), allowed_b.end()))
                return false;
        }
    }

    for (const Iri& x : a.anchors) {
        bool reached = false;
        for (const Iri& y : b.anchors)
            if (universe.named_reaches(y, x)) {
                reached = true;
                break;
            }
        if (!reached)
            return false;
    }
    return true;
}

// ----------------------------------------------------------------------
// Oracle.

namespace {

// Calls fn(per-property value index vector) for every assignment.
template <class Fn>
void for_each_assignment(const AssignmentUniverse& u, Fn&& fn) {
    auto props = u.properties();
    std::vector<std::size_t> idx(props.size(), 0);
    while (true) {
        fn(idx);
        std::size_t k = 0;
        for (; k < props.size(); ++k) {
            if (++idx[k] < u.values(props[k]).size())
                break;
            idx[k] = 0;
        }
        if (k == props.size())
            break;
    }
}

bool satisfies(const AssignmentUniverse& u, const FacetConstraint& c,
               const std::vector<std::size_t>& idx) {
    auto props = u.properties();
    for (std::size_t k = 0; k < props.size(); ++k) {
        auto it = c.allowed.find(props[k]);
        if (it == c.allowed.end())
            continue;
        if (!it->second.count(u.values(props[k])[idx[k]]))
            return false;
    }
    return true;
}

std::vector<bool> extension_bits(const AssignmentUniverse& u,
                                 const FacetConstraint& c) {
    std::vector<bool> bits;
    bits.reserve(u.assignment_count());
    for_each_assignment(
        u, [&](const std::vector<std::size_t>& idx) {
            bits.push_back(satisfies(u, c, idx));
        });
    return bits;
}

std::set<Iri> anchor_upset(const AssignmentUniverse& u,
                           const std::set<Iri>& anchors) {
    std::set<Iri> up(anchors.begin(), anchors.end());
    for (const Iri& y : anchors) {
        const std::set<Iri>& supers = u.named_supers(y);
        up.insert(supers.begin(), supers.end());
    }
    return up;
}

bool atom_accepted(const FacetConstraint& c, const std::set<Iri>& atom) {
    for (const Iri& x : c.anchors)
        if (!atom.count(x))
            return false;
    return true;
}

} // namespace

std::vector<Assignment> oracle_extension(const AssignmentUniverse& universe,
                                         const FacetConstraint& c) {
    validate_constraint(universe, c);
    std::vector<Assignment> out;
    auto props = universe.properties();
    for_each_assignment(universe, [&](const std::vector<std::size_t>& idx) {
        if (!satisfies(universe, c, idx))
            return;
        Assignment a;
        a.values.reserve(props.size());
        for (std::size_t k = 0; k < props.size(); ++k)
            a.values.push_back(universe.values(props[k])[idx[k]]);
        out.push_back(std::move(a));
    });
    return out;
}

bool oracle_subsumes(const AssignmentUniverse& universe,
                     const FacetConstraint& a, const FacetConstraint& b) {
    validate_constraint(universe, a);
    validate_constraint(universe, b);

    std::vector<bool> ext_a = extension_bits(universe, a);
    std::vector<bool> ext_b = extension_bits(universe, b);

    bool b_empty = std::none_of(ext_b.begin(), ext_b.end(),
                                [](bool x) { return x; });
    if (b_empty)
        return true;
    for (std::size_t i = 0; i < ext_b.size(); ++i)
        if (ext_b[i] && !ext_a[i])
            return false;

    // Anchor dimension: one canonical individual per upward-closed anchor
    // set in play, plus the anchorless individual.
    std::vector<std::set<Iri>> atoms{anchor_upset(universe, a.anchors),
                                     anchor_upset(universe, b.anchors),
                                     {}};
    for (const auto& atom : atoms)
        if (atom_accepted(b, atom) && !atom_accepted(a, atom))
            return false;
    return true;
}

// ----------------------------------------------------------------------
// classify.

namespace {

struct Candidates {
    std::vector<Iri> classes;
    std::vector<FacetConstraint> constraints;
    std::vector<SkippedClass> skipped;
};

Candidates gather_candidates(const Ontology& ont,
                             const AssignmentUniverse& universe,
                             bool skip_non_fragment) {
    Candidates out;
    std::vector<std::string> violations;
    for (const Entity& e : ont.signature()) {
        if (e.kind != EntityKind::Class)
            continue;
        auto tag = pattern_tag(ont, e.iri);
        if (tag == "tier" || tag == "partition") {
            out.skipped.push_back({e.iri, *tag + " machinery"});
            continue;
        }
        ConstraintResult result = constraint_of(ont, universe, e.iri);
        if (const auto* fragment = std::get_if<NotInFragment>(&result)) {
            if (skip_non_fragment)
                out.skipped.push_back({e.iri, fragment->reason});
            else
                violations.push_back(e.iri.str() + ": " + fragment->reason);
            continue;
        }
        out.classes.push_back(e.iri);
        out.constraints.push_back(std::get<FacetConstraint>(std::move(result)));
    }
    if (!violations.empty()) {
        std::string message =
            std::to_string(violations.size()) +
            " class(es) outside the classifiable fragment: ";
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i)
                message += "; ";
            message += violations[i];
        }
        throw Error(ErrorCode::FragmentViolation, message);
    }
    return out;
}

bool class_subsumed(const AssignmentUniverse& u,
                    const std::vector<Iri>& classes,
                    const std::vector<FacetConstraint>& constraints,
                    std::size_t i, std::size_t j) {
    if (i == j)
        return true;
    const FacetConstraint& ci = constraints[i];
    const FacetConstraint& cj = constraints[j];
    if (ci.unsatisfiable())
        return true;
    if (cj.defined)
        return subsumes(u, cj, ci);
    // Primitive superclass: only the asserted anchor path can reach it.
    for (const Iri& y : ci.anchors)
        if (u.named_reaches(y, classes[j]))
            return true;
    return false;
}

} // namespace

ClassifiedSet classify_relation(const Ontology& ont,
                                const ClassificationOptions& options) {
    auto registry = FacetRegistry::from_ontology(ont);
    auto universe = AssignmentUniverse::build(ont, registry);
    Candidates cand =
        gather_candidates(ont, universe, options.skip_non_fragment);

    ClassifiedSet set;
    set.classes = std::move(cand.classes);
    set.constraints = std::move(cand.constraints);
    set.skipped = std::move(cand.skipped);

    std::size_t n = set.classes.size();
    set.rel.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            set.rel[i * n + j] =
                class_subsumed(universe, set.classes, set.constraints, i, j)
                    ? 1
                    : 0;
    return set;
}

SubsumptionDag reduce(const ClassifiedSet& set) {
    std::size_t n = set.classes.size();

    SubsumptionDag dag;
    dag.skipped = set.skipped;
    std::sort(dag.skipped.begin(), dag.skipped.end(),
              [](const SkippedClass& a, const SkippedClass& b) {
                  return a.cls.str() < b.cls.str();
              });

    std::vector<std::size_t> sat;
    for (std::size_t i = 0; i < n; ++i) {
        if (set.constraints[i].unsatisfiable())
            dag.unsatisfiable.push_back(set.classes[i]);
        else
            sat.push_back(i);
    }
    std::sort(dag.unsatisfiable.begin(), dag.unsatisfiable.end(),
              [](const Iri& a, const Iri& b) { return a.str() < b.str(); });

    // Equivalence groups from mutual subsumption.
    std::vector<std::vector<std::size_t>> member_idx;
    for (std::size_t i : sat) {
        bool placed = false;
        for (auto& group : member_idx) {
            std::size_t r = group.front();
            if (set.subsumed(i, r) && set.subsumed(r, i)) {
                group.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed)
            member_idx.push_back({i});
    }

    struct Prepared {
        std::vector<Iri> members;
        std::size_t representative; // class index
        std::string key;
    };
    std::vector<Prepared> prepared;
    for (const auto& group : member_idx) {
        Prepared p;
        for (std::size_t i : group)
            p.members.push_back(set.classes[i]);
        std::sort(p.members.begin(), p.members.end(),
                  [](const Iri& a, const Iri& b) { return a.str() < b.str(); });
        p.representative = group.front();
        p.key = p.members.front().str();
        prepared.push_back(std::move(p));
    }
    std::sort(prepared.begin(), prepared.end(),
              [](const Prepared& a, const Prepared& b) { return a.key < b.key; });

    std::size_t g = prepared.size();
    auto group_rel = [&](std::size_t gi, std::size_t gj) {
        return set.subsumed(prepared[gi].representative,
                            prepared[gj].representative);
    };

    for (std::size_t gi = 0; gi < g; ++gi) {
        SubsumptionDag::Group group;
        group.members = prepared[gi].members;
        std::vector<std::size_t> supers;
        for (std::size_t gj = 0; gj < g; ++gj)
            if (gj != gi && group_rel(gi, gj))
                supers.push_back(gj);
        for (std::size_t s : supers) {
            bool direct = true;
            for (std::size_t t : supers)
                if (t != s && group_rel(t, s)) {
                    direct = false;
                    break;
                }
            if (direct)
                group.direct_supers.push_back(s);
        }
        dag.groups.push_back(std::move(group));
    }
    return dag;
}

SubsumptionDag classify(const Ontology& ont,
                        const ClassificationOptions& options) {
    return reduce(classify_relation(ont, options));
}

std::optional<std::size_t> SubsumptionDag::group_of(const Iri& cls) const {
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (const Iri& m : groups[i].members)
            if (m == cls)
                return i;
    return std::nullopt;
}

bool SubsumptionDag::reachable(std::size_t from, std::size_t to) const {
    if (from == to)
        return true;
    std::vector<std::size_t> queue{from};
    std::set<std::size_t> seen{from};
    while (!queue.empty()) {
        std::size_t g = queue.back();
        queue.pop_back();
        for (std::size_t s : groups[g].direct_supers) {
            if (s == to)
                return true;
            if (seen.insert(s).second)
                queue.push_back(s);
        }
    }
    return false;
}

std::string render_tree(const SubsumptionDag& dag) {
    std::size_t g = dag.groups.size();
    std::vector<std::vector<std::size_t>> children(g);
    std::vector<bool> is_root(g, true);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t s : dag.groups[i].direct_supers) {
            children[s].push_back(i);
            is_root[i] = false;
        }

    std::ostringstream out;
    std::set<std::size_t> printed;

    auto line_for = [&](std::size_t i) {
        std::string s;
        for (std::size_t m = 0; m < dag.groups[i].members.size(); ++m) {
            if (m)
                s += " = ";
            s += dag.groups[i].members[m].str();
        }
        return s;
    };

    const std::function<void(std::size_t, int)> walk = [&](std::size_t i,
                                                           int depth) {
        for (int d = 0; d < depth; ++d)
            out << "    ";
        out << line_for(i);
        if (!printed.insert(i).second) {
            out << " ^\n";
            return;
        }
        out << "\n";
        for (std::size_t child : children[i])
            walk(child, depth + 1);
    };

    for (std::size_t i = 0; i < g; ++i)
        if (is_root[i])
            walk(i, 0);

    if (!dag.unsatisfiable.empty()) {
        out << "\nunsatisfiable:\n";
        for (const Iri& cls : dag.unsatisfiable)
            out << "    " << cls.str() << "\n";
    }
    if (!dag.skipped.empty()) {
        out << "\nskipped:\n";
        for (const SkippedClass& s : dag.skipped)
            out << "    " << s.cls.str() << " (" << s.reason << ")\n";
    }
    return out.str();
}

// ----------------------------------------------------------------------
// check.

CheckReport check_against_oracle(const Ontology& ont,
                                 const CheckOptions& options) {
    auto registry = FacetRegistry::from_ontology(ont);

    for (const Iri& p : registry.properties()) {
        auto values = registry.values_of(p);
        bool functional = false;
        for (const auto& ax : ont.axioms())
            if (const auto* f = std::get_if<FunctionalObjectProperty>(&ax.node))
                if (f->property == p)
                    functional = true;
        if (!functional)
            throw Error(ErrorCode::OracleInapplicable,
                        "facet " + p.str() +
                            " has no functional axiom; the single-value "
                            "model does not apply");
        if (values.size() >= 2) {
            std::set<Iri> wanted(values.begin(), values.end());
            bool disjoint = false;
            for (const auto& ax : ont.axioms())
                if (const auto* d = std::get_if<DisjointClasses>(&ax.node)) {
                    std::set<Iri> listed(d->operands.begin(),
                                         d->operands.end());
                    if (std::includes(listed.begin(), listed.end(),
                                      wanted.begin(), wanted.end()))
                        disjoint = true;
                }
            if (!disjoint)
                throw Error(ErrorCode::OracleInapplicable,
                            "facet " + p.str() +
                                " has no disjointness axiom over its values");
        }
        if (!facet_covering(ont, p, values) && !options.open_world_pad)
            throw Error(ErrorCode::OracleInapplicable,
                        "facet " + p.str() +
                            " does not provably cover its range; enable "
                            "open-world padding to approximate");
    }

    AssignmentUniverse universe = AssignmentUniverse::build(
        ont, registry, {.pad_non_covering = options.open_world_pad});

    Candidates cand =
        gather_candidates(ont, universe, options.skip_non_fragment);
    std::size_t n = cand.classes.size();

    CheckReport report;
    report.classes = n;
    report.pairs = n * n;
    report.skipped = std::move(cand.skipped);
    std::sort(report.skipped.begin(), report.skipped.end(),
              [](const SkippedClass& a, const SkippedClass& b) {
                  return a.cls.str() < b.cls.str();
              });
    auto padded = universe.padded_properties();
    report.padded_properties.assign(padded.begin(), padded.end());
    report.approximate = !report.padded_properties.empty();

    // Precompute extensions and anchor upsets.
    std::vector<std::vector<bool>> bits;
    std::vector<bool> empty_ext;
    std::vector<std::set<Iri>> upsets;
    bits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits.push_back(extension_bits(universe, cand.constraints[i]));
        empty_ext.push_back(std::none_of(bits[i].begin(), bits[i].end(),
                                         [](bool x) { return x; }));
        upsets.push_back(anchor_upset(universe, cand.constraints[i].anchors));
    }
    std::set<Iri> top_atom;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool classifier_says =
                subsumes(universe, cand.constraints[i], cand.constraints[j]);
            bool oracle_says;
            if (empty_ext[j]) {
                oracle_says = true;
            } else {
                oracle_says = true;
                for (std::size_t k = 0; k < bits[i].size(); ++k)
                    if (bits[j][k] && !bits[i][k]) {
                        oracle_says = false;
                        break;
                    }
                if (oracle_says) {
                    const std::set<Iri>* atoms[3] = {&upsets[i], &upsets[j],
                                                     &top_atom};
                    for (const auto* atom : atoms)
                        if (atom_accepted(cand.constraints[j], *atom) &&
                            !atom_accepted(cand.constraints[i], *atom)) {
                            oracle_says = false;
                            break;
                        }
                }
            }
            if (classifier_says != oracle_says)
                report.mismatches.push_back(Mismatch{
                    cand.classes[i], cand.classes[j], classifier_says,
                    oracle_says});
        }
    }
    return report;
}

std::string render_report(const CheckReport& report) {
    std::ostringstream out;
    out << report.mismatches.size() << " mismatches / " << report.pairs
        << " pairs (" << report.classes << " classes)\n";
    if (report.approximate) {
        out << "note: open-world padding added synthetic values for:";
        for (std::size_t i = 0; i < report.padded_properties.size(); ++i)
            out << (i ? ", " : " ") << report.padded_properties[i].str();
        out << " (results are approximate)\n";
    }
    for (const Mismatch& m : report.mismatches)
        out << "mismatch: " << m.b.str() << " below " << m.a.str()
            << ": classifier says " << (m.classifier_says ? "yes" : "no")
            << ", oracle says " << (m.oracle_says ? "yes" : "no") << "\n";
    for (const SkippedClass& s : report.skipped)
        out << "skipped " << s.cls.str() << " (" << s.reason << ")\n";
    return out.str();
}

} // namespace onto
