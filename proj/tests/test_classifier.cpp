#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "helpers.hpp"
#include "onto/classifier.hpp"
#include "onto/eval.hpp"

using namespace onto;
using test_helpers::capture_error;
using test_helpers::read_file;
using test_helpers::source_path;

namespace {

// Five tiers, four defined selections, one described amino acid.
Ontology small_exemplar() {
    return eval_program(read_file(source_path("programs/exemplar.onto")));
}

struct Fixture {
    Ontology ont;
    FacetRegistry registry;
    AssignmentUniverse universe;

    explicit Fixture(Ontology o)
        : ont(std::move(o)),
          registry(FacetRegistry::from_ontology(ont)),
          universe(AssignmentUniverse::build(ont, registry)) {}

    FacetConstraint constraint(const char* name) const {
        ConstraintResult r = constraint_of(ont, universe, Iri::parse(name));
        REQUIRE(std::holds_alternative<FacetConstraint>(r));
        return std::get<FacetConstraint>(r);
    }

    NotInFragment rejection(const char* name) const {
        ConstraintResult r = constraint_of(ont, universe, Iri::parse(name));
        REQUIRE(std::holds_alternative<NotInFragment>(r));
        return std::get<NotInFragment>(r);
    }
};

} // namespace

TEST_SUITE("assignment universe") {
    TEST_CASE("properties sort by name and keep their value tables") {
        Fixture f(small_exemplar());
        auto props = f.universe.properties();
        REQUIRE(props.size() == 5);
        CHECK(props[0].str() == "o:hasCharge");
        CHECK(props[1].str() == "o:hasHydrophobicity");
        CHECK(props[2].str() == "o:hasPolarity");
        CHECK(props[3].str() == "o:hasSideChainStructure");
        CHECK(props[4].str() == "o:hasSize");

        auto sizes = f.universe.values(Iri::parse("o:hasSize"));
        REQUIRE(sizes.size() == 3);
        CHECK(sizes[0].str() == "o:Tiny"); // registration order
        CHECK(sizes[1].str() == "o:Small");
        CHECK(sizes[2].str() == "o:Large");

        CHECK(f.universe.assignment_count() == 72); // 3*2*2*2*3
        CHECK(f.universe.padded_properties().empty());

        CHECK(f.universe.is_value(Iri::parse("o:Tiny")));
        CHECK_FALSE(f.universe.is_value(Iri::parse("o:AminoAcid")));
        CHECK(f.universe.property_of_value(Iri::parse("o:Neutral")) ==
              Iri::parse("o:hasCharge"));
        CHECK(f.universe.domain_of(Iri::parse("o:hasSize")) ==
              Iri::parse("o:AminoAcid"));
        CHECK(capture_error([&] {
                  f.universe.values(Iri::parse("o:hasWeight"));
              }).code() == ErrorCode::UniverseMismatch);
    }

    TEST_CASE("named reachability is reflexive and transitive") {
        Fixture f(small_exemplar());
        Iri tiny = Iri::parse("o:Tiny");
        CHECK(f.universe.named_reaches(tiny, tiny));
        CHECK(f.universe.named_reaches(tiny, Iri::parse("o:Size")));
        CHECK(f.universe.named_reaches(
            tiny, Iri::parse("o:PhysioChemicalProperty")));
        CHECK_FALSE(f.universe.named_reaches(Iri::parse("o:Size"), tiny));
        CHECK_FALSE(
            f.universe.named_reaches(tiny, Iri::parse("o:AminoAcid")));
    }

    TEST_CASE("facet coverage detection") {
        Ontology ont = small_exemplar();
        auto registry = FacetRegistry::from_ontology(ont);
        for (const Iri& p : registry.properties())
            CHECK(facet_covering(ont, p, registry.values_of(p)));

        Ontology open = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(deftier T [A B] :cover false)\n");
        auto open_registry = FacetRegistry::from_ontology(open);
        Iri prop = Iri::parse("o:hasT");
        CHECK_FALSE(facet_covering(open, prop, open_registry.values_of(prop)));
    }

    TEST_CASE("padding adds one synthetic value per non-covering facet") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(deftier T [A B] :cover false)\n"
            "(defpartition S [C D])\n");
        auto registry = FacetRegistry::from_ontology(ont);
        auto universe = AssignmentUniverse::build(
            ont, registry, {.pad_non_covering = true});
        REQUIRE(universe.padded_properties().size() == 1);
        CHECK(universe.padded_properties()[0].str() == "o:hasT");
        auto values = universe.values(Iri::parse("o:hasT"));
        REQUIRE(values.size() == 3);
        CHECK(values[2].str() == "o:OtherT"); // named after the range
        CHECK(universe.is_value(Iri::parse("o:OtherT")));
        CHECK(universe.values(Iri::parse("o:hasS")).size() == 2);
        CHECK(universe.assignment_count() == 6);
    }
}

TEST_SUITE("constraints") {
    TEST_CASE("anchors, facet sets and definedness") {
        Fixture f(small_exemplar());

        // A bare primitive class asserts nothing, so its constraint is
        // empty; the class's own name only matters at the relation level.
        FacetConstraint amino = f.constraint("o:AminoAcid");
        CHECK_FALSE(amino.defined);
        CHECK(amino.allowed.empty());
        CHECK(amino.anchors.empty());
        CHECK_FALSE(amino.unsatisfiable());

        FacetConstraint small = f.constraint("o:SmallAminoAcid");
        CHECK(small.defined);
        CHECK(small.anchors == std::set<Iri>{Iri::parse("o:AminoAcid")});
        REQUIRE(small.allowed.size() == 1);
        CHECK(small.allowed.at(Iri::parse("o:hasSize")) ==
              std::set<Iri>{Iri::parse("o:Small")});

        FacetConstraint alanine = f.constraint("o:Alanine");
        CHECK_FALSE(alanine.defined); // a described individual class
        CHECK(alanine.allowed.size() == 5);
        CHECK(alanine.anchors ==
              std::set<Iri>{Iri::parse("o:AminoAcid")}); // via domains
    }

    TEST_CASE("conflicting values on one facet mean unsatisfiable") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass Broken :super (some hasSize Tiny)"
            " (some hasSize Small))\n");
        Fixture f(std::move(ont));
        FacetConstraint broken = f.constraint("o:Broken");
        CHECK(broken.unsatisfiable());
        CHECK(broken.allowed.at(Iri::parse("o:hasSize")).empty());
    }

    TEST_CASE("constraints absorb named superclass chains") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass Base :super (some hasSize Tiny))\n"
            "(defclass Middle :super Base)\n"
            "(defclass Leaf :super Middle)\n");
        Fixture f(std::move(ont));
        FacetConstraint leaf = f.constraint("o:Leaf");
        CHECK(leaf.allowed.at(Iri::parse("o:hasSize")) ==
              std::set<Iri>{Iri::parse("o:Tiny")});
        CHECK(leaf.anchors.count(Iri::parse("o:Middle")) == 1);
        CHECK(leaf.anchors.count(Iri::parse("o:Base")) == 1);
    }

    TEST_CASE("equivalences absorb in both directions") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass Named :equivalent (some hasSize Tiny))\n"
            "(defclass Alias :equivalent Named)\n");
        Fixture f(std::move(ont));
        FacetConstraint alias = f.constraint("o:Alias");
        CHECK(alias.defined);
        CHECK(alias.allowed.at(Iri::parse("o:hasSize")) ==
              std::set<Iri>{Iri::parse("o:Tiny")});
    }

    TEST_CASE("tier machinery is an opaque anchor") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass X :super Size)\n"); // the tier class itself
        Fixture f(std::move(ont));
        // Absorbing Size would pull in its cover disjunction; instead it
        // stays an anchor and X stays inside the fragment.
        FacetConstraint x = f.constraint("o:X");
        CHECK(x.anchors.count(Iri::parse("o:Size")) == 1);
        CHECK(x.allowed.empty());
    }

    TEST_CASE("fragment rejections carry a reason") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass AminoAcid)\n"
            "(defpartition Size [Tiny Small] :domain AminoAcid)\n"
            "(defoproperty partOf)\n"
            "(defclass ValueUser :super Tiny)\n"
            "(defclass OnlyUser :super (only hasSize Tiny))\n"
            "(defclass OrUser :super (or AminoAcid Tiny))\n"
            "(defclass OtherProp :super (some partOf AminoAcid))\n"
            "(defclass Heir :super ValueUser)\n");
        Fixture f(std::move(ont));

        NotInFragment value_user = f.rejection("o:ValueUser");
        CHECK(value_user.reason.find("names the facet value o:Tiny") !=
              std::string::npos);
        CHECK(f.rejection("o:OnlyUser").reason.find("universal") !=
              std::string::npos);
        CHECK(f.rejection("o:OrUser").reason.find("disjunction") !=
              std::string::npos);
        CHECK(f.rejection("o:OtherProp").reason.find("o:partOf") !=
              std::string::npos);

        NotInFragment heir = f.rejection("o:Heir");
        CHECK(heir.cls == Iri::parse("o:Heir"));
        CHECK(heir.reason.find("inherited via o:ValueUser") !=
              std::string::npos);
    }

    TEST_CASE("constraint_of validates its input") {
        Fixture f(small_exemplar());
        CHECK(capture_error([&] {
                  constraint_of(f.ont, f.universe, Iri::parse("o:Nope"));
              }).code() == ErrorCode::UndeclaredEntity);
        CHECK(capture_error([&] {
                  constraint_of(f.ont, f.universe, Iri::parse("o:hasSize"));
              }).code() == ErrorCode::KindClash);
    }
}

TEST_SUITE("subsumption") {
    TEST_CASE("facet dimension") {
        Fixture f(small_exemplar());
        FacetConstraint amino = f.constraint("o:AminoAcid");
        FacetConstraint small = f.constraint("o:SmallAminoAcid");
        FacetConstraint small_neutral =
            f.constraint("o:SmallNeutralAminoAcid");
        FacetConstraint tiny = f.constraint("o:TinyAminoAcid");
        FacetConstraint alanine = f.constraint("o:Alanine");

        CHECK(subsumes(f.universe, amino, alanine));
        CHECK_FALSE(subsumes(f.universe, alanine, amino));
        CHECK(subsumes(f.universe, small, small_neutral));
        CHECK_FALSE(subsumes(f.universe, small_neutral, small));
        CHECK(subsumes(f.universe, tiny, alanine));
        CHECK_FALSE(subsumes(f.universe, small, alanine)); // Tiny != Small
        CHECK_FALSE(subsumes(f.universe, small, tiny));
        CHECK_FALSE(subsumes(f.universe, tiny, small));
        CHECK(subsumes(f.universe, alanine, alanine));
    }

    TEST_CASE("allowing every value equals no constraint at all") {
        Fixture f(small_exemplar());
        FacetConstraint full;
        full.allowed[Iri::parse("o:hasSize")] = {Iri::parse("o:Tiny"),
                                                 Iri::parse("o:Small"),
                                                 Iri::parse("o:Large")};
        FacetConstraint free;
        CHECK(subsumes(f.universe, full, free));
        CHECK(subsumes(f.universe, free, full));
        CHECK(oracle_subsumes(f.universe, full, free));
        CHECK(oracle_subsumes(f.universe, free, full));
    }

    TEST_CASE("anchor dimension follows asserted reachability") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass Root)\n"
            "(defclass Mid :super Root)\n"
            "(defclass Leaf :super Mid)\n"
            "(defclass Detached)\n"
            "(defclass Stranger :super Detached)\n");
        Fixture f(std::move(ont));
        FacetConstraint root = f.constraint("o:Root");
        FacetConstraint leaf = f.constraint("o:Leaf");
        FacetConstraint stranger = f.constraint("o:Stranger");

        CHECK(root.anchors.empty()); // bare primitive: nothing asserted
        CHECK(leaf.anchors ==
              std::set<Iri>{Iri::parse("o:Mid"), Iri::parse("o:Root")});

        CHECK(subsumes(f.universe, root, leaf)); // empty constraint: top
        CHECK_FALSE(subsumes(f.universe, leaf, root));
        CHECK_FALSE(subsumes(f.universe, stranger, leaf));
        CHECK_FALSE(subsumes(f.universe, leaf, stranger));
        CHECK(oracle_subsumes(f.universe, root, leaf));
        CHECK_FALSE(oracle_subsumes(f.universe, leaf, root));
        CHECK_FALSE(oracle_subsumes(f.universe, stranger, leaf));

        // The relation layer distinguishes primitive names even when
        // their own constraints are empty.
        ClassifiedSet set = classify_relation(f.ont);
        auto index = [&](const char* name) {
            for (std::size_t i = 0; i < set.classes.size(); ++i)
                if (set.classes[i] == Iri::parse(name))
                    return i;
            FAIL("missing class");
            return set.classes.size();
        };
        CHECK(set.subsumed(index("o:Leaf"), index("o:Root")));
        CHECK_FALSE(set.subsumed(index("o:Root"), index("o:Leaf")));
        CHECK_FALSE(set.subsumed(index("o:Leaf"), index("o:Detached")));
        CHECK_FALSE(set.subsumed(index("o:Detached"), index("o:Leaf")));
    }

    TEST_CASE("the unsatisfiable constraint is below everything") {
        Fixture f(small_exemplar());
        FacetConstraint bottom;
        bottom.allowed[Iri::parse("o:hasSize")] = {};
        FacetConstraint amino = f.constraint("o:AminoAcid");
        CHECK(subsumes(f.universe, amino, bottom));
        CHECK_FALSE(subsumes(f.universe, bottom, amino));
        CHECK(oracle_subsumes(f.universe, amino, bottom));
        CHECK(oracle_extension(f.universe, bottom).empty());
    }

    TEST_CASE("constraints must belong to the universe") {
        Fixture f(small_exemplar());
        FacetConstraint alien;
        alien.allowed[Iri::parse("o:hasWeight")] = {Iri::parse("o:Heavy")};
        CHECK(capture_error([&] {
                  subsumes(f.universe, alien, FacetConstraint{});
              }).code() == ErrorCode::UniverseMismatch);
        FacetConstraint wrong_value;
        wrong_value.allowed[Iri::parse("o:hasSize")] = {
            Iri::parse("o:Neutral")};
        CHECK(capture_error([&] {
                  subsumes(f.universe, FacetConstraint{}, wrong_value);
              }).code() == ErrorCode::UniverseMismatch);
    }
}

TEST_SUITE("oracle") {
    TEST_CASE("extension sizes count the matching assignments") {
        Fixture f(small_exemplar());
        CHECK(oracle_extension(f.universe, f.constraint("o:AminoAcid"))
                  .size() == 72);
        CHECK(oracle_extension(f.universe, f.constraint("o:Alanine"))
                  .size() == 1);
        CHECK(oracle_extension(f.universe, f.constraint("o:SmallAminoAcid"))
                  .size() == 24); // 72 / 3 sizes
        CHECK(oracle_extension(f.universe,
                               f.constraint("o:SmallNeutralAminoAcid"))
                  .size() == 8); // 24 / 3 charges
    }

    TEST_CASE("assignments are parallel to the property order") {
        Fixture f(small_exemplar());
        auto rows = oracle_extension(f.universe, f.constraint("o:Alanine"));
        REQUIRE(rows.size() == 1);
        REQUIRE(rows[0].values.size() == 5);
        CHECK(rows[0].values[0].str() == "o:Neutral");     // hasCharge
        CHECK(rows[0].values[1].str() == "o:Hydrophobic"); // hasHydrophobicity
        CHECK(rows[0].values[2].str() == "o:NonPolar");    // hasPolarity
        CHECK(rows[0].values[3].str() == "o:Aliphatic");   // hasSideChain...
        CHECK(rows[0].values[4].str() == "o:Tiny");        // hasSize
    }

    TEST_CASE("oracle and classifier agree on every exemplar pair") {
        Fixture f(small_exemplar());
        const char* names[] = {
            "o:AminoAcid",
            "o:PhysioChemicalProperty",
            "o:SmallAminoAcid",
            "o:SmallNeutralAminoAcid",
            "o:SmallNeutralAliphaticAminoAcid",
            "o:TinyAminoAcid",
            "o:Alanine",
        };
        for (const char* a : names)
            for (const char* b : names) {
                FacetConstraint ca = f.constraint(a);
                FacetConstraint cb = f.constraint(b);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(subsumes(f.universe, ca, cb) ==
                      oracle_subsumes(f.universe, ca, cb));
            }
    }
}

TEST_SUITE("classification") {
    TEST_CASE("the exemplar produces the expected hierarchy") {
        SubsumptionDag dag = classify(small_exemplar());
        REQUIRE(dag.groups.size() == 7);
        CHECK(dag.unsatisfiable.empty());
        CHECK(dag.skipped.size() == 17); // 5 tiers + 12 values

        auto alanine = dag.group_of(Iri::parse("o:Alanine"));
        auto tiny = dag.group_of(Iri::parse("o:TinyAminoAcid"));
        auto amino = dag.group_of(Iri::parse("o:AminoAcid"));
        REQUIRE(alanine.has_value());
        REQUIRE(tiny.has_value());
        REQUIRE(amino.has_value());
        CHECK(dag.groups[*alanine].direct_supers ==
              std::vector<std::size_t>{*tiny});
        CHECK(dag.reachable(*alanine, *amino));
        CHECK_FALSE(dag.reachable(*amino, *alanine));
        CHECK(dag.group_of(Iri::parse("o:Size")) == std::nullopt);
    }

    TEST_CASE("the exemplar tree renders exactly") {
        std::string expected =
            "o:AminoAcid\n"
            "    o:SmallAminoAcid\n"
            "        o:SmallNeutralAminoAcid\n"
            "            o:SmallNeutralAliphaticAminoAcid\n"
            "    o:TinyAminoAcid\n"
            "        o:Alanine\n"
            "o:PhysioChemicalProperty\n"
            "\n"
            "skipped:\n"
            "    o:Aliphatic (tier machinery)\n"
            "    o:Aromatic (tier machinery)\n"
            "    o:Charge (tier machinery)\n"
            "    o:Hydrophilic (tier machinery)\n"
            "    o:Hydrophobic (tier machinery)\n"
            "    o:Hydrophobicity (tier machinery)\n"
            "    o:Large (partition machinery)\n"
            "    o:Negative (tier machinery)\n"
            "    o:Neutral (tier machinery)\n"
            "    o:NonPolar (tier machinery)\n"
            "    o:Polar (tier machinery)\n"
            "    o:Polarity (tier machinery)\n"
            "    o:Positive (tier machinery)\n"
            "    o:SideChainStructure (tier machinery)\n"
            "    o:Size (partition machinery)\n"
            "    o:Small (partition machinery)\n"
            "    o:Tiny (partition machinery)\n";
        CHECK(render_tree(classify(small_exemplar())) == expected);
    }

    TEST_CASE("equivalent definitions group together") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass AminoAcid)\n"
            "(defpartition Size [Tiny Small] :domain AminoAcid)\n"
            "(defclass First :equivalent (and AminoAcid (facet Tiny)))\n"
            "(defclass Second :equivalent (and AminoAcid (facet Tiny)))\n");
        SubsumptionDag dag = classify(ont);
        auto first = dag.group_of(Iri::parse("o:First"));
        auto second = dag.group_of(Iri::parse("o:Second"));
        REQUIRE(first.has_value());
        CHECK(first == second);
        CHECK(dag.groups[*first].members.size() == 2);
        CHECK(render_tree(dag).find("o:First = o:Second") !=
              std::string::npos);
    }

    TEST_CASE("shared subclasses print once and repeat with a marker") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass A)\n"
            "(defclass B)\n"
            "(defclass X :super A B)\n");
        CHECK(render_tree(classify(ont)) == "o:A\n"
                                            "    o:X\n"
                                            "o:B\n"
                                            "    o:X ^\n");
    }

    TEST_CASE("unsatisfiable classes are set apart") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass Broken :super (some hasSize Tiny)"
            " (some hasSize Small))\n"
            "(defclass Fine :super (some hasSize Tiny))\n");
        SubsumptionDag dag = classify(ont);
        REQUIRE(dag.unsatisfiable.size() == 1);
        CHECK(dag.unsatisfiable[0].str() == "o:Broken");
        CHECK(dag.group_of(Iri::parse("o:Broken")) == std::nullopt);
        CHECK(render_tree(dag).find("unsatisfiable:\n    o:Broken\n") !=
              std::string::npos);
    }

    TEST_CASE("out-of-fragment classes fail loudly unless skipped") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defpartition Size [Tiny Small])\n"
            "(defclass Bad :super Tiny)\n");
        Error e = capture_error([&] { classify(ont); });
        CHECK(e.code() == ErrorCode::FragmentViolation);
        CHECK(std::string(e.what()).find("o:Bad") != std::string::npos);
        CHECK(std::string(e.what()).find(
                  "1 class(es) outside the classifiable fragment") !=
              std::string::npos);

        ClassificationOptions options;
        options.skip_non_fragment = true;
        SubsumptionDag dag = classify(ont, options);
        bool listed = false;
        for (const SkippedClass& s : dag.skipped)
            if (s.cls == Iri::parse("o:Bad"))
                listed = true;
        CHECK(listed);
    }

    TEST_CASE("the relation is a preorder even through absorbed chains") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass AminoAcid)\n"
            "(defpartition Size [Tiny Small] :domain AminoAcid)\n"
            "(defclass TinyDef :equivalent (and AminoAcid (facet Tiny)))\n"
            "(defclass Gemlike :super (facet Tiny))\n"
            "(defclass Below :super Gemlike)\n");
        ClassifiedSet set = classify_relation(ont);
        std::size_t n = set.classes.size();
        for (std::size_t i = 0; i < n; ++i)
            CHECK(set.subsumed(i, i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (set.subsumed(i, j) && set.subsumed(j, k))
                        CHECK(set.subsumed(i, k));
        // Below inherits Gemlike's facet constraint, so it must sit under
        // the defined class TinyDef as well.
        auto index = [&](const char* name) {
            for (std::size_t i = 0; i < n; ++i)
                if (set.classes[i] == Iri::parse(name))
                    return i;
            FAIL("missing class");
            return n;
        };
        CHECK(set.subsumed(index("o:Below"), index("o:TinyDef")));
    }
}

TEST_SUITE("oracle check") {
    TEST_CASE("the exemplar checks clean") {
        CheckReport report = check_against_oracle(small_exemplar());
        CHECK(report.ok());
        CHECK(report.classes == 7);
        CHECK(report.pairs == 49);
        CHECK(report.mismatches.empty());
        CHECK_FALSE(report.approximate);
        CHECK(report.skipped.size() == 17);
        std::string text = render_report(report);
        CHECK(text.rfind("0 mismatches / 49 pairs (7 classes)\n", 0) == 0);
        CHECK(text.find("skipped o:Size (partition machinery)") !=
              std::string::npos);
    }

    TEST_CASE("missing functionality is refused") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(deftier T [A B] :functional false)\n");
        Error e = capture_error([&] { check_against_oracle(ont); });
        CHECK(e.code() == ErrorCode::OracleInapplicable);
        CHECK(std::string(e.what()).find("no functional axiom") !=
              std::string::npos);
    }

    TEST_CASE("missing disjointness is refused") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(deftier T [A B] :disjoint false)\n");
        Error e = capture_error([&] { check_against_oracle(ont); });
        CHECK(e.code() == ErrorCode::OracleInapplicable);
        CHECK(std::string(e.what()).find("no disjointness axiom") !=
              std::string::npos);
    }

    TEST_CASE("non-covering facets need padding") {
        Ontology ont = eval_program(
            "(defontology aa :prefix \"o\")\n"
            "(defclass D)\n"
            "(deftier T [A B] :domain D :cover false)\n"
            "(defclass X :equivalent (and D (facet A)))\n");
        Error e = capture_error([&] { check_against_oracle(ont); });
        CHECK(e.code() == ErrorCode::OracleInapplicable);
        CHECK(std::string(e.what()).find("does not provably cover") !=
              std::string::npos);

        CheckOptions options;
        options.open_world_pad = true;
        CheckReport report = check_against_oracle(ont, options);
        CHECK(report.ok());
        CHECK(report.classes == 2); // D and X
        CHECK(report.approximate);
        REQUIRE(report.padded_properties.size() == 1);
        CHECK(report.padded_properties[0].str() == "o:hasT");
        std::string text = render_report(report);
        CHECK(text.find("note: open-world padding added synthetic values "
                        "for: o:hasT (results are approximate)") !=
              std::string::npos);
    }
}
