#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "onto/classifier.hpp"
#include "random_ontology.hpp"

using namespace onto;
using test_helpers::RandomOntology;
using test_helpers::make_random_ontology;

TEST_SUITE("randomized agreement") {
    TEST_CASE("the classifier matches the oracle on random ontologies") {
        for (unsigned seed = 1; seed <= 60; ++seed) {
            CAPTURE(seed);
            std::mt19937 rng(seed);
            RandomOntology world = make_random_ontology(rng);
            CheckReport report = check_against_oracle(world.ont);
            CHECK(report.mismatches.empty());
            CHECK(report.pairs == report.classes * report.classes);
            CHECK_FALSE(report.approximate);
            if (!report.ok())
                FAIL_CHECK(render_report(report));
        }
    }

    TEST_CASE("the subsumption relation is always a preorder") {
        for (unsigned seed = 101; seed <= 130; ++seed) {
            CAPTURE(seed);
            std::mt19937 rng(seed);
            RandomOntology world = make_random_ontology(rng);
            ClassifiedSet set = classify_relation(world.ont);
            const std::size_t n = set.classes.size();
            for (std::size_t i = 0; i < n; ++i)
                CHECK(set.subsumed(i, i));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (!set.subsumed(i, j))
                        continue;
                    for (std::size_t k = 0; k < n; ++k)
                        if (set.subsumed(j, k)) {
                            CAPTURE(set.classes[i].str());
                            CAPTURE(set.classes[j].str());
                            CAPTURE(set.classes[k].str());
                            CHECK(set.subsumed(i, k));
                        }
                }
        }
    }

    TEST_CASE("the reduced graph preserves the relation") {
        for (unsigned seed = 201; seed <= 230; ++seed) {
            CAPTURE(seed);
            std::mt19937 rng(seed);
            RandomOntology world = make_random_ontology(rng);
            ClassifiedSet set = classify_relation(world.ont);
            SubsumptionDag dag = reduce(set);

            // Every satisfiable class lands in exactly one group; the
            // unsatisfiable ones are set apart.
            std::set<std::string> placed;
            for (const auto& group : dag.groups)
                for (const Iri& m : group.members)
                    CHECK(placed.insert(m.str()).second);
            for (const Iri& u : dag.unsatisfiable)
                CHECK(placed.insert(u.str()).second);
            CHECK(placed.size() == set.classes.size());

            // Group reachability agrees with the raw relation.
            const std::size_t n = set.classes.size();
            for (std::size_t i = 0; i < n; ++i) {
                auto gi = dag.group_of(set.classes[i]);
                if (!gi)
                    continue; // unsatisfiable
                for (std::size_t j = 0; j < n; ++j) {
                    auto gj = dag.group_of(set.classes[j]);
                    if (!gj)
                        continue;
                    CAPTURE(set.classes[i].str());
                    CAPTURE(set.classes[j].str());
                    CHECK(dag.reachable(*gi, *gj) == set.subsumed(i, j));
                }
            }

            // Direct supers are strict: no group is its own super, and no
            // listed super is implied by another one.
            for (std::size_t g = 0; g < dag.groups.size(); ++g)
                for (std::size_t s : dag.groups[g].direct_supers) {
                    CHECK(s != g);
                    for (std::size_t t : dag.groups[g].direct_supers)
                        if (t != s)
                            CHECK_FALSE(dag.reachable(t, s));
                }
        }
    }

    TEST_CASE("classification output is deterministic per seed") {
        for (unsigned seed : {7u, 42u, 99u}) {
            CAPTURE(seed);
            std::mt19937 first_rng(seed);
            std::mt19937 second_rng(seed);
            RandomOntology first = make_random_ontology(first_rng);
            RandomOntology second = make_random_ontology(second_rng);
            CHECK(render_tree(classify(first.ont)) ==
                  render_tree(classify(second.ont)));
            CHECK(render_report(check_against_oracle(first.ont)) ==
                  render_report(check_against_oracle(second.ont)));
        }
    }

    TEST_CASE("every class shows up in the rendered tree exactly once") {
        for (unsigned seed : {11u, 23u}) {
            CAPTURE(seed);
            std::mt19937 rng(seed);
            RandomOntology world = make_random_ontology(rng);
            SubsumptionDag dag = classify(world.ont);
            std::string tree = render_tree(dag);
            for (const Iri& cls : world.user_classes) {
                CAPTURE(cls.str());
                CHECK(tree.find(cls.str()) != std::string::npos);
            }
        }
    }
}
