#include "gridgap/csp.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace gridgap;

TEST_CASE("validation catches structural defects one by one") {
    CspInstance good = corpus::s1();
    CHECK(validate(good).ok());

    CspInstance bad = good;
    bad.d = 1;
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.N = 0;
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.delta = 0;
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.unary.pop_back();
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.variables[1] = {3, 1};  // outside the 2x2 grid
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.variables[1] = bad.variables[0];
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.unary[0][0] = {2, 1};  // outside [1]^2
    CHECK_FALSE(validate(bad).ok());

    bad = good;
    bad.unary[0].push_back({1, 1});  // duplicate value in one relation
    CHECK_FALSE(validate(bad).ok());

    CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);
}

TEST_CASE("constraint edges cover grid-adjacent pairs exactly once") {
    // 2x2 block: four variables, four edges
    CspInstance csp = corpus::make_csp(
        2, 2, 1, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, {{{1, 1}}, {{1, 1}}, {{1, 1}}, {{1, 1}}});
    const auto edges = constraint_edges(csp);
    REQUIRE(edges.size() == 4);
    for (const auto& e : edges) {
        GridPoint expect = csp.variables[e.from];
        expect[e.axis - 1] += 1;
        CHECK(csp.variables[e.to] == expect);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) seen.insert({e.from, e.to});
    CHECK(seen.size() == edges.size());

    CHECK(constraint_edges(corpus::hand_instances()[2].csp).empty());  // isolated variable
}

TEST_CASE("is_satisfying checks unary membership and every edge") {
    const CspInstance s1 = corpus::s1();
    CHECK(is_satisfying(s1, Assignment{{{1, 1}, {1, 1}}}));

    const CspInstance u1 = corpus::u1();
    // 1 >= 2 fails on the edge axis
    CHECK_FALSE(is_satisfying(u1, Assignment{{{1, 1}, {2, 2}}}));
    // value outside the unary relation
    CHECK_FALSE(is_satisfying(u1, Assignment{{{2, 2}, {2, 2}}}));
    // structural mismatch
    CHECK_THROWS_AS(is_satisfying(s1, Assignment{{{1, 1}}}), std::invalid_argument);
    // value outside the domain cube is a usage error, not "unsatisfied"
    CHECK_THROWS_AS(is_satisfying(s1, Assignment{{{2, 1}, {1, 1}}}), std::invalid_argument);
}

TEST_CASE("solve finds the lexicographically first solution") {
    const auto f = solve(corpus::s1());
    REQUIRE(f.has_value());
    CHECK(f->values == std::vector<DomainValue>{{1, 1}, {1, 1}});

    CHECK_FALSE(solve(corpus::u1()).has_value());

    // two variables, delta=2, everything allowed: smallest assignment wins
    CspInstance open = corpus::make_csp(
        2, 2, 2, {{1, 1}, {2, 1}},
        {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}});
    const auto g = solve(open);
    REQUIRE(g.has_value());
    CHECK(g->values == std::vector<DomainValue>{{1, 1}, {1, 1}});
}

TEST_CASE("solve agrees with brute force on the whole corpus") {
    for (const auto& entry : corpus::instances()) {
        CAPTURE(entry.id);
        const auto f = solve(entry.csp);
        CHECK(f.has_value() == oracles::brute_force_satisfiable(entry.csp));
        if (f) CHECK(is_satisfying(entry.csp, *f));
    }
}

TEST_CASE("reflection is an involution and flips the relation direction") {
    for (const auto& entry : corpus::leq_instances()) {
        CAPTURE(entry.id);
        const CspInstance twice = reflect_unary(reflect_unary(entry.csp));
        CHECK(twice.unary == entry.csp.unary);

        const CspInstance geq = leq_to_geq(entry.csp);
        CHECK(geq.relation == BinaryRelation::Geq);
        CHECK(oracles::brute_force_satisfiable(geq) ==
              oracles::brute_force_satisfiable(entry.csp));
    }
    CHECK_THROWS_AS(leq_to_geq(corpus::s1()), std::invalid_argument);
}

TEST_CASE("generator is deterministic and always emits valid instances") {
    GeneratorConfig config;
    config.d = 3;
    config.N = 3;
    config.delta = 2;
    config.num_vars = 4;
    config.density = 0.5;
    config.seed = 12345;

    const CspInstance a = random_instance(config);
    const CspInstance b = random_instance(config);
    CHECK(a.variables == b.variables);
    CHECK(a.unary == b.unary);
    CHECK(validate(a).ok());
    CHECK(a.num_variables() == 4);

    config.seed = 54321;
    const CspInstance c = random_instance(config);
    CHECK((a.variables != c.variables || a.unary != c.unary));

    config.density = 1.0;
    const CspInstance full = random_instance(config);
    for (const auto& relation : full.unary) CHECK(relation.size() == 8);

    config.density = 0.0;
    const CspInstance empty = random_instance(config);
    for (const auto& relation : empty.unary) CHECK(relation.empty());
}

TEST_CASE("generator rejects unusable configurations") {
    GeneratorConfig config;
    config.d = 1;
    CHECK_THROWS_AS(random_instance(config), std::invalid_argument);

    config = {};
    config.d = 2;
    config.N = 2;
    config.num_vars = 5;  // more variables than grid cells
    CHECK_THROWS_AS(random_instance(config), std::invalid_argument);
}
