#include "doctest.h"

#include "helpers.hpp"
#include "vnum/error.hpp"
#include "vnum/recognize.hpp"
#include "vnum/structure.hpp"

using namespace vnum;
using tv::ideal_of;
using tv::make_ring;
using tv::prime_strs;

TEST_CASE("support components split and order by least variable") {
    Ring r = make_ring({"x", "y", "z", "w"});
    MonomialIdeal I = ideal_of(r, {{0, 0, 1, 1}, {2, 0, 0, 0}, {1, 1, 0, 0}});
    std::vector<MonomialIdeal> parts = components(I);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == ideal_of(r, {{2, 0, 0, 0}, {1, 1, 0, 0}}));
    CHECK(parts[1] == ideal_of(r, {{0, 0, 1, 1}}));

    CHECK(components(ideal_of(r, {{1, 1, 0, 0}, {0, 1, 1, 0}})).size() == 1);
}

TEST_CASE("complete intersection recognition") {
    Ring r = make_ring({"x", "y", "z"});
    CHECK(is_complete_intersection(ideal_of(r, {{1, 1, 0}, {0, 0, 2}})));
    CHECK(is_complete_intersection(ideal_of(r, {{2, 1, 0}})));
    CHECK_FALSE(is_complete_intersection(ideal_of(r, {{2, 0, 0}, {1, 1, 0}})));
}

TEST_CASE("equigeneration check") {
    Ring r = make_ring({"x", "y"});
    CHECK(is_equigenerated(ideal_of(r, {{2, 0}, {1, 1}})));
    CHECK_FALSE(is_equigenerated(ideal_of(r, {{2, 0}, {0, 3}})));
}

TEST_CASE("splitting recognizer on accepting and rejecting inputs") {
    Ring r = make_ring({"x", "y", "z", "w"});
    CHECK(vertex_split(ideal_of(r, {{1, 0, 0, 0}, {0, 1, 0, 0}})) != nullptr);
    CHECK(vertex_split(ideal_of(r, {{2, 0, 0, 0}, {1, 1, 0, 0}})) != nullptr);
    CHECK(vertex_split(ideal_of(r, {{3, 0, 0, 0}})) != nullptr);
    CHECK(vertex_split(ideal_of(r, {{1, 1, 0, 0}, {0, 0, 1, 1}})) == nullptr);
}

TEST_CASE("split tree of a mixed-degree ideal") {
    Ring r = make_ring({"x1", "x2", "x3"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 0}, {1, 0, 2}, {0, 0, 3}});
    auto tree = vertex_split(I);
    REQUIRE(tree != nullptr);
    REQUIRE_FALSE(tree->is_leaf());
    CHECK(tree->splitting_variable == 0);
    CHECK(tree->inner->ideal == ideal_of(r, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    CHECK(tree->rest->ideal == ideal_of(r, {{0, 0, 3}}));
    CHECK(tree->rest->is_leaf());
}

TEST_CASE("edge ideal construction and validation") {
    Graph g;
    g.vertices = {"a", "b", "c", "isolated"};
    g.edges = {{0, 1}, {1, 2}, {1, 0}};
    MonomialIdeal I = edge_ideal(g);
    CHECK(I.ring()->variables() == std::vector<std::string>{"a", "b", "c"});
    CHECK(I == ideal_of(I.ring(), {{1, 1, 0}, {0, 1, 1}}));
    CHECK(graph_component_count(g) == 1);

    Graph empty;
    empty.vertices = {"a"};
    CHECK_THROWS_AS(edge_ideal(empty), DomainError);

    Graph loop;
    loop.vertices = {"a", "b"};
    loop.edges = {{0, 0}};
    CHECK_THROWS_AS(edge_ideal(loop), DomainError);

    Graph broken;
    broken.vertices = {"a", "b"};
    broken.edges = {{0, 5}};
    CHECK_THROWS_AS(edge_ideal(broken), DomainError);
}

TEST_CASE("asymptotic line of edge ideals counts components") {
    Graph two;
    two.vertices = {"a", "b", "c", "d"};
    two.edges = {{0, 1}, {2, 3}};
    CHECK(graph_component_count(two) == 2);
    CHECK(edge_v_asymptotic(two) == std::pair<long long, long long>{2, 0});
}

TEST_CASE("closed forms for complete intersections") {
    Ring r = make_ring({"x1", "x2", "x3"});
    MonomialIdeal I = ideal_of(r, {{1, 1, 0}, {0, 0, 2}});
    CHECK(prime_strs(ci_ass(I)) == std::vector<std::string>{"(x1,x3)", "(x2,x3)"});
    CHECK(ci_v(I, 1) == 2);
    CHECK(ci_v(I, 3) == 6);

    MonomialIdeal two = ideal_of(r, {{2, 0, 0}, {0, 2, 0}});
    CHECK(prime_strs(ci_ass(two)) == std::vector<std::string>{"(x1,x2)"});
    CHECK(ci_v(two, 5) == 10);

    MonomialIdeal principal = ideal_of(r, {{2, 1, 0}});
    CHECK(ci_v(principal, 1) == 2);
    CHECK(ci_v(principal, 4) == 11);

    MonomialIdeal not_ci = ideal_of(r, {{2, 0, 0}, {1, 1, 0}});
    CHECK_THROWS_AS(ci_ass(not_ci), DomainError);
    CHECK_THROWS_AS(ci_v(not_ci, 1), DomainError);
    CHECK_THROWS_AS(ci_v(I, 0), DomainError);
}

TEST_CASE("closed form for equigenerated splittable ideals") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal square = power(ideal_of(r, {{1, 0}, {0, 1}}), 2);
    CHECK(vertex_splittable_v(square, 1) == 1);
    CHECK(vertex_splittable_v(square, 3) == 5);
    CHECK(vertex_splittable_v(ideal_of(r, {{2, 0}, {1, 1}}), 2) == 3);

    Ring s = make_ring({"x", "y", "z", "w"});
    CHECK_THROWS_AS(vertex_splittable_v(ideal_of(s, {{1, 1, 0, 0}, {0, 0, 1, 1}}), 1),
                    DomainError);
    CHECK_THROWS_AS(vertex_splittable_v(ideal_of(r, {{2, 0}, {0, 3}}), 1), DomainError);
    CHECK_THROWS_AS(vertex_splittable_v(square, 0), DomainError);
}

TEST_CASE("lower bound for sums of disjoint parts") {
    Ring r = make_ring({"x", "y", "z", "w"});
    std::vector<MonomialIdeal> edges = {ideal_of(r, {{1, 1, 0, 0}}),
                                        ideal_of(r, {{0, 0, 1, 1}})};
    for (int k = 1; k <= 3; ++k) {
        SumBound sb = disjoint_sum_vbound(edges, k);
        CHECK(sb.bound == 2 * k);
        CHECK(sb.equality_certified);
        CHECK(sb.hypothesis_certified);
        CHECK(v_number(power(sum(edges[0], edges[1]), k)) == sb.bound);
    }
}

TEST_CASE("lower bound accepts window-checked parts") {
    std::vector<std::string> names;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 1; i <= 5; ++i)
            names.push_back((copy ? "y" : "x") + std::to_string(i));
    Ring r = make_ring(names);
    auto cycle = [&r](int offset) {
        std::vector<Monomial> gens;
        for (int e = 0; e < 5; ++e) {
            std::vector<Exponent> exps(10, 0);
            exps[offset + e] += 1;
            exps[offset + (e + 1) % 5] += 1;
            gens.emplace_back(r, exps);
        }
        return MonomialIdeal(r, gens);
    };
    std::vector<MonomialIdeal> parts = {cycle(0), cycle(5)};
    SumBound sb = disjoint_sum_vbound(parts, 3);
    CHECK(sb.bound == 6);
    CHECK(sb.equality_certified);
    CHECK_FALSE(sb.hypothesis_certified);
}

TEST_CASE("lower bound rejects parts off the expected line") {
    Ring r = make_ring({"x", "y", "z"});
    std::vector<MonomialIdeal> parts = {ideal_of(r, {{2, 0, 0}, {0, 2, 0}}),
                                        ideal_of(r, {{0, 0, 1}})};
    CHECK_THROWS_AS(disjoint_sum_vbound(parts, 2), DomainError);
}

TEST_CASE("lower bound input validation") {
    Ring r = make_ring({"x", "y"});
    std::vector<MonomialIdeal> one = {ideal_of(r, {{1, 0}})};
    CHECK_THROWS_AS(disjoint_sum_vbound(one, 1), DomainError);

    std::vector<MonomialIdeal> overlapping = {ideal_of(r, {{1, 0}}), ideal_of(r, {{1, 1}})};
    CHECK_THROWS_AS(disjoint_sum_vbound(overlapping, 1), DomainError);

    std::vector<MonomialIdeal> ok = {ideal_of(r, {{1, 0}}), ideal_of(r, {{0, 1}})};
    CHECK_THROWS_AS(disjoint_sum_vbound(ok, 0), DomainError);
}
