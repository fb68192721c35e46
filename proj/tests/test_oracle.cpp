#include "doctest.h"

#include "helpers.hpp"
#include "vnum/error.hpp"
#include "vnum/oracle.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;
using tv::ideal_of;
using tv::make_ring;
using tv::mono;
using tv::prime_of;

TEST_CASE("witness records re-check their colon") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    WitnessRecord good(I, prime_of(r, {0}), mono(r, {0, 1}));
    CHECK(good.degree == 1);
    CHECK_THROWS_AS(WitnessRecord(I, prime_of(r, {0}), mono(r, {1, 0})), DomainError);
}

TEST_CASE("exhaustive witness search finds canonical minimal witnesses") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    std::vector<WitnessRecord> records = oracle_ass(I);
    REQUIRE(records.size() == 2);
    CHECK(records[0].prime == prime_of(r, {0}));
    CHECK(records[0].witness == mono(r, {0, 1}));
    CHECK(records[0].degree == 1);
    CHECK(records[1].prime == prime_of(r, {0, 1}));
    CHECK(records[1].witness == mono(r, {1, 0}));
    CHECK(records[1].degree == 1);
}

TEST_CASE("oracle v-numbers agree with hand values") {
    Ring r = make_ring({"x", "y"});
    CHECK(oracle_v(ideal_of(r, {{2, 0}, {1, 1}})) == 1);
    CHECK(oracle_v(prime_of(r, {0, 1}).as_ideal()) == 0);
    CHECK(oracle_v(power(ideal_of(r, {{2, 0}, {0, 2}}), 2)) == 4);

    Ring s = make_ring({"x1", "x2", "x3", "x4", "x5"});
    MonomialIdeal c5 = ideal_of(s, {{1, 1, 0, 0, 0},
                                    {0, 1, 1, 0, 0},
                                    {0, 0, 1, 1, 0},
                                    {0, 0, 0, 1, 1},
                                    {1, 0, 0, 0, 1}});
    CHECK(oracle_v(c5) == 2);
    CHECK(oracle_v(c5) == v_number(c5));
}

TEST_CASE("oracle local values match the residue computation") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal T2 = power(ideal_of(r, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), 2);
    CHECK(oracle_v_local(T2, prime_of(r, {0, 1, 2})) == 3);
    CHECK(oracle_v_local(T2, prime_of(r, {0, 1})) ==
          v_local(T2, prime_of(r, {0, 1})));
    CHECK_THROWS_AS(oracle_v_local(T2, prime_of(r, {0})), DomainError);
}

TEST_CASE("budget guard trips before enumeration") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{3, 3, 3}});
    OracleConfig tight;
    tight.budget = 10;
    CHECK_THROWS_AS(oracle_ass(I, tight), BudgetError);
    CHECK_THROWS_AS(oracle_v(I, tight), BudgetError);
}

TEST_CASE("oracle input validation") {
    Ring r = make_ring({"x"});
    CHECK_THROWS_AS(oracle_ass(MonomialIdeal::zero(r)), DomainError);
    CHECK_THROWS_AS(oracle_v(MonomialIdeal::unit(r)), DomainError);
}
