#include "doctest.h"

#include "helpers.hpp"
#include "vnum/error.hpp"

using namespace vnum;
using tv::ideal_of;
using tv::make_ring;
using tv::mono;
using tv::prime_of;
using tv::prime_strs;

namespace {

MonomialIdeal triangle(const Ring& r) {
    return ideal_of(r, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
}

} // namespace

TEST_CASE("prime sets sort, dedup and compare") {
    Ring r = make_ring({"x", "y", "z"});
    PrimeSet set({prime_of(r, {0, 1}), prime_of(r, {2}), prime_of(r, {0, 1})});
    CHECK(prime_strs(set) == std::vector<std::string>{"(z)", "(x,y)"});
    CHECK(set.contains(prime_of(r, {2})));
    CHECK_FALSE(set.contains(prime_of(r, {0})));

    PrimeSet other({prime_of(r, {0}), prime_of(r, {0, 1})});
    PrimeSet joined = set_union(set, other);
    CHECK(prime_strs(joined) == std::vector<std::string>{"(x)", "(z)", "(x,y)"});
    CHECK(joined == set_union(other, set));
}

TEST_CASE("single-variable colon residues") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    std::vector<Monomial> rs = detail::colon_var_residues(I, 0);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0] == mono(r, {1, 0}));
    CHECK(rs[1] == mono(r, {0, 1}));

    CHECK(detail::colon_var_residues(ideal_of(r, {{1, 0}}), 1).empty());
}

TEST_CASE("prime colon residues detect the socle") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    std::vector<Monomial> at_m = detail::colon_prime_residues(I, {0, 1});
    REQUIRE(at_m.size() == 1);
    CHECK(at_m[0] == mono(r, {1, 0}));

    CHECK(detail::candidate_is_associated(I, {0}));
    CHECK(detail::candidate_is_associated(I, {0, 1}));
    CHECK_FALSE(detail::candidate_is_associated(I, {1}));
}

TEST_CASE("associated primes of small ideals") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 0}});
    CHECK(prime_strs(ass(I)) == std::vector<std::string>{"(x)", "(x,y)"});
    CHECK(ass(I) == ass_serial(I));
    CHECK(ass(I) == ass_parallel(I));

    CHECK(prime_strs(ass(triangle(r))) ==
          std::vector<std::string>{"(x,y)", "(x,z)", "(y,z)"});
    CHECK(prime_strs(ass(power(triangle(r), 2))) ==
          std::vector<std::string>{"(x,y)", "(x,z)", "(y,z)", "(x,y,z)"});

    CHECK(prime_strs(ass(prime_of(r, {0, 2}).as_ideal())) ==
          std::vector<std::string>{"(x,z)"});
    CHECK_THROWS_AS(ass(MonomialIdeal::zero(r)), DomainError);
    CHECK_THROWS_AS(ass(MonomialIdeal::unit(r)), DomainError);
}

TEST_CASE("powers reuse the cache and agree with direct powering") {
    clear_caches();
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    CHECK(power_cached(I, 3) == power(I, 3));
    CHECK(power_cached(I, 2) == power(I, 2));
    CHECK(prime_strs(ass_power(I, 3)) == std::vector<std::string>{"(x)", "(x,y)"});
    CHECK(ass_power(I, 3) == ass(power(I, 3)));
    CHECK_THROWS_AS(power_cached(I, 0), DomainError);
    clear_caches();
    CHECK(power_cached(I, 2) == power(I, 2));
}

TEST_CASE("choice primes of a complete intersection") {
    Ring r = make_ring({"x1", "x2", "x3"});
    MonomialIdeal I = ideal_of(r, {{1, 1, 0}, {0, 0, 2}});
    CHECK(prime_strs(detail::ci_choice_primes(I)) ==
          std::vector<std::string>{"(x1,x3)", "(x2,x3)"});
}

TEST_CASE("stabilization of a single ideal") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    StabilizationReport rep = ass_star(I, 4);
    REQUIRE(rep.per_k.size() == 4);
    for (const PrimeSet& set : rep.per_k)
        CHECK(prime_strs(set) == std::vector<std::string>{"(x)", "(x,y)"});
    CHECK(prime_strs(rep.stable_set) == std::vector<std::string>{"(x)", "(x,y)"});
    CHECK(rep.stable_from == 1);
    CHECK_FALSE(rep.verified);

    AssConfig cfg;
    cfg.k_max = 4;
    StabilizationReport inf = ass_infty(I, cfg);
    CHECK(prime_strs(inf.stable_set) == std::vector<std::string>{"(x)", "(x,y)"});
    CHECK(inf.stable_from == 1);
    CHECK_FALSE(inf.verified);
}

TEST_CASE("stabilization of a complete intersection is certified") {
    Ring r = make_ring({"x1", "x2", "x3"});
    MonomialIdeal I = ideal_of(r, {{1, 1, 0}, {0, 0, 2}});
    StabilizationReport rep = ass_star(I, 8);
    CHECK(prime_strs(rep.stable_set) == std::vector<std::string>{"(x1,x3)", "(x2,x3)"});
    CHECK(rep.stable_from == 1);
    CHECK(rep.verified);
    for (const PrimeSet& set : rep.per_k) CHECK(set == rep.stable_set);

    StabilizationReport inf = ass_infty(I);
    CHECK(inf.stable_set == rep.stable_set);
    CHECK(inf.verified);
}

TEST_CASE("stabilization across disjoint summands") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 0}, {0, 0, 2}});
    AssConfig cfg;
    cfg.k_max = 3;
    StabilizationReport rep = ass_star(I, 3);
    for (const PrimeSet& set : rep.per_k)
        CHECK(prime_strs(set) == std::vector<std::string>{"(x,z)", "(x,y,z)"});
    CHECK(rep.stable_from == 1);

    StabilizationReport inf = ass_infty(I, cfg);
    CHECK(prime_strs(inf.stable_set) == std::vector<std::string>{"(x,z)", "(x,y,z)"});
    CHECK_FALSE(inf.verified);
}

TEST_CASE("window validation") {
    Ring r = make_ring({"x"});
    MonomialIdeal I = ideal_of(r, {{2}});
    AssConfig bad;
    bad.window = 1;
    CHECK_THROWS_AS(ass_infty(I, bad), DomainError);
    bad.window = 9;
    bad.k_max = 4;
    CHECK_THROWS_AS(ass_infty(I, bad), DomainError);
}

TEST_CASE("prime sets of powers of a sum") {
    Ring r = make_ring({"x", "y", "z", "w"});
    MonomialIdeal T = ideal_of(r, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
    MonomialIdeal W = ideal_of(r, {{0, 0, 0, 2}});
    CHECK(prime_strs(ass_sum_power(T, W, 2)) ==
          std::vector<std::string>{"(x,y,w)", "(x,z,w)", "(y,z,w)", "(x,y,z,w)"});
    CHECK(ass_sum_power(T, W, 1) == ass(sum(T, W)));

    MonomialIdeal overlap = ideal_of(r, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(ass_sum_power(T, overlap, 1), DomainError);

    Ring other = make_ring({"x", "y", "z"});
    CHECK_THROWS_AS(ass_sum_power(T, ideal_of(other, {{1, 0, 0}}), 1), DomainError);
}

TEST_CASE("prime sets of powers of a product") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}});
    MonomialIdeal J = ideal_of(r, {{0, 3}});
    for (int k = 1; k <= 3; ++k) {
        CHECK(prime_strs(ass_product(I, J, k)) == std::vector<std::string>{"(x)", "(y)"});
        CHECK(ass_product(I, J, k) == ass(power(product(I, J), k)));
    }
}

TEST_CASE("stable prime set of a sum from the summands") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 0}});
    MonomialIdeal J = ideal_of(r, {{0, 0, 2}});
    CertifiedPrimeSet combined = ass_sum_infty(I, J);
    CHECK(prime_strs(combined.primes) ==
          std::vector<std::string>{"(x,z)", "(x,y,z)"});
    CHECK_FALSE(combined.verified);

    MonomialIdeal P = ideal_of(r, {{2, 0, 0}});
    CertifiedPrimeSet ci = ass_sum_infty(P, J);
    CHECK(prime_strs(ci.primes) == std::vector<std::string>{"(x,z)"});
    CHECK(ci.verified);
}
