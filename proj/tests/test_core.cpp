#include "doctest.h"

#include "helpers.hpp"
#include "vnum/error.hpp"

using namespace vnum;
using tv::ideal_of;
using tv::make_ring;
using tv::mono;
using tv::prime_of;

TEST_CASE("ring construction and lookup") {
    Ring r = make_ring({"x", "y", "z"});
    CHECK(r->size() == 3);
    CHECK(r->index_of("y") == 1);
    CHECK(r->index_of("w") == -1);
    CHECK(same_ring(r, r));

    Ring s = make_ring({"x", "y", "z"});
    CHECK(same_ring(r, s));
    Ring t = make_ring({"x", "z", "y"});
    CHECK_FALSE(same_ring(r, t));

    CHECK_THROWS_AS(AmbientRing::make({}), DomainError);
    CHECK_THROWS_AS(AmbientRing::make({"x", "x"}), DomainError);
}

TEST_CASE("monomial arithmetic and rendering") {
    Ring r = make_ring({"x", "y", "z"});
    Monomial xy = mono(r, {1, 1, 0});
    Monomial x2 = mono(r, {2, 0, 0});
    Monomial one = Monomial::unit(r);

    CHECK(xy.degree() == 2);
    CHECK(xy.str() == "x*y");
    CHECK(x2.str() == "x^2");
    CHECK(one.str() == "1");
    CHECK(one.is_unit());
    CHECK(mono(r, {2, 0, 3}).str() == "x^2*z^3");

    CHECK(mul(xy, x2) == mono(r, {3, 1, 0}));
    CHECK(lcm(xy, x2) == mono(r, {2, 1, 0}));
    CHECK(colon_part(x2, xy) == mono(r, {1, 0, 0}));
    CHECK(colon_part(xy, x2) == mono(r, {0, 1, 0}));

    CHECK(one.divides(xy));
    CHECK(xy.divides(mono(r, {1, 2, 0})));
    CHECK_FALSE(x2.divides(xy));

    CHECK(xy.support() == std::vector<int>{0, 1});
    CHECK(Monomial::variable(r, 2, 4) == mono(r, {0, 0, 4}));
}

TEST_CASE("monomial overflow is loud") {
    Ring r = make_ring({"x"});
    Monomial big = mono(r, {2000000000});
    CHECK_THROWS_AS(mul(big, big), OverflowError);
}

TEST_CASE("canonical order is degree then larger leading exponent") {
    Ring r = make_ring({"x", "y", "z"});
    Monomial x2 = mono(r, {2, 0, 0});
    Monomial xy = mono(r, {1, 1, 0});
    Monomial y2 = mono(r, {0, 2, 0});
    Monomial z = mono(r, {0, 0, 1});

    CHECK(canonical_less(z, x2));
    CHECK(canonical_less(x2, xy));
    CHECK(canonical_less(xy, y2));
    CHECK_FALSE(canonical_less(xy, xy));
}

TEST_CASE("minimalization keeps exactly the divisibility antichain") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 0}});
    CHECK(I.gens().size() == 2);
    CHECK(I == ideal_of(r, {{2, 0, 0}, {1, 1, 0}}));
    CHECK(I.str() == "(x^2, x*y)");

    MonomialIdeal unit = ideal_of(r, {{0, 0, 0}, {1, 0, 0}});
    CHECK(unit.is_unit());
    CHECK(unit == MonomialIdeal::unit(r));

    CHECK(MonomialIdeal::zero(r).is_zero());
    CHECK(MonomialIdeal::zero(r).str() == "(0)");
}

TEST_CASE("membership and containment") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 0}});
    CHECK(contains(I, mono(r, {2, 0, 5})));
    CHECK(contains(I, mono(r, {1, 1, 0})));
    CHECK_FALSE(contains(I, mono(r, {1, 0, 3})));
    CHECK_FALSE(contains(I, Monomial::unit(r)));

    CHECK(contains(I, ideal_of(r, {{2, 1, 0}})));
    CHECK_FALSE(contains(ideal_of(r, {{2, 1, 0}}), I));
    CHECK(contains(I, MonomialIdeal::zero(r)));
    CHECK(contains(MonomialIdeal::unit(r), I));
}

TEST_CASE("sum product and power") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}});
    MonomialIdeal J = ideal_of(r, {{0, 1, 0}});
    CHECK(sum(I, J) == ideal_of(r, {{2, 0, 0}, {0, 1, 0}}));
    CHECK(product(I, J) == ideal_of(r, {{2, 1, 0}}));

    MonomialIdeal triangle = ideal_of(r, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    MonomialIdeal square = power(triangle, 2);
    CHECK(square == ideal_of(r, {{2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 2, 1}, {1, 1, 2},
                                 {0, 2, 2}}));
    CHECK(power(triangle, 1) == triangle);
    CHECK_THROWS_AS(power(triangle, 0), DomainError);
}

TEST_CASE("intersect") {
    Ring r = make_ring({"x", "y", "z"});
    CHECK(intersect(ideal_of(r, {{1, 0, 0}}), ideal_of(r, {{0, 1, 0}})) ==
          ideal_of(r, {{1, 1, 0}}));
    CHECK(intersect(ideal_of(r, {{2, 0, 0}, {0, 1, 0}}), ideal_of(r, {{1, 0, 0}})) ==
          ideal_of(r, {{2, 0, 0}, {1, 1, 0}}));
}

TEST_CASE("colon by a monomial and by an ideal") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});
    CHECK(colon_monomial(I, mono(r, {0, 1})) == ideal_of(r, {{1, 0}}));
    CHECK(colon_monomial(ideal_of(r, {{2, 0}, {0, 2}}), mono(r, {1, 1})) ==
          ideal_of(r, {{1, 0}, {0, 1}}));
    CHECK(colon_ideal(I, ideal_of(r, {{1, 0}})) == ideal_of(r, {{1, 0}, {0, 1}}));
    CHECK(colon_ideal(I, ideal_of(r, {{1, 0}, {0, 1}})) == ideal_of(r, {{1, 0}}));
    CHECK_THROWS_AS(colon_ideal(I, MonomialIdeal::zero(r)), DomainError);
}

TEST_CASE("saturation reports the stabilization exponent") {
    Ring r = make_ring({"x", "y"});
    MonomialIdeal I = ideal_of(r, {{2, 0}, {1, 1}});

    SaturationResult by_y = saturate(I, ideal_of(r, {{0, 1}}));
    CHECK(by_y.ideal == ideal_of(r, {{1, 0}}));
    CHECK(by_y.exponent == 1);

    SaturationResult stable = saturate(ideal_of(r, {{1, 0}}), ideal_of(r, {{0, 1}}));
    CHECK(stable.ideal == ideal_of(r, {{1, 0}}));
    CHECK(stable.exponent == 0);

    SaturationResult by_m = saturate(I, ideal_of(r, {{1, 0}, {0, 1}}));
    CHECK(by_m.ideal == ideal_of(r, {{1, 0}}));
    CHECK(by_m.exponent == 1);
}

TEST_CASE("localization drops outside variables") {
    Ring r = make_ring({"x", "y", "z"});
    CHECK(localize(ideal_of(r, {{2, 1, 0}, {0, 0, 1}}), prime_of(r, {0, 2})) ==
          ideal_of(r, {{2, 0, 0}, {0, 0, 1}}));
    CHECK(localize(ideal_of(r, {{1, 1, 0}, {0, 1, 1}}), prime_of(r, {1})) ==
          ideal_of(r, {{0, 1, 0}}));
    CHECK(localize(ideal_of(r, {{1, 0, 0}}), prime_of(r, {1})).is_unit());
}

TEST_CASE("numeric invariants") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialIdeal I = ideal_of(r, {{2, 0, 0}, {1, 1, 1}});
    CHECK(alpha(I) == 2);
    CHECK(mu(I) == 2);
    CHECK(support(I) == std::vector<int>{0, 1, 2});
    CHECK(lcm_gens(I) == mono(r, {2, 1, 1}));
    CHECK_THROWS_AS(alpha(MonomialIdeal::zero(r)), DomainError);
    CHECK_THROWS_AS(mu(MonomialIdeal::unit(r)), DomainError);
}

TEST_CASE("prime recognition") {
    Ring r = make_ring({"x", "y", "z"});
    auto p = as_prime(ideal_of(r, {{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(p.has_value());
    CHECK(*p == prime_of(r, {0, 1}));
    CHECK_FALSE(as_prime(ideal_of(r, {{2, 0, 0}, {0, 1, 0}})).has_value());
    CHECK_FALSE(as_prime(ideal_of(r, {{1, 1, 0}})).has_value());
    CHECK_FALSE(as_prime(MonomialIdeal::zero(r)).has_value());
    CHECK_FALSE(as_prime(MonomialIdeal::unit(r)).has_value());
}

TEST_CASE("prime basics") {
    Ring r = make_ring({"x", "y", "z"});
    MonomialPrime p = prime_of(r, {0, 2});
    CHECK(p.variables() == std::vector<int>{0, 2});
    CHECK(p.str() == "(x,z)");
    CHECK(p.size() == 2);
    CHECK(p.contains_var(2));
    CHECK_FALSE(p.contains_var(1));
    CHECK(p.subset_of(prime_of(r, {0, 1, 2})));
    CHECK_FALSE(prime_of(r, {0, 1, 2}).subset_of(p));
    CHECK(p.as_ideal() == ideal_of(r, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(prime_sum(prime_of(r, {0}), prime_of(r, {0, 1})) == prime_of(r, {0, 1}));

    CHECK(canonical_less(prime_of(r, {2}), prime_of(r, {0, 1})));
    CHECK(canonical_less(prime_of(r, {0, 1}), prime_of(r, {0, 2})));
    CHECK_FALSE(canonical_less(p, p));

    CHECK_THROWS_AS(prime_of(r, {}), DomainError);
    CHECK_THROWS_AS(prime_of(r, {0, 0}), DomainError);
    CHECK_THROWS_AS(prime_of(r, {2, 0}), DomainError);
    CHECK_THROWS_AS(prime_of(r, {3}), DomainError);
}

TEST_CASE("mixed-ring operations are rejected") {
    Ring r = make_ring({"x", "y"});
    Ring s = make_ring({"x", "y", "z"});
    CHECK_THROWS_AS(mul(mono(r, {1, 0}), mono(s, {1, 0, 0})), DomainError);
    CHECK_THROWS_AS(sum(ideal_of(r, {{1, 0}}), ideal_of(s, {{1, 0, 0}})), DomainError);
}
