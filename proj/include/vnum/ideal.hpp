#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnum/monomial.hpp"

namespace vnum {

class MonomialIdeal;

/// A monomial prime: a nonempty, strictly increasing list of variable
/// indices standing for the ideal generated by those variables.
class MonomialPrime {
public:
    MonomialPrime(Ring ring, std::vector<int> variables);

    const Ring& ring() const { return ring_; }
    const std::vector<int>& variables() const { return vars_; }
    int size() const { return static_cast<int>(vars_.size()); }
    bool contains_var(int index) const;

    /// Set inclusion of the variable lists.
    bool subset_of(const MonomialPrime& other) const;

    MonomialIdeal as_ideal() const;

    bool operator==(const MonomialPrime& other) const;
    bool operator!=(const MonomialPrime& other) const { return !(*this == other); }

    std::string str() const;

private:
    Ring ring_;
    std::vector<int> vars_;
};

/// Cardinality first, then the variable index lists lexicographically.
bool canonical_less(const MonomialPrime& a, const MonomialPrime& b);

/// Prime generated by the union of the variables. Both blocks must share a
/// ring; they need not be disjoint.
MonomialPrime prime_sum(const MonomialPrime& p, const MonomialPrime& q);

/// A monomial ideal held by its unique minimal generating set, sorted
/// canonically. The zero ideal has no generators; the unit ideal has the
/// single generator 1. Equality is generator-list equality.
class MonomialIdeal {
public:
    /// Minimalizes and sorts. Accepts any generating set, including
    /// redundant or duplicate entries.
    MonomialIdeal(Ring ring, std::vector<Monomial> generators);

    static MonomialIdeal zero(Ring ring);
    static MonomialIdeal unit(Ring ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    std::string str() const;

private:
    struct canonical_tag {};
    MonomialIdeal(Ring ring, std::vector<Monomial> gens, canonical_tag);

    Ring ring_;
    std::vector<Monomial> gens_;

    friend MonomialIdeal from_canonical_gens(Ring, std::vector<Monomial>);
};

/// Trusted constructor for generator lists that are already minimal, sorted
/// and deduplicated. Callers inside the library use it to skip a redundant
/// minimalization pass.
MonomialIdeal from_canonical_gens(Ring ring, std::vector<Monomial> gens);

/// The unique minimal generating set of the ideal generated by `gens`:
/// duplicates removed, every monomial divisible by another one dropped.
MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens);

/// Membership: some generator divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

/// Ideal containment: every generator of J lies in I.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// k-th power, k >= 1, by iterated product with minimalization after every
/// step. k = 0 is rejected rather than defaulting to the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int k);

/// Pairwise lcms of the generators.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// (I : v) for a monomial v: generated by lcm(u,v)/v over generators u.
MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& v);

/// (I : J) = intersection of (I : v) over generators v of J. J must be
/// nonzero.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

struct SaturationResult {
    MonomialIdeal ideal;
    /// First t with (I : J^t) = (I : J^(t+1)); 0 when I is already stable.
    int exponent;
};

/// Stable value of the ascending chain I <= (I:J) <= (I:J^2) <= ... The
/// chain is guaranteed to stabilize; the cap exists only to turn a logic
/// bug into a loud error instead of a hang.
SaturationResult saturate(const MonomialIdeal& I, const MonomialIdeal& J);

/// Monomial localization at p: exponents of variables outside p drop to
/// zero, then the image is minimalized. Geometrically this is I S_p ∩ S
/// for squarefree-compatible inputs; for us it is a purely combinatorial
/// operation and the workhorse of the associated-prime test.
MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p);

/// Least generator degree. I must be nonzero and proper.
long long alpha(const MonomialIdeal& I);

/// Union of the generator supports, ascending. I must be nonzero and proper.
std::vector<int> support(const MonomialIdeal& I);

/// Number of minimal generators. I must be nonzero and proper.
int mu(const MonomialIdeal& I);

/// Componentwise max of the generators. I must be nonzero and proper.
Monomial lcm_gens(const MonomialIdeal& I);

/// The prime with the same generators, if every minimal generator is a
/// single variable with exponent 1.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& I);

} // namespace vnum
