#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnum/ring.hpp"

namespace vnum {

/// Exponents are 32-bit and non-negative. All arithmetic on them is checked.
using Exponent = std::int32_t;

/// A monomial is an exponent vector over its ring. Immutable once built.
/// Degree and a 64-bit support mask are precomputed; for rings with more
/// than 64 variables the mask covers only the first 64 indices, which keeps
/// it usable as a conservative divisibility prefilter.
class Monomial {
public:
    Monomial(Ring ring, std::vector<Exponent> exponents);

    static Monomial unit(Ring ring);
    static Monomial variable(Ring ring, int index, Exponent exp = 1);

    const Ring& ring() const { return ring_; }
    const std::vector<Exponent>& exponents() const { return e_; }
    Exponent exponent(int index) const { return e_[static_cast<size_t>(index)]; }

    long long degree() const { return degree_; }
    std::uint64_t support_mask() const { return mask_; }
    std::vector<int> support() const;

    bool is_unit() const { return degree_ == 0; }

    /// True iff this divides m, i.e. every exponent is <= the one in m.
    bool divides(const Monomial& m) const;

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// "x^2*y", with factors in variable order; the unit renders as "1".
    std::string str() const;

private:
    Ring ring_;
    std::vector<Exponent> e_;
    long long degree_;
    std::uint64_t mask_;
};

/// Product with per-coordinate overflow check.
Monomial mul(const Monomial& a, const Monomial& b);

/// Componentwise max.
Monomial lcm(const Monomial& a, const Monomial& b);

/// lcm(a,b)/b, i.e. max(a_i - b_i, 0) per coordinate. This is the generator
/// map of the colon by a monomial.
Monomial colon_part(const Monomial& a, const Monomial& b);

/// Canonical order: degree first, then larger leading exponent first, so
/// x^2 sorts before x*y and the printed form matches the usual graded
/// reading order. Ideals keep their generators sorted by this.
bool canonical_less(const Monomial& a, const Monomial& b);

} // namespace vnum
