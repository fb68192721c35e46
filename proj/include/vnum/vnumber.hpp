#pragma once

#include <optional>
#include <vector>

#include "vnum/assoc.hpp"

namespace vnum {

/// v-number of I at the associated prime p: the least degree of a monomial
/// f with (I : f) = p. DomainError when p is not associated to I.
long long v_local(const MonomialIdeal& I, const MonomialPrime& p);

/// Same value; ass(I) supplied by the caller so the saturation filter can
/// be skipped when no associated prime strictly contains p, and otherwise
/// restricted to the variables those primes add.
long long v_local(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& assI);

struct VNumber {
    long long value = 0;
    MonomialPrime prime; // attaining prime, first in canonical order on ties
};

/// min over the associated primes of the local v-numbers.
long long v_number(const MonomialIdeal& I);
VNumber v_number_witness(const MonomialIdeal& I);

/// v-number with a precomputed ass(I); the scan over primes is parallel,
/// the winning prime is canonical regardless of thread schedule.
VNumber v_number_with(const MonomialIdeal& I, const PrimeSet& assI);

/// Eventually linear description v(I^k) = slope*k + intercept for k >= vstab.
/// certified marks the structural fast paths; a heuristic fit extrapolates
/// the last two table entries and is reported only when the third-to-last
/// entry confirms the line.
struct VFit {
    long long slope = 0;
    long long intercept = 0;
    int vstab = 1;
    bool certified = false;
};

struct VTable {
    std::vector<long long> per_k; // per_k[i] = v(I^(i+1))
    std::optional<VFit> fit;
};

/// Least-degree table of v(I^k) for 1 <= k <= k_max, plus a linear fit.
/// Complete intersections get slope alpha(I) and intercept
/// (sum of generator degrees) - alpha - mu, exact from k = 1; equigenerated
/// ideals with a generator splitting get slope alpha and intercept -1.
VTable v_function(const MonomialIdeal& I, int k_max);

/// Heuristic fit over an already computed table; nullopt when fewer than
/// three entries or the third-to-last entry is off the extrapolated line.
std::optional<VFit> fit_linear(const std::vector<long long>& per_k);

/// v-number of (I+J)^k for ideals in the same ring with disjoint supports,
/// computed without expanding the power of the sum:
/// min over 0 <= l < k of v(I^(k-l)) + v(J^(l+1)).
long long v_sum(const MonomialIdeal& I, const MonomialIdeal& J, int k);

/// Local version at the prime p+q with p associated to some I^(k-l) and q
/// to the matching J^(l+1); DomainError when no l in range qualifies.
long long v_sum_local(const MonomialIdeal& I, const MonomialIdeal& J,
                      const MonomialPrime& p, const MonomialPrime& q, int k);

/// v-number of (I*J)^k for disjoint supports:
/// min of v(I^k) + k*alpha(J) and v(J^k) + k*alpha(I), exact for all k >= 1.
long long v_product(const MonomialIdeal& I, const MonomialIdeal& J, int k);

/// Local version at P, which must be associated to I^k or J^k.
long long v_product_local(const MonomialIdeal& I, const MonomialIdeal& J,
                          const MonomialPrime& P, int k);

} // namespace vnum
