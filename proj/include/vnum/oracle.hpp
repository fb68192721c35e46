#pragma once

#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

struct OracleConfig {
    /// Upper bound on the number of divisors of lcm_gens(I) to enumerate;
    /// BudgetError beyond it.
    long long budget = 2'000'000;
};

/// Witness that (I : witness) = prime; the equality is re-checked on
/// construction.
struct WitnessRecord {
    MonomialPrime prime;
    Monomial witness;
    long long degree;

    WitnessRecord(const MonomialIdeal& I, MonomialPrime p, Monomial f);
};

/// Exhaustive search over the divisors of lcm_gens(I), ascending by degree
/// and canonically within a degree: one minimum-degree witness per prime
/// colon. The prime set equals ass(I): capping a witness exponent at the
/// generator maximum never changes the colon, so divisors of the lcm
/// suffice and the search is exact.
std::vector<WitnessRecord> oracle_ass(const MonomialIdeal& I, const OracleConfig& cfg = {});

/// Least witness degree for p; DomainError when no divisor realizes p.
long long oracle_v_local(const MonomialIdeal& I, const MonomialPrime& p,
                         const OracleConfig& cfg = {});

/// Least witness degree over all primes; stops at the first hit.
long long oracle_v(const MonomialIdeal& I, const OracleConfig& cfg = {});

} // namespace vnum
