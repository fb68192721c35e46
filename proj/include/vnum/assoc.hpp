#pragma once

#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/recognize.hpp"

namespace vnum {

/// Canonically sorted, duplicate-free set of monomial primes.
class PrimeSet {
public:
    PrimeSet() = default;
    explicit PrimeSet(std::vector<MonomialPrime> primes);

    const std::vector<MonomialPrime>& primes() const { return primes_; }
    int size() const { return static_cast<int>(primes_.size()); }
    bool empty() const { return primes_.empty(); }
    bool contains(const MonomialPrime& p) const;

    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }

    bool operator==(const PrimeSet& other) const { return primes_ == other.primes_; }
    bool operator!=(const PrimeSet& other) const { return !(*this == other); }

private:
    std::vector<MonomialPrime> primes_;
};

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b);

/// Exact associated primes of a proper nonzero monomial ideal: the primes
/// p inside supp(I) with I contained in p whose localization has a nonzero
/// socle, i.e. colon_ideal(localize(I,p), p) != localize(I,p). Candidates
/// are the subsets of supp(I); the scan over them is data-parallel.
PrimeSet ass(const MonomialIdeal& I);

/// Reference single-thread scan; same output as ass() always.
PrimeSet ass_serial(const MonomialIdeal& I);

/// OpenMP scan regardless of input size.
PrimeSet ass_parallel(const MonomialIdeal& I);

/// ass(power(I,k)) with powers and prime sets cached per (ideal, k).
PrimeSet ass_power(const MonomialIdeal& I, int k);

/// Cached power(I, k); every intermediate power is cached as well.
MonomialIdeal power_cached(const MonomialIdeal& I, int k);

/// Drops all memoized powers, prime sets and splitting witnesses. Only
/// needed by benchmarks that want cold-cache timings.
void clear_caches();

struct AssConfig {
    int k_max = 8;
    /// Number of consecutive equal tail sets required before the windowed
    /// scan reports a stabilization point.
    int window = 2;
};

/// Per-k associated primes plus a stabilization summary. per_k[i] is the
/// set for exponent i+1; it may be empty when a structural identity
/// supplied stable_set without per-k computation. stable_from is the least
/// k from which every computed set equals stable_set, and 0 when no such k
/// was detected in range. verified stays false unless a structural result
/// (complete intersection, or the component-sum identity with certified
/// parts) guarantees the stable set.
struct StabilizationReport {
    std::vector<PrimeSet> per_k;
    PrimeSet stable_set;
    int stable_from = 0;
    bool verified = false;
};

/// Union of ass(I^k) over 1 <= k <= k_max. Heuristic from below: a prime
/// joining only past k_max is missed, hence verified=false on the generic
/// path.
StabilizationReport ass_star(const MonomialIdeal& I, int k_max);

/// Windowed estimate of the eventually constant value of ass(I^k).
StabilizationReport ass_infty(const MonomialIdeal& I, const AssConfig& cfg = {});

/// Associated primes of (I+J)^k for ideals with disjoint supports:
/// the union over 0 <= l < k of { p+q : p in ass(I^(k-l)), q in ass(J^(l+1)) }.
PrimeSet ass_sum_power(const MonomialIdeal& I, const MonomialIdeal& J, int k);

/// Associated primes of (I*J)^k for ideals with disjoint supports:
/// ass(I^k) united with ass(J^k), for every k >= 1.
PrimeSet ass_product(const MonomialIdeal& I, const MonomialIdeal& J, int k);

struct CertifiedPrimeSet {
    PrimeSet primes;
    bool verified = false;
};

/// Stable associated primes of (I+J)^k for k >> 0, assembled as
/// { p+q : p in ass*(I), q in ass-infinity(J) } union the symmetric half.
/// verified only when every ingredient set was structurally certified.
CertifiedPrimeSet ass_sum_infty(const MonomialIdeal& I, const MonomialIdeal& J,
                                const AssConfig& cfg = {});

namespace detail {

/// Sort canonically, dedupe, drop dominated entries; the list analogue of
/// minimalize.
std::vector<Monomial> antichain(std::vector<Monomial> ms);

/// Minimal generators of (I : x_var) that lie outside I.
std::vector<Monomial> colon_var_residues(const MonomialIdeal& I, int var);

/// Minimal generators of (I : p_vars) that lie outside I, computed as an
/// iterated intersection of the per-variable residues; everything that
/// falls back into I is discarded on the way. Empty iff (I : p) = I.
std::vector<Monomial> colon_prime_residues(const MonomialIdeal& I, const std::vector<int>& vars);

/// Candidate check used by the scan: is the maximal ideal of the
/// localization at `vars` associated to localize(I, vars)?
bool candidate_is_associated(const MonomialIdeal& I, const std::vector<int>& vars);

/// Associated primes of a complete intersection (also of all its powers):
/// all ways of picking one variable from each generator's support.
PrimeSet ci_choice_primes(const MonomialIdeal& I);

} // namespace detail

} // namespace vnum
