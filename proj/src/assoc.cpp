#include "vnum/assoc.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "vnum/kernels.hpp"
#include "vnum/parallel.hpp"

namespace vnum {

PrimeSet::PrimeSet(std::vector<MonomialPrime> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end(),
              static_cast<bool (*)(const MonomialPrime&, const MonomialPrime&)>(canonical_less));
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(const MonomialPrime& p) const {
    return std::binary_search(
        primes_.begin(), primes_.end(), p,
        static_cast<bool (*)(const MonomialPrime&, const MonomialPrime&)>(canonical_less));
}

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
    std::vector<MonomialPrime> all = a.primes();
    all.insert(all.end(), b.primes().begin(), b.primes().end());
    return PrimeSet(std::move(all));
}

namespace detail {

std::vector<Monomial> antichain(std::vector<Monomial> ms) {
    if (ms.empty())
        return ms;
    std::sort(ms.begin(), ms.end(),
              static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    auto keep = kernels::nondominated(ms);
    std::vector<Monomial> out;
    out.reserve(ms.size());
    for (size_t i = 0; i < ms.size(); ++i)
        if (keep[i])
            out.push_back(std::move(ms[i]));
    return out;
}

std::vector<Monomial> colon_var_residues(const MonomialIdeal& I, int var) {
    // For generators u divisible by x, the map u -> u/x preserves both
    // distinctness and incomparability, so the survivors outside I already
    // form an antichain: they are exactly the minimal generators of (I:x)
    // that are not in I.
    std::vector<Monomial> out;
    const Monomial x = Monomial::variable(I.ring(), var);
    for (const auto& u : I.gens()) {
        if (u.exponent(var) <= 0)
            continue;
        Monomial r = colon_part(u, x);
        if (!contains(I, r))
            out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
    return out;
}

std::vector<Monomial> colon_prime_residues(const MonomialIdeal& I, const std::vector<int>& vars) {
    // (I : p) = intersection of the (I : x); working with generators modulo
    // I is exact here because for monomial ideals (A + I) meet (B + I)
    // equals (A meet B) + I, and any lcm against an element of I lands in I.
    std::vector<Monomial> D;
    bool first = true;
    for (int v : vars) {
        std::vector<Monomial> E = colon_var_residues(I, v);
        if (E.empty())
            return {};
        if (first) {
            D = std::move(E);
            first = false;
            continue;
        }
        std::vector<Monomial> next;
        next.reserve(D.size() * E.size());
        for (const auto& d : D)
            for (const auto& e : E) {
                Monomial m = lcm(d, e);
                if (!contains(I, m))
                    next.push_back(std::move(m));
            }
        D = antichain(std::move(next));
        if (D.empty())
            return {};
    }
    return D;
}

namespace {

MonomialIdeal localize_vars(const MonomialIdeal& I, const std::vector<int>& vars) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    const int n = I.ring()->size();
    for (const auto& u : I.gens()) {
        std::vector<Exponent> e(static_cast<size_t>(n), 0);
        for (int v : vars)
            e[static_cast<size_t>(v)] = u.exponent(v);
        gens.push_back(Monomial(I.ring(), std::move(e)));
    }
    return minimalize(I.ring(), std::move(gens));
}

} // namespace

bool candidate_is_associated(const MonomialIdeal& I, const std::vector<int>& vars) {
    MonomialIdeal L = localize_vars(I, vars);
    if (L.is_unit())
        return false;
    return !colon_prime_residues(L, vars).empty();
}

PrimeSet ci_choice_primes(const MonomialIdeal& I) {
    // One variable out of each generator's support, in every possible way.
    // Supports are pairwise disjoint, so each choice is a valid prime.
    std::vector<std::vector<int>> supports;
    for (const auto& u : I.gens())
        supports.push_back(u.support());
    std::vector<MonomialPrime> primes;
    std::vector<size_t> pick(supports.size(), 0);
    while (true) {
        std::vector<int> vars;
        vars.reserve(supports.size());
        for (size_t i = 0; i < supports.size(); ++i)
            vars.push_back(supports[i][pick[i]]);
        std::sort(vars.begin(), vars.end());
        primes.emplace_back(I.ring(), std::move(vars));
        size_t i = 0;
        while (i < supports.size() && ++pick[i] == supports[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == supports.size())
            break;
    }
    return PrimeSet(std::move(primes));
}

} // namespace detail

namespace {

void require_ass_input(const MonomialIdeal& I, const char* op) {
    if (I.is_zero())
        throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit())
        throw DomainError(std::string(op) + ": unit ideal");
}

struct CandidateScan {
    std::vector<int> supp;
    std::vector<std::uint64_t> candidates; // masks over positions in supp
};

CandidateScan enumerate_candidates(const MonomialIdeal& I) {
    CandidateScan scan;
    scan.supp = support(I);
    const int s = static_cast<int>(scan.supp.size());
    if (s > 26)
        throw BudgetError("ass: support too wide for exhaustive candidate enumeration");
    // Position masks of the generator supports; a candidate survives iff it
    // meets every generator, which is exactly I being contained in it.
    std::vector<std::uint64_t> gen_masks;
    gen_masks.reserve(I.gens().size());
    for (const auto& u : I.gens()) {
        std::uint64_t m = 0;
        for (int v : u.support()) {
            auto it = std::lower_bound(scan.supp.begin(), scan.supp.end(), v);
            m |= std::uint64_t(1) << (it - scan.supp.begin());
        }
        gen_masks.push_back(m);
    }
    const std::uint64_t total = std::uint64_t(1) << s;
    for (std::uint64_t cand = 1; cand < total; ++cand) {
        bool ok = true;
        for (std::uint64_t gm : gen_masks)
            if ((gm & cand) == 0) {
                ok = false;
                break;
            }
        if (ok)
            scan.candidates.push_back(cand);
    }
    return scan;
}

std::vector<int> vars_of_mask(const std::vector<int>& supp, std::uint64_t mask) {
    std::vector<int> vars;
    for (size_t j = 0; j < supp.size(); ++j)
        if (mask & (std::uint64_t(1) << j))
            vars.push_back(supp[j]);
    return vars;
}

PrimeSet collect_scan(const MonomialIdeal& I, const CandidateScan& scan,
                      const std::vector<std::uint8_t>& flags) {
    std::vector<MonomialPrime> primes;
    for (size_t i = 0; i < scan.candidates.size(); ++i)
        if (flags[i])
            primes.emplace_back(I.ring(), vars_of_mask(scan.supp, scan.candidates[i]));
    return PrimeSet(std::move(primes));
}

} // namespace

PrimeSet ass_serial(const MonomialIdeal& I) {
    require_ass_input(I, "ass");
    CandidateScan scan = enumerate_candidates(I);
    std::vector<std::uint8_t> flags(scan.candidates.size(), 0);
    for (size_t i = 0; i < scan.candidates.size(); ++i)
        flags[i] =
            detail::candidate_is_associated(I, vars_of_mask(scan.supp, scan.candidates[i]));
    return collect_scan(I, scan, flags);
}

PrimeSet ass_parallel(const MonomialIdeal& I) {
    require_ass_input(I, "ass");
    CandidateScan scan = enumerate_candidates(I);
    const long long n = static_cast<long long>(scan.candidates.size());
    std::vector<std::uint8_t> flags(scan.candidates.size(), 0);
    std::exception_ptr err;
    const int jobs = workers_for(static_cast<int>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < n; ++i) {
        try {
            flags[static_cast<size_t>(i)] = detail::candidate_is_associated(
                I, vars_of_mask(scan.supp, scan.candidates[static_cast<size_t>(i)]));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!err)
                    err = std::current_exception();
            }
        }
    }
    (void)jobs;
    if (err)
        std::rethrow_exception(err);
    return collect_scan(I, scan, flags);
}

PrimeSet ass(const MonomialIdeal& I) {
    require_ass_input(I, "ass");
    if (workers_for(64) > 1)
        return ass_parallel(I);
    return ass_serial(I);
}

// -------------------------------------------------------------------------
// Power / prime-set caches.

namespace {

struct CacheKey {
    std::vector<std::string> vars;
    std::vector<std::vector<Exponent>> exps;

    bool operator<(const CacheKey& other) const {
        return std::tie(vars, exps) < std::tie(other.vars, other.exps);
    }
};

CacheKey cache_key(const MonomialIdeal& I) {
    CacheKey k;
    k.vars = I.ring()->variables();
    k.exps.reserve(I.gens().size());
    for (const auto& g : I.gens())
        k.exps.push_back(g.exponents());
    return k;
}

constexpr size_t kCacheCap = 4096;

std::mutex g_cache_mutex;
std::map<std::pair<CacheKey, int>, MonomialIdeal> g_power_cache;
std::map<std::pair<CacheKey, int>, PrimeSet> g_ass_cache;

} // namespace

MonomialIdeal power_cached(const MonomialIdeal& I, int k) {
    if (k < 1)
        throw DomainError("power: exponent must be >= 1");
    if (k == 1)
        return I;
    CacheKey key = cache_key(I);
    int base = 1;
    MonomialIdeal cur = I;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        for (int j = k; j >= 2; --j) {
            auto it = g_power_cache.find({key, j});
            if (it != g_power_cache.end()) {
                base = j;
                cur = it->second;
                break;
            }
        }
    }
    for (int j = base + 1; j <= k; ++j) {
        cur = product(cur, I);
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (g_power_cache.size() >= kCacheCap)
            g_power_cache.clear();
        g_power_cache.emplace(std::make_pair(key, j), cur);
    }
    return cur;
}

PrimeSet ass_power(const MonomialIdeal& I, int k) {
    require_ass_input(I, "ass_power");
    if (k < 1)
        throw DomainError("ass_power: exponent must be >= 1");
    CacheKey key = cache_key(I);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_ass_cache.find({key, k});
        if (it != g_ass_cache.end())
            return it->second;
    }
    PrimeSet result = ass(power_cached(I, k));
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_ass_cache.size() >= kCacheCap)
        g_ass_cache.clear();
    g_ass_cache.emplace(std::make_pair(key, k), result);
    return result;
}

void clear_caches() {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        g_power_cache.clear();
        g_ass_cache.clear();
    }
    detail::clear_split_memo();
}

// -------------------------------------------------------------------------
// Stabilization scans.

namespace {

void require_sum_pair(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
    require_same_ring(I.ring(), J.ring(), op);
    require_ass_input(I, op);
    require_ass_input(J, op);
    std::vector<int> si = support(I), sj = support(J);
    std::vector<int> both;
    std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(both));
    if (!both.empty())
        throw DomainError(std::string(op) + ": supports overlap");
}

PrimeSet combine_pairs(const PrimeSet& A, const PrimeSet& B) {
    std::vector<MonomialPrime> out;
    out.reserve(static_cast<size_t>(A.size()) * static_cast<size_t>(B.size()));
    for (const auto& p : A)
        for (const auto& q : B)
            out.push_back(prime_sum(p, q));
    return PrimeSet(std::move(out));
}

/// Ass((parts[i] + ... + parts.back())^k), folding the two-summand identity
/// from the left. Exact for every k; parts must have disjoint supports.
PrimeSet sum_power_rec(const std::vector<MonomialIdeal>& parts, size_t i, int k,
                       std::map<std::pair<size_t, int>, PrimeSet>& memo) {
    if (i + 1 == parts.size())
        return ass_power(parts[i], k);
    auto it = memo.find({i, k});
    if (it != memo.end())
        return it->second;
    PrimeSet acc;
    for (int l = 0; l < k; ++l) {
        PrimeSet left = ass_power(parts[i], k - l);
        PrimeSet right = sum_power_rec(parts, i + 1, l + 1, memo);
        acc = set_union(acc, combine_pairs(left, right));
    }
    memo.emplace(std::make_pair(i, k), acc);
    return acc;
}

int tail_match_start(const std::vector<PrimeSet>& per_k, const PrimeSet& target) {
    // Least k (1-based) with per_k[j] == target for all j >= k; 0 if none.
    int from = 0;
    for (int k = static_cast<int>(per_k.size()); k >= 1; --k) {
        if (per_k[static_cast<size_t>(k - 1)] != target)
            break;
        from = k;
    }
    return from;
}

} // namespace

StabilizationReport ass_star(const MonomialIdeal& I, int k_max) {
    require_ass_input(I, "ass_star");
    if (k_max < 1)
        throw DomainError("ass_star: k_max must be >= 1");
    StabilizationReport rep;
    if (is_complete_intersection(I)) {
        // Powers of a complete intersection keep the associated primes of
        // the ideal itself, so the union is exact at every window size.
        PrimeSet p = detail::ci_choice_primes(I);
        rep.per_k.assign(static_cast<size_t>(k_max), p);
        rep.stable_set = p;
        rep.stable_from = 1;
        rep.verified = true;
        return rep;
    }
    std::vector<MonomialIdeal> parts = components(I);
    if (parts.size() >= 2) {
        std::map<std::pair<size_t, int>, PrimeSet> memo;
        for (int k = 1; k <= k_max; ++k)
            rep.per_k.push_back(sum_power_rec(parts, 0, k, memo));
    } else {
        for (int k = 1; k <= k_max; ++k)
            rep.per_k.push_back(ass_power(I, k));
    }
    PrimeSet u;
    for (const auto& s : rep.per_k)
        u = set_union(u, s);
    rep.stable_set = std::move(u);
    rep.stable_from = tail_match_start(rep.per_k, rep.stable_set);
    rep.verified = false;
    return rep;
}

StabilizationReport ass_infty(const MonomialIdeal& I, const AssConfig& cfg) {
    require_ass_input(I, "ass_infty");
    if (cfg.window < 2)
        throw DomainError("ass_infty: window must be >= 2");
    if (cfg.window > cfg.k_max)
        throw DomainError("ass_infty: window exceeds k_max");
    StabilizationReport rep;
    if (is_complete_intersection(I)) {
        PrimeSet p = detail::ci_choice_primes(I);
        rep.per_k.assign(static_cast<size_t>(cfg.k_max), p);
        rep.stable_set = p;
        rep.stable_from = 1;
        rep.verified = true;
        return rep;
    }
    std::vector<MonomialIdeal> parts = components(I);
    if (parts.size() >= 2) {
        // Stable set by the sum identity: pair the windowed union of one
        // side with the eventual set of the other. The per-k sets are still
        // exact, so the tail comparison below reports an honest onset.
        std::map<std::pair<size_t, int>, PrimeSet> memo;
        for (int k = 1; k <= cfg.k_max; ++k)
            rep.per_k.push_back(sum_power_rec(parts, 0, k, memo));
        StabilizationReport star_r = ass_star(parts.back(), cfg.k_max);
        StabilizationReport inf_r = ass_infty(parts.back(), cfg);
        PrimeSet stable = inf_r.stable_set;
        PrimeSet star = star_r.stable_set;
        bool verified = star_r.verified && inf_r.verified;
        for (size_t i = parts.size() - 1; i-- > 0;) {
            StabilizationReport star_l = ass_star(parts[i], cfg.k_max);
            StabilizationReport inf_l = ass_infty(parts[i], cfg);
            stable = set_union(combine_pairs(star_l.stable_set, stable),
                               combine_pairs(inf_l.stable_set, star));
            star = combine_pairs(star_l.stable_set, star);
            verified = verified && star_l.verified && inf_l.verified;
        }
        rep.stable_set = std::move(stable);
        rep.stable_from = tail_match_start(rep.per_k, rep.stable_set);
        rep.verified = verified;
        return rep;
    }
    for (int k = 1; k <= cfg.k_max; ++k)
        rep.per_k.push_back(ass_power(I, k));
    rep.stable_set = rep.per_k.back();
    int from = tail_match_start(rep.per_k, rep.stable_set);
    int run = cfg.k_max - from + 1;
    rep.stable_from = (from > 0 && run >= cfg.window) ? from : 0;
    rep.verified = false;
    return rep;
}

PrimeSet ass_sum_power(const MonomialIdeal& I, const MonomialIdeal& J, int k) {
    require_sum_pair(I, J, "ass_sum_power");
    if (k < 1)
        throw DomainError("ass_sum_power: exponent must be >= 1");
    PrimeSet acc;
    for (int l = 0; l < k; ++l)
        acc = set_union(acc, combine_pairs(ass_power(I, k - l), ass_power(J, l + 1)));
    return acc;
}

PrimeSet ass_product(const MonomialIdeal& I, const MonomialIdeal& J, int k) {
    require_sum_pair(I, J, "ass_product");
    if (k < 1)
        throw DomainError("ass_product: exponent must be >= 1");
    return set_union(ass_power(I, k), ass_power(J, k));
}

CertifiedPrimeSet ass_sum_infty(const MonomialIdeal& I, const MonomialIdeal& J,
                                const AssConfig& cfg) {
    require_sum_pair(I, J, "ass_sum_infty");
    StabilizationReport star_i = ass_star(I, cfg.k_max);
    StabilizationReport star_j = ass_star(J, cfg.k_max);
    StabilizationReport inf_i = ass_infty(I, cfg);
    StabilizationReport inf_j = ass_infty(J, cfg);
    CertifiedPrimeSet out;
    out.primes = set_union(combine_pairs(star_i.stable_set, inf_j.stable_set),
                           combine_pairs(inf_i.stable_set, star_j.stable_set));
    out.verified =
        star_i.verified && star_j.verified && inf_i.verified && inf_j.verified;
    return out;
}

} // namespace vnum
