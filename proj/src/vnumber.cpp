#include "vnum/vnumber.hpp"

#include <algorithm>
#include <limits>

#include "vnum/parallel.hpp"

namespace vnum {

namespace {

void require_proper(const MonomialIdeal& I, const char* op) {
    if (I.is_zero())
        throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit())
        throw DomainError(std::string(op) + ": unit ideal");
}

/// Extra minimal generators, outside I, of the saturation of I by the
/// product of the given variables. Saturating by a product is the
/// composition of the one-variable saturations; each of those is a colon
/// chain run to its fixpoint. Everything is carried modulo I, which is
/// exact because lcms against elements of I stay in I.
std::vector<Monomial> saturation_extras(const MonomialIdeal& I, const std::vector<int>& vars) {
    std::vector<Monomial> G;
    for (int x : vars) {
        const std::vector<Monomial> E = detail::colon_var_residues(I, x);
        const Monomial xm = Monomial::variable(I.ring(), x);
        while (true) {
            std::vector<Monomial> cand = E;
            cand.reserve(E.size() + G.size());
            for (const auto& g : G) {
                Monomial r = colon_part(g, xm);
                if (!contains(I, r))
                    cand.push_back(std::move(r));
            }
            std::vector<Monomial> next = detail::antichain(std::move(cand));
            if (next == G)
                break;
            G = std::move(next);
        }
    }
    return G;
}

long long v_local_impl(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet* assI) {
    require_proper(I, "v_local");
    require_same_ring(I.ring(), p.ring(), "v_local");
    // Minimal generators of (I:p) outside I; every monomial f with
    // (I:f) = p is a multiple of one of them of no smaller degree.
    std::vector<Monomial> D = detail::colon_prime_residues(I, p.variables());
    if (D.empty())
        throw DomainError("v_local: prime is not associated");
    // f qualifies iff (I:f) is also contained in p, i.e. f survives the
    // saturation of I by the variables outside p. When the caller knows
    // ass(I), only variables added by strictly larger associated primes
    // can matter; with no such prime every d in D qualifies.
    std::vector<int> sat_vars;
    if (assI) {
        std::vector<char> seen(static_cast<size_t>(I.ring()->size()), 0);
        for (const auto& q : *assI) {
            if (!(p.variables().size() < q.variables().size() && p.subset_of(q)))
                continue;
            for (int v : q.variables())
                if (!p.contains_var(v))
                    seen[static_cast<size_t>(v)] = 1;
        }
        for (int v = 0; v < I.ring()->size(); ++v)
            if (seen[static_cast<size_t>(v)])
                sat_vars.push_back(v);
        if (sat_vars.empty())
            return D.front().degree();
    } else {
        for (int v : support(I))
            if (!p.contains_var(v))
                sat_vars.push_back(v);
    }
    const std::vector<Monomial> G = saturation_extras(I, sat_vars);
    for (const auto& d : D) {
        bool saturated = false;
        for (const auto& g : G)
            if (g.divides(d)) {
                saturated = true;
                break;
            }
        if (!saturated)
            return d.degree();
    }
    throw DomainError("v_local: prime is not associated");
}

} // namespace

long long v_local(const MonomialIdeal& I, const MonomialPrime& p) {
    return v_local_impl(I, p, nullptr);
}

long long v_local(const MonomialIdeal& I, const MonomialPrime& p, const PrimeSet& assI) {
    return v_local_impl(I, p, &assI);
}

VNumber v_number_with(const MonomialIdeal& I, const PrimeSet& assI) {
    require_proper(I, "v_number");
    if (assI.empty())
        throw DomainError("v_number: empty prime set");
    const auto& primes = assI.primes();
    const long long n = static_cast<long long>(primes.size());
    std::vector<long long> vals(primes.size(), 0);
    std::exception_ptr err;
    const int jobs = workers_for(static_cast<int>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < n; ++i) {
        try {
            vals[static_cast<size_t>(i)] = v_local(I, primes[static_cast<size_t>(i)], assI);
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
    size_t best = 0;
    for (size_t i = 1; i < primes.size(); ++i)
        if (vals[i] < vals[best])
            best = i;
    return VNumber{vals[best], primes[best]};
}

VNumber v_number_witness(const MonomialIdeal& I) {
    require_proper(I, "v_number");
    return v_number_with(I, ass(I));
}

long long v_number(const MonomialIdeal& I) { return v_number_witness(I).value; }

std::optional<VFit> fit_linear(const std::vector<long long>& per_k) {
    if (per_k.size() < 3)
        return std::nullopt;
    const long long kmax = static_cast<long long>(per_k.size());
    const long long a = per_k[per_k.size() - 1] - per_k[per_k.size() - 2];
    const long long b = per_k[per_k.size() - 1] - a * kmax;
    if (per_k[per_k.size() - 3] != a * (kmax - 2) + b)
        return std::nullopt;
    VFit fit;
    fit.slope = a;
    fit.intercept = b;
    fit.certified = false;
    int vstab = static_cast<int>(kmax);
    for (int k = static_cast<int>(kmax); k >= 1; --k) {
        if (per_k[static_cast<size_t>(k - 1)] != a * k + b)
            break;
        vstab = k;
    }
    fit.vstab = vstab;
    return fit;
}

VTable v_function(const MonomialIdeal& I, int k_max) {
    require_proper(I, "v_function");
    if (k_max < 1)
        throw DomainError("v_function: k_max must be >= 1");
    VTable table;
    table.per_k.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k)
        table.per_k.push_back(v_number_with(power_cached(I, k), ass_power(I, k)).value);
    if (is_complete_intersection(I)) {
        long long sumdeg = 0;
        for (const auto& g : I.gens())
            sumdeg += g.degree();
        VFit fit;
        fit.slope = alpha(I);
        fit.intercept = sumdeg - alpha(I) - static_cast<long long>(mu(I));
        fit.vstab = 1;
        fit.certified = true;
        table.fit = fit;
    } else if (is_equigenerated(I) && vertex_split(I)) {
        VFit fit;
        fit.slope = alpha(I);
        fit.intercept = -1;
        fit.vstab = 1;
        fit.certified = true;
        table.fit = fit;
    } else {
        table.fit = fit_linear(table.per_k);
    }
    return table;
}

namespace {

void require_disjoint_pair(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
    require_same_ring(I.ring(), J.ring(), op);
    require_proper(I, op);
    require_proper(J, op);
    std::vector<int> si = support(I), sj = support(J);
    std::vector<int> both;
    std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(both));
    if (!both.empty())
        throw DomainError(std::string(op) + ": supports overlap");
}

} // namespace

long long v_sum(const MonomialIdeal& I, const MonomialIdeal& J, int k) {
    require_disjoint_pair(I, J, "v_sum");
    if (k < 1)
        throw DomainError("v_sum: exponent must be >= 1");
    const long long ai = alpha(I), aj = alpha(J);
    // Each term is bounded below by the degree floor of its two powers, so
    // terms are visited by ascending bound and the scan stops as soon as
    // the best value seen cannot be beaten.
    std::vector<std::pair<long long, int>> order;
    for (int l = 0; l < k; ++l)
        order.emplace_back(ai * (k - l) - 1 + aj * (l + 1) - 1, l);
    std::sort(order.begin(), order.end());
    long long best = std::numeric_limits<long long>::max();
    bool have = false;
    for (const auto& [bound, l] : order) {
        if (have && best <= bound)
            break;
        const long long term =
            v_number_with(power_cached(I, k - l), ass_power(I, k - l)).value +
            v_number_with(power_cached(J, l + 1), ass_power(J, l + 1)).value;
        if (!have || term < best) {
            best = term;
            have = true;
        }
    }
    return best;
}

long long v_sum_local(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialPrime& p,
                      const MonomialPrime& q, int k) {
    require_disjoint_pair(I, J, "v_sum_local");
    if (k < 1)
        throw DomainError("v_sum_local: exponent must be >= 1");
    require_same_ring(I.ring(), p.ring(), "v_sum_local");
    require_same_ring(J.ring(), q.ring(), "v_sum_local");
    const long long ai = alpha(I), aj = alpha(J);
    std::vector<std::pair<long long, int>> order;
    for (int l = 0; l < k; ++l)
        order.emplace_back(ai * (k - l) - 1 + aj * (l + 1) - 1, l);
    std::sort(order.begin(), order.end());
    long long best = std::numeric_limits<long long>::max();
    bool have = false;
    for (const auto& [bound, l] : order) {
        if (have && best <= bound)
            break;
        const PrimeSet AI = ass_power(I, k - l);
        if (!AI.contains(p))
            continue;
        const PrimeSet AJ = ass_power(J, l + 1);
        if (!AJ.contains(q))
            continue;
        const long long term =
            v_local(power_cached(I, k - l), p, AI) + v_local(power_cached(J, l + 1), q, AJ);
        if (!have || term < best) {
            best = term;
            have = true;
        }
    }
    if (!have)
        throw DomainError("v_sum_local: prime pair not associated at any split");
    return best;
}

long long v_product(const MonomialIdeal& I, const MonomialIdeal& J, int k) {
    require_disjoint_pair(I, J, "v_product");
    if (k < 1)
        throw DomainError("v_product: exponent must be >= 1");
    const long long left =
        v_number_with(power_cached(I, k), ass_power(I, k)).value + alpha(J) * k;
    const long long right =
        v_number_with(power_cached(J, k), ass_power(J, k)).value + alpha(I) * k;
    return std::min(left, right);
}

long long v_product_local(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialPrime& P,
                          int k) {
    require_disjoint_pair(I, J, "v_product_local");
    if (k < 1)
        throw DomainError("v_product_local: exponent must be >= 1");
    require_same_ring(I.ring(), P.ring(), "v_product_local");
    long long best = std::numeric_limits<long long>::max();
    bool have = false;
    const PrimeSet AI = ass_power(I, k);
    if (AI.contains(P)) {
        best = std::min(best, v_local(power_cached(I, k), P, AI) + alpha(J) * k);
        have = true;
    }
    const PrimeSet AJ = ass_power(J, k);
    if (AJ.contains(P)) {
        best = std::min(best, v_local(power_cached(J, k), P, AJ) + alpha(I) * k);
        have = true;
    }
    if (!have)
        throw DomainError("v_product_local: prime not associated to either power");
    return best;
}

} // namespace vnum
