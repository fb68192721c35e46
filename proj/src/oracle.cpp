#include "vnum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace vnum {

WitnessRecord::WitnessRecord(const MonomialIdeal& I, MonomialPrime p, Monomial f)
    : prime(std::move(p)), witness(std::move(f)), degree(witness.degree()) {
    auto colon = as_prime(colon_monomial(I, witness));
    if (!colon || *colon != prime)
        throw DomainError("WitnessRecord: colon of witness is not the prime");
}

namespace {

void require_oracle_input(const MonomialIdeal& I, const char* op) {
    if (I.is_zero())
        throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit())
        throw DomainError(std::string(op) + ": unit ideal");
}

/// Visit the divisors of lcm_gens(I) by ascending degree, canonically
/// within each degree shell. The visitor returns false to stop early.
void walk_divisors(const MonomialIdeal& I, long long budget, const char* op,
                   const std::function<bool(const Monomial&)>& visit) {
    const Monomial L = lcm_gens(I);
    const auto& M = L.exponents();
    long long count = 1;
    for (Exponent e : M) {
        count *= static_cast<long long>(e) + 1;
        if (count > budget)
            throw BudgetError(std::string(op) + ": divisor budget exceeded");
    }
    const size_t n = M.size();
    std::vector<long long> suffix(n + 1, 0);
    for (size_t i = n; i-- > 0;)
        suffix[i] = suffix[i + 1] + M[i];
    std::vector<Exponent> cur(n, 0);
    std::function<bool(size_t, long long)> shell = [&](size_t pos, long long rem) {
        if (rem > suffix[pos])
            return true;
        if (pos == n)
            return visit(Monomial(I.ring(), cur));
        // Larger exponent first keeps the shell in canonical order.
        for (Exponent e = static_cast<Exponent>(std::min<long long>(M[pos], rem)); e >= 0; --e) {
            cur[pos] = e;
            if (!shell(pos + 1, rem - e))
                return false;
        }
        cur[pos] = 0;
        return true;
    };
    for (long long d = 0; d <= L.degree(); ++d)
        if (!shell(0, d))
            return;
}

} // namespace

std::vector<WitnessRecord> oracle_ass(const MonomialIdeal& I, const OracleConfig& cfg) {
    require_oracle_input(I, "oracle_ass");
    struct PrimeLess {
        bool operator()(const MonomialPrime& a, const MonomialPrime& b) const {
            return canonical_less(a, b);
        }
    };
    std::map<MonomialPrime, Monomial, PrimeLess> first_hit;
    walk_divisors(I, cfg.budget, "oracle_ass", [&](const Monomial& f) {
        auto p = as_prime(colon_monomial(I, f));
        if (p && first_hit.find(*p) == first_hit.end())
            first_hit.emplace(*p, f);
        return true;
    });
    std::vector<WitnessRecord> out;
    out.reserve(first_hit.size());
    for (const auto& [p, f] : first_hit)
        out.emplace_back(I, p, f);
    return out;
}

long long oracle_v_local(const MonomialIdeal& I, const MonomialPrime& p,
                         const OracleConfig& cfg) {
    require_oracle_input(I, "oracle_v_local");
    require_same_ring(I.ring(), p.ring(), "oracle_v_local");
    long long found = -1;
    walk_divisors(I, cfg.budget, "oracle_v_local", [&](const Monomial& f) {
        auto q = as_prime(colon_monomial(I, f));
        if (q && *q == p) {
            found = f.degree();
            return false;
        }
        return true;
    });
    if (found < 0)
        throw DomainError("oracle_v_local: prime never realized");
    return found;
}

long long oracle_v(const MonomialIdeal& I, const OracleConfig& cfg) {
    require_oracle_input(I, "oracle_v");
    long long found = -1;
    walk_divisors(I, cfg.budget, "oracle_v", [&](const Monomial& f) {
        if (as_prime(colon_monomial(I, f))) {
            found = f.degree();
            return false;
        }
        return true;
    });
    if (found < 0)
        throw DomainError("oracle_v: no prime colon found");
    return found;
}

} // namespace vnum
