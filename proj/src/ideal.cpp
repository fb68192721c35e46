#include "vnum/ideal.hpp"

#include <algorithm>

#include "vnum/kernels.hpp"

namespace vnum {

MonomialPrime::MonomialPrime(Ring ring, std::vector<int> variables)
    : ring_(std::move(ring)), vars_(std::move(variables)) {
    if (!ring_)
        throw DomainError("prime without a ring");
    if (vars_.empty())
        throw DomainError("a monomial prime needs at least one variable");
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] < 0 || vars_[i] >= ring_->size())
            throw DomainError("prime variable index out of range");
        if (i > 0 && vars_[i] <= vars_[i - 1])
            throw DomainError("prime variables must be strictly increasing");
    }
}

bool MonomialPrime::contains_var(int index) const {
    return std::binary_search(vars_.begin(), vars_.end(), index);
}

bool MonomialPrime::subset_of(const MonomialPrime& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

MonomialIdeal MonomialPrime::as_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(vars_.size());
    for (int v : vars_)
        gens.push_back(Monomial::variable(ring_, v));
    return from_canonical_gens(ring_, std::move(gens));
}

bool MonomialPrime::operator==(const MonomialPrime& other) const {
    return same_ring(ring_, other.ring_) && vars_ == other.vars_;
}

std::string MonomialPrime::str() const {
    std::string out = "(";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            out += ",";
        out += ring_->name(vars_[i]);
    }
    out += ")";
    return out;
}

bool canonical_less(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.variables() < b.variables();
}

MonomialPrime prime_sum(const MonomialPrime& p, const MonomialPrime& q) {
    require_same_ring(p.ring(), q.ring(), "prime_sum");
    std::vector<int> vars;
    std::set_union(p.variables().begin(), p.variables().end(), q.variables().begin(),
                   q.variables().end(), std::back_inserter(vars));
    return MonomialPrime(p.ring(), std::move(vars));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(std::move(ring), std::move(generators))) {}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens, canonical_tag)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(Ring ring) {
    return MonomialIdeal(std::move(ring), {}, canonical_tag{});
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    std::vector<Monomial> g{Monomial::unit(ring)};
    return MonomialIdeal(std::move(ring), std::move(g), canonical_tag{});
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

std::string MonomialIdeal::str() const {
    if (is_zero())
        return "(0)";
    std::string out = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].str();
    }
    out += ")";
    return out;
}

MonomialIdeal from_canonical_gens(Ring ring, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(ring), std::move(gens), MonomialIdeal::canonical_tag{});
}

MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens) {
    if (!ring)
        throw DomainError("ideal without a ring");
    for (const auto& g : gens)
        require_same_ring(ring, g.ring(), "minimalize");
    if (gens.empty())
        return MonomialIdeal::zero(std::move(ring));
    std::sort(gens.begin(), gens.end(), static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto keep = kernels::nondominated(gens);
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        if (keep[i])
            out.push_back(std::move(gens[i]));
    return from_canonical_gens(std::move(ring), std::move(out));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    require_same_ring(I.ring(), m.ring(), "contains");
    for (const auto& g : I.gens()) {
        if (g.degree() > m.degree())
            return false; // generators are degree-sorted
        if (g.divides(m))
            return true;
    }
    return false;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "contains");
    for (const auto& g : J.gens())
        if (!contains(I, g))
            return false;
    return true;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "sum");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "product");
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal::zero(I.ring());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& u : I.gens())
        for (const auto& v : J.gens())
            gens.push_back(mul(u, v));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
    if (k < 1)
        throw DomainError("power: exponent must be >= 1");
    MonomialIdeal acc = I;
    for (int i = 1; i < k; ++i)
        acc = product(acc, I);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal::zero(I.ring());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& u : I.gens())
        for (const auto& v : J.gens())
            gens.push_back(lcm(u, v));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& v) {
    require_same_ring(I.ring(), v.ring(), "colon_monomial");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& u : I.gens())
        gens.push_back(colon_part(u, v));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "colon_ideal");
    if (J.is_zero())
        throw DomainError("colon_ideal: denominator is the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(I.ring());
    for (const auto& v : J.gens()) {
        MonomialIdeal c = colon_monomial(I, v);
        acc = first ? std::move(c) : intersect(acc, c);
        first = false;
    }
    return acc;
}

SaturationResult saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "saturate");
    if (J.is_zero())
        throw DomainError("saturate: denominator is the zero ideal");
    if (I.is_zero() || I.is_unit())
        return {I, 0};
    Exponent max_exp = 0;
    for (const auto& g : I.gens())
        for (Exponent e : g.exponents())
            max_exp = std::max(max_exp, e);
    const int cap = 10 * (1 + static_cast<int>(max_exp));
    MonomialIdeal cur = I;
    for (int t = 0; t <= cap; ++t) {
        MonomialIdeal next = colon_ideal(cur, J);
        if (next == cur)
            return {std::move(cur), t};
        cur = std::move(next);
    }
    // The chain of colons is ascending and the ambient ring is Noetherian;
    // reaching the cap means the iteration itself is broken.
    throw BudgetError("saturate: chain did not stabilize within the iteration cap");
}

MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p) {
    require_same_ring(I.ring(), p.ring(), "localize");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    const int n = I.ring()->size();
    for (const auto& u : I.gens()) {
        std::vector<Exponent> e(static_cast<size_t>(n), 0);
        for (int v : p.variables())
            e[static_cast<size_t>(v)] = u.exponent(v);
        gens.push_back(Monomial(I.ring(), std::move(e)));
    }
    return minimalize(I.ring(), std::move(gens));
}

namespace {
void require_nonzero_proper(const MonomialIdeal& I, const char* op) {
    if (I.is_zero())
        throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit())
        throw DomainError(std::string(op) + ": unit ideal");
}
} // namespace

long long alpha(const MonomialIdeal& I) {
    require_nonzero_proper(I, "alpha");
    return I.gens().front().degree(); // generators are degree-sorted
}

std::vector<int> support(const MonomialIdeal& I) {
    require_nonzero_proper(I, "support");
    const int n = I.ring()->size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& u : I.gens())
        for (int v : u.support())
            seen[static_cast<size_t>(v)] = 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (seen[static_cast<size_t>(i)])
            out.push_back(i);
    return out;
}

int mu(const MonomialIdeal& I) {
    require_nonzero_proper(I, "mu");
    return static_cast<int>(I.gens().size());
}

Monomial lcm_gens(const MonomialIdeal& I) {
    require_nonzero_proper(I, "lcm_gens");
    Monomial acc = I.gens().front();
    for (size_t i = 1; i < I.gens().size(); ++i)
        acc = lcm(acc, I.gens()[i]);
    return acc;
}

std::optional<MonomialPrime> as_prime(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        return std::nullopt;
    std::vector<int> vars;
    vars.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        if (g.degree() != 1)
            return std::nullopt;
        vars.push_back(g.support().front());
    }
    std::sort(vars.begin(), vars.end());
    return MonomialPrime(I.ring(), std::move(vars));
}

} // namespace vnum
