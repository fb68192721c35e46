#include "vnum/monomial.hpp"

#include <limits>

namespace vnum {

Monomial::Monomial(Ring ring, std::vector<Exponent> exponents)
    : ring_(std::move(ring)), e_(std::move(exponents)), degree_(0), mask_(0) {
    if (!ring_)
        throw DomainError("monomial without a ring");
    if (static_cast<int>(e_.size()) != ring_->size())
        throw DomainError("exponent vector length does not match the ring");
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0)
            throw DomainError("negative exponent");
        degree_ += e_[i];
        if (e_[i] > 0 && i < 64)
            mask_ |= std::uint64_t(1) << i;
    }
}

Monomial Monomial::unit(Ring ring) {
    if (!ring)
        throw DomainError("monomial without a ring");
    return Monomial(ring, std::vector<Exponent>(static_cast<size_t>(ring->size()), 0));
}

Monomial Monomial::variable(Ring ring, int index, Exponent exp) {
    if (!ring)
        throw DomainError("monomial without a ring");
    if (index < 0 || index >= ring->size())
        throw DomainError("variable index out of range");
    if (exp < 0)
        throw DomainError("negative exponent");
    std::vector<Exponent> e(static_cast<size_t>(ring->size()), 0);
    e[static_cast<size_t>(index)] = exp;
    return Monomial(std::move(ring), std::move(e));
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0)
            s.push_back(static_cast<int>(i));
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    // Mask and degree are necessary conditions; they reject most pairs
    // before the coordinate loop runs.
    if (degree_ > m.degree_ || (mask_ & ~m.mask_) != 0)
        return false;
    const size_t n = e_.size();
    for (size_t i = 0; i < n; ++i)
        if (e_[i] > m.e_[i])
            return false;
    return true;
}

bool Monomial::operator==(const Monomial& other) const {
    return same_ring(ring_, other.ring_) && e_ == other.e_;
}

std::string Monomial::str() const {
    if (is_unit())
        return "1";
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring_->name(static_cast<int>(i));
        if (e_[i] > 1) {
            out += '^';
            out += std::to_string(e_[i]);
        }
    }
    return out;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "mul");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<Exponent> e(ea.size());
    for (size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] > std::numeric_limits<Exponent>::max() - eb[i])
            throw OverflowError("exponent overflow in monomial product");
        e[i] = ea[i] + eb[i];
    }
    return Monomial(a.ring(), std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "lcm");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<Exponent> e(ea.size());
    for (size_t i = 0; i < ea.size(); ++i)
        e[i] = ea[i] > eb[i] ? ea[i] : eb[i];
    return Monomial(a.ring(), std::move(e));
}

Monomial colon_part(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "colon_part");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<Exponent> e(ea.size());
    for (size_t i = 0; i < ea.size(); ++i)
        e[i] = ea[i] > eb[i] ? ea[i] - eb[i] : 0;
    return Monomial(a.ring(), std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i])
            return ea[i] > eb[i];
    return false;
}

} // namespace vnum
