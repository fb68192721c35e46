#include "vnum/ring.hpp"

#include <unordered_set>

namespace vnum {

Ring AmbientRing::make(std::vector<std::string> variables) {
    if (variables.empty())
        throw DomainError("a ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty())
            throw DomainError("empty variable name");
        if (!seen.insert(v).second)
            throw DomainError("duplicate variable name: " + v);
    }
    return Ring(new AmbientRing(std::move(variables)));
}

int AmbientRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
    if (!same_ring(a, b))
        throw DomainError(std::string(op) + ": operands live in different rings");
}

} // namespace vnum
