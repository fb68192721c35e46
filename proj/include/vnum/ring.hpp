#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vnum/error.hpp"

namespace vnum {

class AmbientRing;

/// Rings are immutable and shared; every monomial and ideal holds one of
/// these. Two rings are interchangeable iff their variable lists coincide.
using Ring = std::shared_ptr<const AmbientRing>;

/// An ordered list of variable names. The index of a variable in this list
/// is its identity everywhere else in the library: exponent vectors, support
/// sets and primes all speak in variable indices.
class AmbientRing {
public:
    static Ring make(std::vector<std::string> variables);

    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& name(int idx) const { return vars_.at(static_cast<size_t>(idx)); }

    /// Index of a declared variable, -1 if the name is unknown.
    int index_of(const std::string& name) const;

    bool operator==(const AmbientRing& other) const { return vars_ == other.vars_; }

private:
    explicit AmbientRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::vector<std::string> vars_;
};

/// Pointer equality first, then structural equality, so a ring parsed twice
/// still compares equal.
inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && *a == *b);
}

/// Throws DomainError unless both operands live in the same ring.
void require_same_ring(const Ring& a, const Ring& b, const char* op);

} // namespace vnum
