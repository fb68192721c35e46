#pragma once

#include <string>
#include <vector>

#include "vnum/assoc.hpp"
#include "vnum/ideal.hpp"

namespace tv {

inline vnum::Ring make_ring(std::vector<std::string> names) {
    return vnum::AmbientRing::make(std::move(names));
}

inline vnum::Monomial mono(const vnum::Ring& ring, std::vector<vnum::Exponent> exps) {
    return vnum::Monomial(ring, std::move(exps));
}

inline vnum::MonomialIdeal ideal_of(const vnum::Ring& ring,
                                    std::vector<std::vector<vnum::Exponent>> rows) {
    std::vector<vnum::Monomial> gens;
    gens.reserve(rows.size());
    for (auto& row : rows) gens.emplace_back(ring, std::move(row));
    return vnum::MonomialIdeal(ring, gens);
}

inline vnum::MonomialPrime prime_of(const vnum::Ring& ring, std::vector<int> vars) {
    return vnum::MonomialPrime(ring, std::move(vars));
}

inline std::vector<std::string> prime_strs(const vnum::PrimeSet& set) {
    std::vector<std::string> out;
    out.reserve(set.primes().size());
    for (const auto& p : set.primes()) out.push_back(p.str());
    return out;
}

} // namespace tv
