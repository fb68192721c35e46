#pragma once

#include <memory>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

/// Partition of the generators into connected components of the "shared
/// variable" graph: two generators are linked when their supports meet.
/// Components are returned as ideals in the ambient ring, ordered by the
/// smallest variable index in their support. I must be nonzero and proper.
std::vector<MonomialIdeal> components(const MonomialIdeal& I);

/// A monomial ideal is a complete intersection iff its minimal generators
/// have pairwise disjoint supports. I must be nonzero and proper.
bool is_complete_intersection(const MonomialIdeal& I);

/// All generators share one degree. I must be nonzero and proper.
bool is_equigenerated(const MonomialIdeal& I);

/// Witness for the recursive generator splitting I = x*I1 + I2, where G(I)
/// splits into the part divisible by x (giving I1 after dividing x out) and
/// the rest I2, with I2 contained in I1 and both parts again splittable.
/// Zero, unit and principal ideals are the leaves.
struct SplitTree {
    MonomialIdeal ideal;
    int splitting_variable = -1; // -1 at a leaf
    std::shared_ptr<const SplitTree> inner; // I1
    std::shared_ptr<const SplitTree> rest;  // I2

    explicit SplitTree(MonomialIdeal i) : ideal(std::move(i)) {}

    bool is_leaf() const { return splitting_variable < 0; }
};

/// Returns the witness tree, or null when no splitting exists. Candidate
/// variables are tried in index order, so the witness is deterministic.
/// Results are memoized on the canonical form of the ideal.
std::shared_ptr<const SplitTree> vertex_split(const MonomialIdeal& I);

namespace detail {

void clear_split_memo();

} // namespace detail

} // namespace vnum
