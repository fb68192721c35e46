#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vnum/vnumber.hpp"

namespace vnum {

/// Finite simple graph. Edges are unordered pairs of vertex indices;
/// isolated vertices are allowed and stay out of the edge ideal's ring.
struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;
};

/// Squarefree quadratic ideal with one generator per edge, in a ring over
/// the vertices that touch an edge, in declaration order. DomainError on
/// an edgeless graph, a loop, or an endpoint out of range.
MonomialIdeal edge_ideal(const Graph& g);

/// Number of connected components of the graph restricted to the vertices
/// that touch an edge. Same errors as edge_ideal.
int graph_component_count(const Graph& g);

/// Predicted eventual line of v(I(G)^k): slope 2, intercept c(G) - 2 with
/// c(G) the edge-bearing component count.
std::pair<long long, long long> edge_v_asymptotic(const Graph& g);

/// Associated primes of every power of a complete intersection: all ways
/// of choosing one variable from each generator's support. DomainError
/// when I is not a complete intersection.
PrimeSet ci_ass(const MonomialIdeal& I);

/// Closed form v(I^k) = alpha(I)k + (sum of generator degrees - alpha(I)
/// - mu(I)) for complete intersections, exact for every k >= 1.
long long ci_v(const MonomialIdeal& I, int k);

/// Closed form v(I^k) = alpha(I)k - 1 for equigenerated ideals admitting a
/// generator splitting, exact for every k >= 1. DomainError when I is not
/// equigenerated or not splittable.
long long vertex_splittable_v(const MonomialIdeal& I, int k);

struct SumBound {
    long long bound = 0;
    /// The bound is eventually attained: all alphas equal, or every part
    /// carries a structural vstab = 1 certificate.
    bool equality_certified = false;
    /// Every part's hypothesis v(I_j^k) = alpha(I_j)k - 1 holds by a
    /// structural certificate; false when any part only passed the
    /// windowed check.
    bool hypothesis_certified = false;
};

/// Lower bound v((I_1+...+I_t)^k) >= (min alpha)k + (sum alpha - min alpha
/// - t) for parts with pairwise disjoint supports, each satisfying
/// v(I_j^k) = alpha(I_j)k - 1. Parts without a structural certificate are
/// checked against that line on a window of `window` powers; failure is a
/// DomainError, not a silent flag.
SumBound disjoint_sum_vbound(const std::vector<MonomialIdeal>& parts, int k, int window = 4);

} // namespace vnum
