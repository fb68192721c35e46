#include "vnum/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vnum {

namespace {

struct EdgeView {
    std::vector<int> covered;                // vertex indices touching an edge, ascending
    std::vector<std::pair<int, int>> edges;  // normalized, deduplicated
};

EdgeView edge_view(const Graph& g) {
    if (g.edges.empty())
        throw DomainError("edge_ideal: graph has no edges");
    const int n = static_cast<int>(g.vertices.size());
    std::set<std::pair<int, int>> seen;
    std::set<int> covered;
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw DomainError("edge_ideal: edge endpoint out of range");
        if (a == b)
            throw DomainError("edge_ideal: loop");
        if (a > b)
            std::swap(a, b);
        seen.emplace(a, b);
        covered.insert(a);
        covered.insert(b);
    }
    EdgeView view;
    view.covered.assign(covered.begin(), covered.end());
    view.edges.assign(seen.begin(), seen.end());
    return view;
}

} // namespace

MonomialIdeal edge_ideal(const Graph& g) {
    EdgeView view = edge_view(g);
    std::vector<std::string> names;
    names.reserve(view.covered.size());
    for (int v : view.covered)
        names.push_back(g.vertices[static_cast<size_t>(v)]);
    Ring ring = AmbientRing::make(std::move(names));
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(view.covered.begin(), view.covered.end(), v) -
                                view.covered.begin());
    };
    std::vector<Monomial> gens;
    gens.reserve(view.edges.size());
    for (auto [a, b] : view.edges)
        gens.push_back(mul(Monomial::variable(ring, pos(a)), Monomial::variable(ring, pos(b))));
    return MonomialIdeal(ring, std::move(gens));
}

int graph_component_count(const Graph& g) {
    EdgeView view = edge_view(g);
    std::vector<int> parent(view.covered.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[static_cast<size_t>(i)] != i) {
            parent[static_cast<size_t>(i)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
            i = parent[static_cast<size_t>(i)];
        }
        return i;
    };
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(view.covered.begin(), view.covered.end(), v) -
                                view.covered.begin());
    };
    for (auto [a, b] : view.edges)
        parent[static_cast<size_t>(find(pos(a)))] = find(pos(b));
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i)
        roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

std::pair<long long, long long> edge_v_asymptotic(const Graph& g) {
    return {2, static_cast<long long>(graph_component_count(g)) - 2};
}

PrimeSet ci_ass(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit() || !is_complete_intersection(I))
        throw DomainError("ci_ass: not a complete intersection");
    return detail::ci_choice_primes(I);
}

namespace {

long long gen_degree_sum(const MonomialIdeal& I) {
    long long s = 0;
    for (const auto& g : I.gens())
        s += g.degree();
    return s;
}

} // namespace

long long ci_v(const MonomialIdeal& I, int k) {
    if (I.is_zero() || I.is_unit() || !is_complete_intersection(I))
        throw DomainError("ci_v: not a complete intersection");
    if (k < 1)
        throw DomainError("ci_v: exponent must be >= 1");
    return alpha(I) * k + (gen_degree_sum(I) - alpha(I) - mu(I));
}

long long vertex_splittable_v(const MonomialIdeal& I, int k) {
    if (I.is_zero() || I.is_unit() || !is_equigenerated(I))
        throw DomainError("vertex_splittable_v: not equigenerated");
    if (!vertex_split(I))
        throw DomainError("vertex_splittable_v: not vertex splittable");
    if (k < 1)
        throw DomainError("vertex_splittable_v: exponent must be >= 1");
    return alpha(I) * k - 1;
}

namespace {

/// Structural certificate that v(I^k) = alpha(I)k - 1 for every k >= 1:
/// a complete intersection whose closed-form intercept is -1, or an
/// equigenerated ideal with a generator splitting.
bool line_certified(const MonomialIdeal& I) {
    if (is_complete_intersection(I))
        return gen_degree_sum(I) - alpha(I) - mu(I) == -1;
    return is_equigenerated(I) && vertex_split(I) != nullptr;
}

} // namespace

SumBound disjoint_sum_vbound(const std::vector<MonomialIdeal>& parts, int k, int window) {
    if (parts.size() < 2)
        throw DomainError("disjoint_sum_vbound: need at least two ideals");
    if (k < 1)
        throw DomainError("disjoint_sum_vbound: exponent must be >= 1");
    for (size_t i = 1; i < parts.size(); ++i)
        require_same_ring(parts[0].ring(), parts[i].ring(), "disjoint_sum_vbound");
    std::vector<char> used(static_cast<size_t>(parts[0].ring()->size()), 0);
    for (const auto& part : parts) {
        if (part.is_zero() || part.is_unit())
            throw DomainError("disjoint_sum_vbound: parts must be nonzero and proper");
        for (int v : support(part)) {
            if (used[static_cast<size_t>(v)])
                throw DomainError("disjoint_sum_vbound: supports overlap");
            used[static_cast<size_t>(v)] = 1;
        }
    }
    long long alpha_sum = 0;
    long long alpha_min = 0;
    bool all_equal = true;
    bool all_certified = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        const long long a = alpha(parts[i]);
        alpha_sum += a;
        alpha_min = (i == 0) ? a : std::min(alpha_min, a);
        if (a != alpha(parts[0]))
            all_equal = false;
        if (line_certified(parts[i]))
            continue;
        all_certified = false;
        // Windowed check: the fitted tail of the part's v-table must be
        // exactly the hypothesis line.
        VTable table = v_function(parts[i], window);
        if (!table.fit || table.fit->slope != a || table.fit->intercept != -1)
            throw DomainError("disjoint_sum_vbound: hypothesis fails on the window");
    }
    SumBound out;
    out.bound = alpha_min * k +
                (alpha_sum - alpha_min - static_cast<long long>(parts.size()));
    out.hypothesis_certified = all_certified;
    out.equality_certified = all_equal || all_certified;
    return out;
}

} // namespace vnum
