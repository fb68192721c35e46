#include "vnum/recognize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace vnum {

namespace {

int find_root(std::vector<int>& parent, int i) {
    while (parent[static_cast<size_t>(i)] != i) {
        parent[static_cast<size_t>(i)] = parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
        i = parent[static_cast<size_t>(i)];
    }
    return i;
}

void unite(std::vector<int>& parent, int a, int b) {
    parent[static_cast<size_t>(find_root(parent, a))] = find_root(parent, b);
}

} // namespace

std::vector<MonomialIdeal> components(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw DomainError("components: ideal must be nonzero and proper");
    const auto& gens = I.gens();
    const int g = static_cast<int>(gens.size());
    std::vector<int> parent(static_cast<size_t>(g));
    std::iota(parent.begin(), parent.end(), 0);
    // Union generators through the variables they touch.
    std::vector<int> owner(static_cast<size_t>(I.ring()->size()), -1);
    for (int i = 0; i < g; ++i) {
        for (int v : gens[static_cast<size_t>(i)].support()) {
            if (owner[static_cast<size_t>(v)] < 0)
                owner[static_cast<size_t>(v)] = i;
            else
                unite(parent, owner[static_cast<size_t>(v)], i);
        }
    }
    std::map<int, std::vector<Monomial>> buckets;
    for (int i = 0; i < g; ++i)
        buckets[find_root(parent, i)].push_back(gens[static_cast<size_t>(i)]);
    std::vector<std::pair<int, MonomialIdeal>> keyed;
    for (auto& [root, part] : buckets) {
        (void)root;
        int min_var = I.ring()->size();
        for (const auto& m : part)
            min_var = std::min(min_var, m.support().front());
        keyed.emplace_back(min_var, from_canonical_gens(I.ring(), std::move(part)));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MonomialIdeal> out;
    out.reserve(keyed.size());
    for (auto& [k, ideal] : keyed) {
        (void)k;
        out.push_back(std::move(ideal));
    }
    return out;
}

bool is_complete_intersection(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw DomainError("is_complete_intersection: ideal must be nonzero and proper");
    const auto& gens = I.gens();
    std::vector<char> used(static_cast<size_t>(I.ring()->size()), 0);
    for (const auto& u : gens) {
        for (int v : u.support()) {
            if (used[static_cast<size_t>(v)])
                return false;
            used[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

bool is_equigenerated(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw DomainError("is_equigenerated: ideal must be nonzero and proper");
    return I.gens().front().degree() == I.gens().back().degree();
}

namespace {

struct SplitKey {
    std::vector<std::string> vars;
    std::vector<std::vector<Exponent>> exps;

    bool operator<(const SplitKey& other) const {
        return std::tie(vars, exps) < std::tie(other.vars, other.exps);
    }
};

SplitKey key_of(const MonomialIdeal& I) {
    SplitKey k;
    k.vars = I.ring()->variables();
    k.exps.reserve(I.gens().size());
    for (const auto& g : I.gens())
        k.exps.push_back(g.exponents());
    return k;
}

// Memo shared across calls; a null tree records a negative answer.
std::mutex g_split_mutex;
std::map<SplitKey, std::shared_ptr<const SplitTree>> g_split_memo;

std::shared_ptr<const SplitTree> leaf(const MonomialIdeal& I) {
    return std::make_shared<SplitTree>(I);
}

std::shared_ptr<const SplitTree> split_rec(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit() || I.gens().size() == 1)
        return leaf(I);

    const SplitKey key = key_of(I);
    {
        std::lock_guard<std::mutex> lock(g_split_mutex);
        auto it = g_split_memo.find(key);
        if (it != g_split_memo.end())
            return it->second;
    }

    std::shared_ptr<const SplitTree> found;
    const int n = I.ring()->size();
    for (int x = 0; x < n && !found; ++x) {
        std::vector<Monomial> inner_gens, rest_gens;
        for (const auto& u : I.gens()) {
            if (u.exponent(x) > 0)
                inner_gens.push_back(colon_part(u, Monomial::variable(I.ring(), x)));
            else
                rest_gens.push_back(u);
        }
        if (inner_gens.empty())
            continue;
        // Dividing a fixed variable out of an antichain keeps it an
        // antichain, so both parts are already canonical generator sets.
        std::sort(inner_gens.begin(), inner_gens.end(),
                  static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
        MonomialIdeal I1 = from_canonical_gens(I.ring(), std::move(inner_gens));
        MonomialIdeal I2 = rest_gens.empty()
                               ? MonomialIdeal::zero(I.ring())
                               : from_canonical_gens(I.ring(), std::move(rest_gens));
        if (!contains(I1, I2))
            continue;
        auto left = split_rec(I1);
        if (!left)
            continue;
        auto right = split_rec(I2);
        if (!right)
            continue;
        auto node = std::make_shared<SplitTree>(I);
        node->splitting_variable = x;
        node->inner = std::move(left);
        node->rest = std::move(right);
        found = std::move(node);
    }

    std::lock_guard<std::mutex> lock(g_split_mutex);
    g_split_memo.emplace(key, found);
    return found;
}

} // namespace

std::shared_ptr<const SplitTree> vertex_split(const MonomialIdeal& I) {
    return split_rec(I);
}

namespace detail {

void clear_split_memo() {
    std::lock_guard<std::mutex> lock(g_split_mutex);
    g_split_memo.clear();
}

} // namespace detail

} // namespace vnum
