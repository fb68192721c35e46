#include "vnum/verify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "vnum/assoc.hpp"
#include "vnum/parse.hpp"
#include "vnum/recognize.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

namespace {

// Raw modulo on mt19937_64 keeps every stream identical across standard
// libraries; std distributions do not guarantee that.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
};

Ring block_ring(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return AmbientRing::make(names);
}

Ring pair_ring(int a, int b) {
    std::vector<std::string> names;
    names.reserve(a + b);
    for (int i = 1; i <= a; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= b; ++i) names.push_back("y" + std::to_string(i));
    return AmbientRing::make(names);
}

Monomial random_monomial(Rng& rng, const Ring& ring, int lo, int len, int degree) {
    std::vector<Exponent> exps(ring->size(), 0);
    for (int i = 0; i < degree; ++i) exps[lo + rng.below(len)] += 1;
    return Monomial(ring, exps);
}

MonomialIdeal random_side(Rng& rng, const Ring& ring, int lo, int len) {
    int count = 1 + rng.below(4);
    std::vector<Monomial> gens;
    gens.reserve(count);
    for (int j = 0; j < count; ++j)
        gens.push_back(random_monomial(rng, ring, lo, len, 1 + rng.below(3)));
    return MonomialIdeal(ring, gens);
}

// Disjoint generator supports of size 1..2, degree up to 4, at most 8
// variables in total.
MonomialIdeal random_ci(Rng& rng) {
    struct Piece {
        int offset;
        std::vector<Exponent> exps;
    };
    std::vector<Piece> pieces;
    int used = 0;
    int target = 1 + rng.below(4);
    for (int j = 0; j < target; ++j) {
        int s = 1 + rng.below(2);
        if (used + s > 8) break;
        int d = s + rng.below(4 - s + 1);
        std::vector<Exponent> e(s, 1);
        for (int t = s; t < d; ++t) e[rng.below(s)] += 1;
        pieces.push_back({used, std::move(e)});
        used += s;
    }
    Ring ring = block_ring(used);
    std::vector<Monomial> gens;
    gens.reserve(pieces.size());
    for (const Piece& p : pieces) {
        std::vector<Exponent> exps(used, 0);
        for (std::size_t t = 0; t < p.exps.size(); ++t) exps[p.offset + t] = p.exps[t];
        gens.emplace_back(ring, exps);
    }
    return MonomialIdeal(ring, gens);
}

bool same_primes(const PrimeSet& a, const PrimeSet& b) {
    const auto& pa = a.primes();
    const auto& pb = b.primes();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!(pa[i] == pb[i])) return false;
    return true;
}

std::string prime_set_str(const PrimeSet& s) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.primes().size(); ++i) {
        if (i) out << ", ";
        out << s.primes()[i].str();
    }
    out << "}";
    return out.str();
}

} // namespace

VerifyReport verify_ci(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "ci";
    int count = cfg.count > 0 ? cfg.count : 50;
    int k_max = cfg.k_max > 0 ? cfg.k_max : 4;
    Rng rng(cfg.seed);
    for (int i = 0; i < count; ++i) {
        MonomialIdeal ideal = random_ci(rng);
        try {
            PrimeSet expected = ci_ass(ideal);
            long long a0 = alpha(ideal);
            for (int k = 1; k <= k_max; ++k) {
                PrimeSet direct = ass_power(ideal, k);
                ++rep.checks;
                if (!same_primes(direct, expected)) {
                    std::ostringstream out;
                    out << "ci #" << i << " k=" << k << ": prime sets differ, direct "
                        << prime_set_str(direct) << " vs formula " << prime_set_str(expected)
                        << "; I = " << render_ideal(ideal);
                    rep.discrepancies.push_back(out.str());
                    continue;
                }
                long long direct_v = v_number_with(power_cached(ideal, k), direct).value;
                long long formula_v = ci_v(ideal, k);
                ++rep.checks;
                if (direct_v != formula_v) {
                    std::ostringstream out;
                    out << "ci #" << i << " k=" << k << ": v direct " << direct_v
                        << " vs formula " << formula_v << "; I = " << render_ideal(ideal);
                    rep.discrepancies.push_back(out.str());
                }
                rep.lb_records.push_back({a0, k, direct_v});
            }
        } catch (const std::exception& ex) {
            rep.failures.push_back("ci #" + std::to_string(i) + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_product(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "product";
    int count = cfg.count > 0 ? cfg.count : 50;
    int k_max = cfg.k_max > 0 ? cfg.k_max : 3;
    Rng rng(cfg.seed);
    for (int i = 0; i < count; ++i) {
        int a = 1 + rng.below(4);
        int b = 1 + rng.below(4);
        Ring ring = pair_ring(a, b);
        MonomialIdeal left = random_side(rng, ring, 0, a);
        MonomialIdeal right = random_side(rng, ring, a, b);
        try {
            MonomialIdeal prod = product(left, right);
            long long a0 = alpha(prod);
            for (int k = 1; k <= k_max; ++k) {
                PrimeSet direct = ass_power(prod, k);
                PrimeSet formula = ass_product(left, right, k);
                ++rep.checks;
                if (!same_primes(direct, formula)) {
                    std::ostringstream out;
                    out << "product #" << i << " k=" << k << ": prime sets differ, direct "
                        << prime_set_str(direct) << " vs formula " << prime_set_str(formula)
                        << "; I = " << render_ideal(left) << "; J = " << render_ideal(right);
                    rep.discrepancies.push_back(out.str());
                    continue;
                }
                MonomialIdeal pk = power_cached(prod, k);
                long long best = std::numeric_limits<long long>::max();
                for (const MonomialPrime& pr : direct.primes()) {
                    long long direct_v = v_local(pk, pr, direct);
                    long long formula_v = v_product_local(left, right, pr, k);
                    ++rep.checks;
                    if (direct_v != formula_v) {
                        std::ostringstream out;
                        out << "product #" << i << " k=" << k << " at " << pr.str()
                            << ": local v direct " << direct_v << " vs formula " << formula_v
                            << "; I = " << render_ideal(left) << "; J = " << render_ideal(right);
                        rep.discrepancies.push_back(out.str());
                    }
                    best = std::min(best, direct_v);
                }
                long long global_formula = v_product(left, right, k);
                ++rep.checks;
                if (best != global_formula) {
                    std::ostringstream out;
                    out << "product #" << i << " k=" << k << ": global v direct " << best
                        << " vs formula " << global_formula << "; I = " << render_ideal(left)
                        << "; J = " << render_ideal(right);
                    rep.discrepancies.push_back(out.str());
                }
                rep.lb_records.push_back({a0, k, best});
            }
        } catch (const std::exception& ex) {
            rep.failures.push_back("product #" + std::to_string(i) + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_sum(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "sum";
    int count = cfg.count > 0 ? cfg.count : 50;
    int k_max = cfg.k_max > 0 ? cfg.k_max : 3;
    Rng rng(cfg.seed);
    for (int i = 0; i < count; ++i) {
        int a = 1 + rng.below(4);
        int b = 1 + rng.below(4);
        Ring ring = pair_ring(a, b);
        MonomialIdeal left = random_side(rng, ring, 0, a);
        MonomialIdeal right = random_side(rng, ring, a, b);
        try {
            MonomialIdeal total = sum(left, right);
            long long a0 = alpha(total);
            for (int k = 1; k <= k_max; ++k) {
                PrimeSet direct = ass_power(total, k);
                PrimeSet formula = ass_sum_power(left, right, k);
                ++rep.checks;
                if (!same_primes(direct, formula)) {
                    std::ostringstream out;
                    out << "sum #" << i << " k=" << k << ": prime sets differ, direct "
                        << prime_set_str(direct) << " vs formula " << prime_set_str(formula)
                        << "; I = " << render_ideal(left) << "; J = " << render_ideal(right);
                    rep.discrepancies.push_back(out.str());
                    continue;
                }
                MonomialIdeal sk = power_cached(total, k);
                long long best = std::numeric_limits<long long>::max();
                for (const MonomialPrime& pr : direct.primes()) {
                    std::vector<int> pv;
                    std::vector<int> qv;
                    for (int x : pr.variables()) (x < a ? pv : qv).push_back(x);
                    ++rep.checks;
                    if (pv.empty() || qv.empty()) {
                        std::ostringstream out;
                        out << "sum #" << i << " k=" << k << " at " << pr.str()
                            << ": prime misses one summand's block; I = " << render_ideal(left)
                            << "; J = " << render_ideal(right);
                        rep.discrepancies.push_back(out.str());
                        continue;
                    }
                    MonomialPrime p(ring, pv);
                    MonomialPrime q(ring, qv);
                    long long direct_v = v_local(sk, pr, direct);
                    long long formula_v = v_sum_local(left, right, p, q, k);
                    ++rep.checks;
                    if (direct_v != formula_v) {
                        std::ostringstream out;
                        out << "sum #" << i << " k=" << k << " at " << pr.str()
                            << ": local v direct " << direct_v << " vs formula " << formula_v
                            << "; I = " << render_ideal(left) << "; J = " << render_ideal(right);
                        rep.discrepancies.push_back(out.str());
                    }
                    best = std::min(best, direct_v);
                }
                long long global_formula = v_sum(left, right, k);
                ++rep.checks;
                if (best != global_formula) {
                    std::ostringstream out;
                    out << "sum #" << i << " k=" << k << ": global v direct " << best
                        << " vs formula " << global_formula << "; I = " << render_ideal(left)
                        << "; J = " << render_ideal(right);
                    rep.discrepancies.push_back(out.str());
                }
                if (k == 1) {
                    long long split = v_number(left) + v_number(right);
                    ++rep.checks;
                    if (best != split) {
                        std::ostringstream out;
                        out << "sum #" << i << " k=1: v(I+J) " << best << " vs v(I)+v(J) "
                            << split << "; I = " << render_ideal(left) << "; J = "
                            << render_ideal(right);
                        rep.discrepancies.push_back(out.str());
                    }
                }
                try {
                    SumBound sb = disjoint_sum_vbound({left, right}, k);
                    ++rep.checks;
                    if (best < sb.bound) {
                        std::ostringstream out;
                        out << "sum #" << i << " k=" << k << ": bound " << sb.bound
                            << " exceeds direct v " << best << "; I = " << render_ideal(left)
                            << "; J = " << render_ideal(right);
                        rep.discrepancies.push_back(out.str());
                    }
                } catch (const DomainError&) {
                    // The parts fail the line hypothesis; nothing to audit.
                }
                rep.lb_records.push_back({a0, k, best});
            }
        } catch (const std::exception& ex) {
            rep.failures.push_back("sum #" + std::to_string(i) + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_vsplit(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "vsplit";
    int k_max = cfg.k_max > 0 ? cfg.k_max : 4;
    std::vector<MonomialIdeal> corpus;
    std::vector<std::string> labels;
    for (int n = 1; n <= 4; ++n) {
        Ring ring = block_ring(n);
        std::vector<Monomial> vars;
        for (int j = 0; j < n; ++j) {
            std::vector<Exponent> exps(n, 0);
            exps[j] = 1;
            vars.emplace_back(ring, exps);
        }
        MonomialIdeal maximal(ring, vars);
        for (int d = 1; d <= 3; ++d) {
            corpus.push_back(power(maximal, d));
            labels.push_back("m^" + std::to_string(d) + " on " + std::to_string(n) + " vars");
        }
    }
    for (int n = 2; n <= 5; ++n) {
        Graph g;
        for (int j = 1; j <= n; ++j) g.vertices.push_back("x" + std::to_string(j));
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) g.edges.push_back({u, w});
        corpus.push_back(edge_ideal(g));
        labels.push_back("complete graph on " + std::to_string(n) + " vertices");
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MonomialIdeal& ideal = corpus[i];
        try {
            ++rep.checks;
            if (!vertex_split(ideal)) {
                rep.discrepancies.push_back("vsplit " + labels[i] + ": not recognized");
                continue;
            }
            long long a0 = alpha(ideal);
            for (int k = 1; k <= k_max; ++k) {
                long long direct = v_number(power_cached(ideal, k));
                long long formula = vertex_splittable_v(ideal, k);
                ++rep.checks;
                if (direct != a0 * k - 1 || formula != direct) {
                    std::ostringstream out;
                    out << "vsplit " << labels[i] << " k=" << k << ": v direct " << direct
                        << " vs line " << (a0 * k - 1);
                    rep.discrepancies.push_back(out.str());
                }
                rep.lb_records.push_back({a0, k, direct});
            }
        } catch (const std::exception& ex) {
            rep.failures.push_back("vsplit " + labels[i] + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_edge(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "edge";
    int k_max = cfg.k_max > 0 ? cfg.k_max : 6;
    Graph graphs[] = {fixtures::cycle5_graph(), fixtures::cycle_and_edge_graph(),
                      fixtures::two_cycles_and_edge_graph()};
    const char* labels[] = {"5-cycle", "triangle+edge", "two triangles+edge"};
    for (int i = 0; i < 3; ++i) {
        try {
            int c = graph_component_count(graphs[i]);
            MonomialIdeal ideal = edge_ideal(graphs[i]);
            auto asym = edge_v_asymptotic(graphs[i]);
            ++rep.checks;
            if (asym.first != 2 || asym.second != c - 2) {
                std::ostringstream out;
                out << "edge " << labels[i] << ": asymptotic line (" << asym.first << ","
                    << asym.second << ") vs (2," << (c - 2) << ")";
                rep.discrepancies.push_back(out.str());
            }
            VTable table = v_function(ideal, k_max);
            ++rep.checks;
            if (!table.fit || table.fit->slope != 2 || table.fit->intercept != c - 2 ||
                table.fit->vstab > 4) {
                std::ostringstream out;
                out << "edge " << labels[i] << ": table";
                for (long long v : table.per_k) out << " " << v;
                if (table.fit)
                    out << " fits (" << table.fit->slope << "," << table.fit->intercept
                        << ") vstab " << table.fit->vstab;
                else
                    out << " has no fit";
                out << ", expected (2," << (c - 2) << ") vstab <= 4";
                rep.discrepancies.push_back(out.str());
            }
            long long a0 = alpha(ideal);
            for (int k = 1; k <= static_cast<int>(table.per_k.size()); ++k)
                rep.lb_records.push_back({a0, k, table.per_k[k - 1]});
        } catch (const std::exception& ex) {
            rep.failures.push_back(std::string("edge ") + labels[i] + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_oracle(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.suite = "oracle";
    int count = cfg.count > 0 ? cfg.count : 100;
    Rng rng(cfg.seed);
    for (int i = 0; i < count; ++i) {
        int n = 1 + rng.below(5);
        Ring ring = block_ring(n);
        int gens_count = 1 + rng.below(5);
        std::vector<Monomial> gens;
        for (int j = 0; j < gens_count; ++j) {
            std::vector<Exponent> exps(n, 0);
            bool positive = false;
            for (int t = 0; t < n; ++t) {
                exps[t] = static_cast<Exponent>(rng.below(4));
                positive = positive || exps[t] > 0;
            }
            if (!positive) exps[rng.below(n)] = static_cast<Exponent>(1 + rng.below(3));
            gens.emplace_back(ring, exps);
        }
        MonomialIdeal ideal(ring, gens);
        try {
            PrimeSet direct = ass(ideal);
            std::vector<WitnessRecord> records = oracle_ass(ideal);
            ++rep.checks;
            bool same = records.size() == direct.primes().size();
            for (std::size_t t = 0; same && t < records.size(); ++t)
                same = records[t].prime == direct.primes()[t];
            if (!same) {
                std::ostringstream out;
                out << "oracle #" << i << ": witness primes {";
                for (std::size_t t = 0; t < records.size(); ++t) {
                    if (t) out << ", ";
                    out << records[t].prime.str();
                }
                out << "} vs direct " << prime_set_str(direct) << "; I = "
                    << render_ideal(ideal);
                rep.discrepancies.push_back(out.str());
                continue;
            }
            long long best = std::numeric_limits<long long>::max();
            for (const WitnessRecord& rec : records) {
                long long direct_v = v_local(ideal, rec.prime, direct);
                ++rep.checks;
                if (rec.degree != direct_v) {
                    std::ostringstream out;
                    out << "oracle #" << i << " at " << rec.prime.str() << ": witness degree "
                        << rec.degree << " vs v_local " << direct_v << "; I = "
                        << render_ideal(ideal);
                    rep.discrepancies.push_back(out.str());
                }
                best = std::min(best, direct_v);
            }
            long long scanned = oracle_v(ideal);
            ++rep.checks;
            if (scanned != best) {
                std::ostringstream out;
                out << "oracle #" << i << ": global scan " << scanned << " vs min local "
                    << best << "; I = " << render_ideal(ideal);
                rep.discrepancies.push_back(out.str());
            }
            rep.lb_records.push_back({alpha(ideal), 1, best});

            // Colons only see exponents up to the generator lcm; a random
            // monomial and its capped image must agree.
            Monomial cap = lcm_gens(ideal);
            std::vector<Exponent> wild(n, 0);
            std::vector<Exponent> capped(n, 0);
            for (int t = 0; t < n; ++t) {
                wild[t] = static_cast<Exponent>(rng.below(cap.exponents()[t] + 3));
                capped[t] = std::min(wild[t], cap.exponents()[t]);
            }
            ++rep.checks;
            MonomialIdeal via_wild = colon_monomial(ideal, Monomial(ring, wild));
            MonomialIdeal via_capped = colon_monomial(ideal, Monomial(ring, capped));
            if (!(via_wild == via_capped)) {
                std::ostringstream out;
                out << "oracle #" << i << ": colon differs after capping, "
                    << render_ideal(via_wild) << " vs " << render_ideal(via_capped)
                    << "; I = " << render_ideal(ideal);
                rep.discrepancies.push_back(out.str());
            }
        } catch (const std::exception& ex) {
            rep.failures.push_back("oracle #" + std::to_string(i) + ": " + ex.what());
        }
    }
    return rep;
}

namespace fixtures {

Graph cycle5_graph() {
    Graph g;
    for (int i = 1; i <= 5; ++i) g.vertices.push_back("x" + std::to_string(i));
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    return g;
}

Graph cycle_and_edge_graph() {
    Graph g;
    for (int i = 1; i <= 5; ++i) g.vertices.push_back("x" + std::to_string(i));
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}};
    return g;
}

Graph two_cycles_and_edge_graph() {
    Graph g;
    for (int i = 1; i <= 8; ++i) g.vertices.push_back("x" + std::to_string(i));
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 7}};
    return g;
}

MonomialIdeal cycle5() { return edge_ideal(cycle5_graph()); }

MonomialIdeal principal_example() {
    Ring ring = AmbientRing::make({"x1", "x2"});
    return MonomialIdeal(ring, {Monomial(ring, {2, 1})});
}

MonomialIdeal split_example() {
    Ring ring = AmbientRing::make({"x1", "x2", "x3"});
    return MonomialIdeal(ring, {Monomial(ring, {2, 0, 0}), Monomial(ring, {1, 1, 0}),
                                Monomial(ring, {1, 0, 2}), Monomial(ring, {0, 0, 3})});
}

std::pair<MonomialIdeal, MonomialIdeal> disjoint_sum_pair() {
    std::vector<std::string> names;
    for (const char* prefix : {"x", "y", "z"})
        for (int i = 1; i <= 5; ++i) names.push_back(prefix + std::to_string(i));
    Ring ring = AmbientRing::make(names);
    auto cycle = [&ring](int offset) {
        std::vector<Monomial> gens;
        for (int e = 0; e < 5; ++e) {
            std::vector<Exponent> exps(15, 0);
            exps[offset + e] += 1;
            exps[offset + (e + 1) % 5] += 1;
            gens.emplace_back(ring, exps);
        }
        return MonomialIdeal(ring, gens);
    };
    return {cycle(0), product(cycle(5), cycle(10))};
}

} // namespace fixtures

} // namespace vnum
