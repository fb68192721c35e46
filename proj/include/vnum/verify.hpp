#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vnum/oracle.hpp"
#include "vnum/structure.hpp"

namespace vnum {

/// One v-table entry for the global lower-bound audit v >= alpha*k - 1.
struct LbRecord {
    long long alpha = 0;
    int k = 1;
    long long v = 0;

    bool holds() const { return v >= alpha * k - 1; }
};

struct VerifyReport {
    std::string suite;
    int checks = 0;
    /// Value mismatches between a formula and the direct computation.
    std::vector<std::string> discrepancies;
    /// Unexpected errors thrown while checking.
    std::vector<std::string> failures;
    /// Every (alpha, k, v) triple this suite computed.
    std::vector<LbRecord> lb_records;

    bool ok() const { return discrepancies.empty() && failures.empty(); }
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    /// Instances to generate; 0 picks the suite default.
    int count = 0;
    /// Power window; 0 picks the suite default.
    int k_max = 0;
};

/// Random complete intersections (n<=8, mu<=4, degrees<=4, default 50):
/// closed-form prime set and v against the direct computation, k=1..4.
VerifyReport verify_ci(const VerifyConfig& cfg = {});

/// Random disjoint-support pairs (n<=4 a side, <=4 generators, degree<=3,
/// default 50): product prime sets, every local v and the global min
/// against the direct computation on (IJ)^k, k=1..3.
VerifyReport verify_product(const VerifyConfig& cfg = {});

/// Same corpus: sum prime sets, local and global sum formulas against the
/// direct computation on (I+J)^k, k=1..3; at k=1 the global value must be
/// v(I)+v(J); the disjoint-sum lower bound is audited where it applies.
VerifyReport verify_sum(const VerifyConfig& cfg = {});

/// Powers of maximal ideals (n<=4, d<=3) and complete-graph edge ideals
/// (n<=5): the splitting recognizer accepts and v(I^k)=alpha(I)k-1, k=1..4.
VerifyReport verify_vsplit(const VerifyConfig& cfg = {});

/// Fixture graphs with 1, 2 and 3 components: fitted v-line of the edge
/// ideal must be (2, c-2) with vstab <= 4, default window k=1..6.
VerifyReport verify_edge(const VerifyConfig& cfg = {});

/// Random ideals (n<=5, exponents<=3, <=5 generators, default 100):
/// exhaustive witness search against ass() and v_local(), plus the
/// exponent-capping property of colons.
VerifyReport verify_oracle(const VerifyConfig& cfg = {});

namespace fixtures {

/// 5-cycle on x1..x5.
Graph cycle5_graph();
/// Triangle plus a disjoint edge: two components.
Graph cycle_and_edge_graph();
/// Two triangles plus a disjoint edge: three components.
Graph two_cycles_and_edge_graph();

/// Edge ideal of the 5-cycle, ring x1..x5.
MonomialIdeal cycle5();
/// Principal ideal (x1^2*x2): v-table 3k-1 with a constant prime set.
MonomialIdeal principal_example();
/// (x1^2, x1x2, x1x3^2, x3^3): splits at x1; eventual v-line 2k.
MonomialIdeal split_example();
/// Fifteen variables: the 5-cycle ideal on the x-block, and the product of
/// the 5-cycle ideals on the y- and z-blocks. Disjoint supports; the sum's
/// eventual v-line is 2k+3.
std::pair<MonomialIdeal, MonomialIdeal> disjoint_sum_pair();

} // namespace fixtures

} // namespace vnum
