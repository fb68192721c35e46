#include <algorithm>
#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "vnum/kernels.hpp"
#include "vnum/parallel.hpp"

using namespace vnum;
using tv::make_ring;

namespace {

// Deterministic corpus straddling the parallel dispatch threshold.
std::vector<Monomial> random_sorted(const Ring& ring, int count, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<Monomial> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<Exponent> exps(ring->size());
        for (auto& e : exps) e = static_cast<Exponent>(eng() % 5);
        out.emplace_back(ring, exps);
    }
    std::sort(out.begin(), out.end(),
              static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("serial and parallel domination agree") {
    Ring r = make_ring({"a", "b", "c", "d"});
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        std::vector<Monomial> sorted = random_sorted(r, 700, seed);
        std::vector<std::uint8_t> serial = kernels::nondominated_serial(sorted);
        CHECK(serial == kernels::nondominated_parallel(sorted));
        CHECK(serial == kernels::nondominated(sorted));
    }
}

TEST_CASE("kept flags mark exactly the divisibility antichain") {
    Ring r = make_ring({"x", "y"});
    std::vector<Monomial> sorted = {Monomial(r, {1, 0}), Monomial(r, {0, 1}),
                                    Monomial(r, {1, 1}), Monomial(r, {0, 3})};
    std::vector<std::uint8_t> kept = kernels::nondominated_serial(sorted);
    CHECK(kept == std::vector<std::uint8_t>{1, 1, 0, 0});
    CHECK(kernels::nondominated_serial({}).empty());
}

TEST_CASE("the job cap limits workers but not results") {
    int before = max_jobs();
    set_max_jobs(2);
    CHECK(max_jobs() == 2);
    CHECK(workers_for(1000) <= 2);
    CHECK(workers_for(1) == 1);

    Ring r = make_ring({"a", "b", "c"});
    std::vector<Monomial> sorted = random_sorted(r, 600, 9);
    std::vector<std::uint8_t> capped = kernels::nondominated(sorted);
    set_max_jobs(before);
    CHECK(capped == kernels::nondominated_serial(sorted));
}

TEST_CASE("parallel and serial prime scans agree") {
    Ring r = make_ring({"x", "y", "z", "w"});
    MonomialIdeal I(r, {Monomial(r, {1, 1, 0, 0}), Monomial(r, {0, 1, 1, 0}),
                        Monomial(r, {0, 0, 1, 1}), Monomial(r, {2, 0, 0, 1})});
    MonomialIdeal I2 = power(I, 2);
    CHECK(ass_serial(I2) == ass_parallel(I2));
    CHECK(ass(I2) == ass_serial(I2));
}
