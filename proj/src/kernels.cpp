#include "vnum/kernels.hpp"

#include "vnum/parallel.hpp"

namespace vnum::kernels {

// Distinct monomials of equal degree never divide one another, so a sorted,
// deduplicated list only needs each entry checked against the strictly
// smaller degrees, which all sit to its left.

std::vector<std::uint8_t> nondominated_serial(const std::vector<Monomial>& sorted) {
    const size_t n = sorted.size();
    std::vector<std::uint8_t> keep(n, 1);
    std::vector<size_t> kept;
    kept.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const long long deg = sorted[i].degree();
        for (size_t j : kept) {
            if (sorted[j].degree() >= deg)
                break;
            if (sorted[j].divides(sorted[i])) {
                keep[i] = 0;
                break;
            }
        }
        if (keep[i])
            kept.push_back(i);
    }
    return keep;
}

std::vector<std::uint8_t> nondominated_parallel(const std::vector<Monomial>& sorted) {
    const size_t n = sorted.size();
    std::vector<std::uint8_t> keep(n, 1);
    // A dominated entry is always dominated by some kept entry (divisibility
    // is transitive), so checking against every smaller-degree entry instead
    // of only kept ones changes nothing in the output and removes the data
    // dependency between iterations.
    const int jobs = workers_for(static_cast<int>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
#endif
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const size_t i = static_cast<size_t>(ii);
        const long long deg = sorted[i].degree();
        for (size_t j = 0; j < i; ++j) {
            if (sorted[j].degree() >= deg)
                break;
            if (sorted[j].divides(sorted[i])) {
                keep[i] = 0;
                break;
            }
        }
    }
    (void)jobs;
    return keep;
}

std::vector<std::uint8_t> nondominated(const std::vector<Monomial>& sorted) {
    if (sorted.size() >= 512 && workers_for(static_cast<int>(sorted.size())) > 1)
        return nondominated_parallel(sorted);
    return nondominated_serial(sorted);
}

} // namespace vnum::kernels
