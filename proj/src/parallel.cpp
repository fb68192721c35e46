#include "vnum/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vnum {

namespace {
std::atomic<int> g_max_jobs{0};
}

void set_max_jobs(int jobs) { g_max_jobs.store(jobs < 0 ? 0 : jobs); }

int max_jobs() { return g_max_jobs.load(); }

int workers_for(int trip_count) {
    if (trip_count <= 1)
        return 1;
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    int cap = g_max_jobs.load();
    int n = cap > 0 && cap < hw ? cap : hw;
    return n < trip_count ? n : trip_count;
}

} // namespace vnum
