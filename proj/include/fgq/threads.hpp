#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgq {

/// Worker count for the parallel kernels: FGQ_THREADS if set and positive,
/// otherwise the OpenMP default (1 in a serial build).
inline int thread_count() {
    static const int cached = [] {
        if (const char* env = std::getenv("FGQ_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }();
    return cached;
}

}  // namespace fgq
