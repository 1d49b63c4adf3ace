#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scfq {

// Execution policy for the data-parallel kernels.  Every parallel kernel has
// a serial twin used as the reference in tests and benchmarks; results must
// be identical, so reductions are always performed in index order after the
// parallel fill.
enum class Exec { serial, openmp };

inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::openmp;
#else
    return Exec::serial;
#endif
}

template <class Fn>
void par_for(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)n; ++i) fn((std::size_t)i);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace scfq
