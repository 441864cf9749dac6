#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rbc {

// Worker count from RIESZ_BC_WORKERS, else the available parallelism.
// Throws InputError when the variable is set but not a positive integer.
unsigned default_workers();

// Runs body(i) for i in [0, count). With workers <= 1 this is a plain loop and
// serves as the reference path. Bodies must only write to per-index state.
// If any body throws, the exception of the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(static_cast<int>(workers))
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace rbc
