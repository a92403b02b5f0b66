#pragma once

#include <cstddef>
#include <exception>

#include <omp.h>

namespace sextic {

enum class RunMode { serial, parallel };

/// Runs f(i) for i in [0, n). Parallel mode fans the indices out across
/// OpenMP threads; results must be written to per-index slots so the merge
/// is order-independent. The caller pre-sets the working precision (via
/// ScopedPrec) before entering, so workers never touch the shared default.
template <class F>
void for_each_index(std::size_t n, RunMode mode, F&& f) {
    if (mode == RunMode::serial || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace sextic
