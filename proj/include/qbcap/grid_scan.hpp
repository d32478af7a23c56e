#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbcap {

enum class Execution { Serial, Parallel };

struct ScanResult {
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};

/// Largest residual_at(i) over [0, n) together with the lowest index
/// attaining it. The parallel path reduces per-thread candidates under the
/// same total order (larger residual, then lower index), so serial and
/// parallel runs return bitwise-identical results. NaN residuals and
/// evaluation failures surface as +infinity rather than vanishing in the
/// comparisons (exceptions must not cross an OpenMP region).
template <typename F>
ScanResult scan_worst(std::size_t n, Execution exec, F&& residual_at) {
    auto sanitize = [&](std::size_t i) {
        double r;
        try {
            r = residual_at(i);
        } catch (...) {
            return std::numeric_limits<double>::infinity();
        }
        return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
    };
    auto better = [](const ScanResult& a, const ScanResult& b) {
        if (a.worst != b.worst) return a.worst > b.worst;
        return a.index < b.index;
    };

    ScanResult best;
    best.index = n;

#ifdef _OPENMP
    if (exec == Execution::Parallel && n > 1) {
#pragma omp parallel
        {
            ScanResult local;
            local.index = n;
#pragma omp for schedule(static) nowait
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                const double r = sanitize(static_cast<std::size_t>(i));
                // Static schedule hands each thread increasing i, so ties keep
                // the first index seen.
                if (r > local.worst) {
                    local.worst = r;
                    local.index = static_cast<std::size_t>(i);
                }
            }
#pragma omp critical
            if (better(local, best)) best = local;
        }
        return best;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = sanitize(i);
        if (r > best.worst) {
            best.worst = r;
            best.index = i;
        }
    }
    return best;
}

} // namespace qbcap
