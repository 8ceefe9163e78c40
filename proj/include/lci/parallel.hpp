#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lci::par {

/// All helpers here partition work by fixed-size blocks and combine partial
/// results in block order, so results are bit-identical for any thread count
/// (including the serial build without OpenMP).
constexpr std::int64_t kBlock = 4096;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Parallel for over [0, n); fn must only write state owned by iteration i.
template <class F>
void for_each(std::int64_t n, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

/// max_i |term(i)|. Max is exact, so any reduction order gives the same result.
template <class F>
double max_abs(std::int64_t n, F&& term) {
    double result = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : result)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        double v = std::fabs(term(i));
        if (v > result) result = v;
    }
    return result;
}

/// Sum of term(i) with deterministic association: per-block serial partial
/// sums, combined in block order.
template <class F>
double block_sum(std::int64_t n, F&& term) {
    if (n <= 0) return 0.0;
    const std::int64_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<size_t>(blocks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += term(i);
        partial[static_cast<size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

} // namespace lci::par
