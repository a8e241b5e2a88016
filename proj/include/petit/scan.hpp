#ifndef PETIT_SCAN_HPP
#define PETIT_SCAN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace petit::scan {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Exhaustion caps. `full` bounds one-dimensional scans over algebra
/// elements, `pairs` bounds two-dimensional pair scans. PETIT_MAX_EXHAUST
/// overrides `full` (and lifts `pairs` to min(full^2, 10^9)).
struct Limits {
    std::size_t full = 10000;
    std::size_t pairs = 1000000;
    bool force = false;  // --oracle: ignore the caps (hard cap stays)

    static Limits from_env() {
        Limits lim;
        if (const char* s = std::getenv("PETIT_MAX_EXHAUST")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) {
                lim.full = static_cast<std::size_t>(v);
                unsigned long long sq = v < 31623 ? v * v : 1000000000ull;
                lim.pairs = static_cast<std::size_t>(sq > 1000000000ull ? 1000000000ull : sq);
            }
        }
        return lim;
    }
    bool allows_full(std::size_t n) const { return force || n <= full; }
    bool allows_pairs(std::size_t n2) const { return (force || n2 <= pairs) && n2 <= 1000000000ull; }
};

// Serial reference kernels. The OpenMP versions below must return identical
// results for any thread count; tests/test_scan_parity.cpp holds them to it.

template <class Pred>
std::size_t find_first_serial(std::size_t n, Pred&& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return npos;
}

template <class Pred>
std::vector<std::size_t> collect_serial(std::size_t n, Pred&& pred) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) hits.push_back(i);
    return hits;
}

template <class Pred>
bool all_of_serial(std::size_t n, Pred&& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (!pred(i)) return false;
    return true;
}

#ifdef _OPENMP

/// Least index satisfying pred, scanning block-wise so later blocks are
/// skipped once a hit is known. Deterministic: min-reduction inside a block.
template <class Pred>
std::size_t find_first_omp(std::size_t n, Pred&& pred) {
    constexpr std::size_t block = 65536;
    for (std::size_t lo = 0; lo < n; lo += block) {
        const std::size_t hi = lo + block < n ? lo + block : n;
        std::size_t best = npos;
#pragma omp parallel for schedule(static) reduction(min : best)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(lo);
             i < static_cast<std::ptrdiff_t>(hi); ++i) {
            if (pred(static_cast<std::size_t>(i))) {
                std::size_t idx = static_cast<std::size_t>(i);
                if (idx < best) best = idx;
            }
        }
        if (best != npos) return best;
    }
    return npos;
}

template <class Pred>
std::vector<std::size_t> collect_omp(std::size_t n, Pred&& pred) {
    std::vector<std::vector<std::size_t>> parts;
#pragma omp parallel
    {
#pragma omp single
        parts.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            if (pred(static_cast<std::size_t>(i))) mine.push_back(static_cast<std::size_t>(i));
    }
    std::vector<std::size_t> hits;
    for (auto& part : parts) hits.insert(hits.end(), part.begin(), part.end());
    std::sort(hits.begin(), hits.end());
    return hits;
}

template <class Pred>
bool all_of_omp(std::size_t n, Pred&& pred) {
    constexpr std::size_t block = 8192;
    for (std::size_t lo = 0; lo < n; lo += block) {
        const std::size_t hi = lo + block < n ? lo + block : n;
        bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(lo);
             i < static_cast<std::ptrdiff_t>(hi); ++i)
            ok = ok && pred(static_cast<std::size_t>(i));
        if (!ok) return false;
    }
    return true;
}

template <class Pred>
std::size_t find_first(std::size_t n, Pred&& pred) {
    return find_first_omp(n, pred);
}
template <class Pred>
std::vector<std::size_t> collect(std::size_t n, Pred&& pred) {
    return collect_omp(n, pred);
}
template <class Pred>
bool all_of(std::size_t n, Pred&& pred) {
    return all_of_omp(n, pred);
}

#else

template <class Pred>
std::size_t find_first(std::size_t n, Pred&& pred) {
    return find_first_serial(n, pred);
}
template <class Pred>
std::vector<std::size_t> collect(std::size_t n, Pred&& pred) {
    return collect_serial(n, pred);
}
template <class Pred>
bool all_of(std::size_t n, Pred&& pred) {
    return all_of_serial(n, pred);
}

#endif

}  // namespace petit::scan

#endif
