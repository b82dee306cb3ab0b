#include "hawkfs/exec.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hawkfs::exec {

namespace {

std::atomic<int> g_max_threads{0};  // 0 = unresolved

int resolve_default() {
    if (const char* env = std::getenv("HAWKFS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
            // fall through to the OpenMP default
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int max_threads() {
#ifndef _OPENMP
    return 1;
#else
    int n = g_max_threads.load(std::memory_order_relaxed);
    if (n == 0) {
        n = resolve_default();
        g_max_threads.store(n, std::memory_order_relaxed);
    }
    return n;
#endif
}

void set_max_threads(int n) {
    g_max_threads.store(n >= 1 ? n : 0, std::memory_order_relaxed);
}

namespace detail {

void run_static(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx, int threads) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#else
    (void)threads;
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}

void run_dynamic(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx, int threads) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#else
    (void)threads;
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}

}  // namespace detail

}  // namespace hawkfs::exec
