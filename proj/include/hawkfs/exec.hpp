#pragma once

#include <cstdint>

namespace hawkfs::exec {

// Worker count used by the parallel kernels. Resolution order: value set
// through set_max_threads, then the HAWKFS_THREADS environment variable,
// then the OpenMP default. Always 1 when built without OpenMP.
int max_threads();
void set_max_threads(int n);

namespace detail {
void run_static(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx, int threads);
void run_dynamic(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx, int threads);
}

// Runs f(i) for i in [0, n). Iterations must be independent; every kernel
// built on top of this produces results identical to the serial schedule.
// The static variant fits uniform per-row work, the dynamic one uneven
// tasks such as candidate evaluations.
template <class F>
void parallel_for(std::int64_t n, F&& f) {
    const int threads = max_threads();
    if (threads <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    auto trampoline = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_static(n, trampoline, &f, threads);
}

template <class F>
void parallel_for_dynamic(std::int64_t n, F&& f) {
    const int threads = max_threads();
    if (threads <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    auto trampoline = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_dynamic(n, trampoline, &f, threads);
}

}  // namespace hawkfs::exec
