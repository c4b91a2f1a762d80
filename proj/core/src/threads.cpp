#include "fracsl/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracsl {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
    static const int cached = [] {
        const char* s = std::getenv("FRACSL_THREADS");
        if (s == nullptr || *s == '\0') return 0;
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == nullptr || *end != '\0' || v < 1) return 0;
        return static_cast<int>(v > 1024 ? 1024 : v);
    }();
    return cached;
}

}  // namespace

int max_threads() {
    if (int v = g_override.load(std::memory_order_relaxed); v > 0) return v;
    if (int v = env_cap(); v > 0) return v;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
#endif
}

void set_max_threads(int n) {
    g_override.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

}  // namespace fracsl
