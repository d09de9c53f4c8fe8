#include "core/threading.hpp"

#include <omp.h>

#include <atomic>

namespace wsar {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() {
    const int n = g_threads.load();
    if (n > 0) {
        return n;
    }
    return omp_get_max_threads();
}

}  // namespace wsar
