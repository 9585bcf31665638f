#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace oscillab {

// Worker count: `requested` if positive, otherwise hardware concurrency,
// always capped by the OSCILLAB_THREADS environment variable when set.
inline int worker_count(int requested = 0) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("OSCILLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Splits [0, n) into contiguous chunks, one per worker. fn(begin, end, worker).
template <class Fn>
void parallel_chunks(long long n, int threads, Fn&& fn) {
    threads = static_cast<int>(
        std::max<long long>(1, std::min<long long>(threads, n > 0 ? n : 1)));
    if (threads == 1) {
        fn(0LL, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    long long chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long long b = t * chunk;
        long long e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e, t] { fn(b, e, t); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace oscillab
