// Shared-nothing batch helper: inputs are generated sequentially (so runs
// are deterministic for a fixed seed), verification fans out over a worker
// cap. A conjunction over independent checks is order-insensitive.
#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cpl {

/// Worker cap: explicit argument, else the CPL_THREADS environment
/// variable, else 1.
inline int default_thread_count() {
    if (const char* env = std::getenv("CPL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

/// True iff check(item) holds for every item; `threads` caps the workers.
template <class Item, class Check>
bool parallel_all_of(const std::vector<Item>& items, const Check& check, int threads) {
    if (threads <= 1 || items.size() < 2) {
        for (const auto& it : items)
            if (!check(it)) return false;
        return true;
    }
    threads = std::min<int>(threads, (int)items.size());
    std::atomic<bool> ok{true};
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size() || !ok.load()) return;
                if (!check(items[i])) ok.store(false);
            }
        });
    for (auto& th : pool) th.join();
    return ok.load();
}

}  // namespace cpl
