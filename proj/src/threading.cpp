#include "aperimet/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace aperimet {

int thread_count() {
    if (const char* env = std::getenv("APERIMET_THREADS")) {
        char* tail = nullptr;
        const long v = std::strtol(env, &tail, 10);
        if (tail != env && v >= 1) return static_cast<int>(std::min(v, 256L));
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t begin, std::int64_t end,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    const int shards = static_cast<int>(
        std::min<std::int64_t>(thread_count(), total));
    if (shards <= 1) {
        fn(begin, end, 0);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
    const std::int64_t chunk = (total + shards - 1) / shards;
    for (int s = 0; s < shards; ++s) {
        const std::int64_t lo = begin + chunk * s;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, &errors, lo, hi, s] {
            try {
                fn(lo, hi, s);
            } catch (...) {
                errors[static_cast<std::size_t>(s)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace aperimet
