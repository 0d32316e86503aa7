// Minimal deterministic work sharding. Shards collect results privately and
// callers merge in shard order (or sort), so output never depends on the
// thread count.
#ifndef APERIMET_THREADING_HPP
#define APERIMET_THREADING_HPP

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace aperimet {

// Worker count: APERIMET_THREADS if set (clamped to >= 1), else the
// hardware concurrency.
int thread_count();

// Splits [begin, end) into one contiguous chunk per shard and runs
// fn(chunk_begin, chunk_end, shard_index). With one shard this is a plain
// call on the current thread. The first exception thrown by any shard is
// rethrown after all threads joined.
void parallel_chunks(std::int64_t begin, std::int64_t end,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

} // namespace aperimet

#endif
