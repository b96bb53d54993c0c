#pragma once

#include <thread>
#include <vector>

namespace triop {

// Splits [0, n) into at most `jobs` contiguous chunks, runs `fn(begin, end)`
// on each, and returns the per-chunk results in chunk order. Chunk boundaries
// depend only on (n, jobs), so merged output is deterministic for any thread
// scheduling; with jobs <= 1 everything runs inline.
template <typename R, typename Fn>
std::vector<R> parallel_chunks(long long n, int jobs, Fn fn) {
    if (jobs < 1) jobs = 1;
    long long nchunks = std::min<long long>(jobs, n > 0 ? n : 1);
    std::vector<R> results(nchunks);
    if (nchunks <= 1) {
        results[0] = fn(0, n);
        return results;
    }
    std::vector<std::thread> threads;
    long long per = n / nchunks, extra = n % nchunks, begin = 0;
    for (long long c = 0; c < nchunks; ++c) {
        long long end = begin + per + (c < extra ? 1 : 0);
        threads.emplace_back([&results, c, begin, end, &fn] { results[c] = fn(begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace triop
