#pragma once

// Internal helper shared by the search-style modules; not installed.

#include <atomic>
#include <thread>
#include <vector>

#include "unicrit/exactnum.hpp"

namespace unicrit {

// Run worker(i) for i in [0, jobs) on up to `threads` OS threads, collecting
// vector results per job index.  Results are concatenated in job order, so
// output never depends on the thread count.
template <class Item, class Worker>
std::vector<Item> run_partitioned(long jobs, int threads, Worker&& worker) {
    if (threads < 1) throw InvalidInput("thread count must be >= 1");
    std::vector<std::vector<Item>> per_job(static_cast<size_t>(jobs));
    if (threads == 1 || jobs <= 1) {
        for (long j = 0; j < jobs; ++j) per_job[static_cast<size_t>(j)] = worker(j);
    } else {
        std::atomic<long> counter{0};
        auto drain = [&] {
            for (;;) {
                const long j = counter.fetch_add(1);
                if (j >= jobs) return;
                per_job[static_cast<size_t>(j)] = worker(j);
            }
        };
        std::vector<std::thread> pool;
        const int nt = static_cast<int>(std::min<long>(threads, jobs));
        pool.reserve(static_cast<size_t>(nt));
        for (int t = 0; t < nt; ++t) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }
    std::vector<Item> out;
    for (auto& chunk : per_job)
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    return out;
}

}  // namespace unicrit
