#ifndef PARSUB_SRC_ENUMERATE_HH
#define PARSUB_SRC_ENUMERATE_HH 1

#include <parsub/graph.hh>
#include <parsub/subsets.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace parsub::detail
{
    /**
     * Visits every k-subset with colex index in [begin, end) together with its
     * induced edge count. The count is maintained incrementally: suffix[i]
     * holds the number of edges among positions i..k-1 and only the positions
     * rewritten by a cursor step are recomputed. For n <= 64 the suffix sets
     * are single words and each recomputation is one popcount.
     *
     * visit(edges, combination) returns false to stop early. Returns the number
     * of subsets visited.
     */
    template <typename Visit_>
    auto enumerate_with_edges(const Graph & g, unsigned k, std::uint64_t begin, std::uint64_t end, Visit_ && visit) -> std::uint64_t
    {
        if (begin >= end)
            return 0;

        SubsetCursor cursor(g.size(), k, begin);
        auto c = cursor.combination();
        std::vector<unsigned> suffix(k + 1, 0);
        std::uint64_t visited = 0;

        if (g.size() <= 64) {
            std::vector<std::uint64_t> rows(g.size());
            for (Vertex v = 0 ; v < g.size() ; ++v)
                rows[v] = g.row(v)[0];
            std::vector<std::uint64_t> mask(k + 1, 0);

            auto rebuild = [&] (unsigned top) {
                for (unsigned i = top + 1 ; i-- > 0 ; ) {
                    suffix[i] = suffix[i + 1] + std::popcount(rows[c[i]] & mask[i + 1]);
                    mask[i] = mask[i + 1] | (std::uint64_t(1) << c[i]);
                }
            };

            if (k > 0)
                rebuild(k - 1);
            for (std::uint64_t idx = begin ; idx < end ; ++idx) {
                ++visited;
                if (! visit(suffix[0], c))
                    return visited;
                if (idx + 1 < end) {
                    auto top = cursor.advance();
                    c = cursor.combination();
                    rebuild(top);
                }
            }
        }
        else {
            auto rebuild = [&] (unsigned top) {
                for (unsigned i = top + 1 ; i-- > 0 ; ) {
                    unsigned add = 0;
                    for (unsigned j = i + 1 ; j < k ; ++j)
                        add += g.adjacent(c[i], c[j]);
                    suffix[i] = suffix[i + 1] + add;
                }
            };

            if (k > 0)
                rebuild(k - 1);
            for (std::uint64_t idx = begin ; idx < end ; ++idx) {
                ++visited;
                if (! visit(suffix[0], c))
                    return visited;
                if (idx + 1 < end) {
                    auto top = cursor.advance();
                    c = cursor.combination();
                    rebuild(top);
                }
            }
        }

        return visited;
    }

    /// Runs body(worker, begin, end) over `workers` contiguous slices of
    /// [0, total) and rethrows the first exception.
    template <typename Body_>
    auto run_partitioned(std::uint64_t total, unsigned workers, Body_ && body) -> void
    {
        workers = std::max(1u, workers);
        if (workers == 1 || total < workers) {
            body(0u, std::uint64_t(0), total);
            return;
        }

        std::vector<std::thread> threads;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0 ; w < workers ; ++w) {
            auto lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            auto hi = lo + total / workers + (w < total % workers ? 1 : 0);
            threads.emplace_back([&, w, lo, hi] {
                    try {
                        body(w, lo, hi);
                    }
                    catch (...) {
                        std::lock_guard<std::mutex> guard(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                    }
                    });
        }
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
