#include <parsub/count.hh>
#include <parsub/errors.hh>

#include "enumerate.hh"

#include <atomic>
#include <stdexcept>

using namespace parsub;

using std::uint64_t;
using std::vector;

namespace
{
    auto require_k(unsigned k) -> void
    {
        if (0 == k)
            throw std::invalid_argument("k must be at least 1");
    }

    auto subset_total(const Graph & g, unsigned k, const EnumerationOptions & options) -> uint64_t
    {
        auto total = binomial(g.size(), k);
        if (total > options.budget)
            throw BudgetExceeded("enumerating " + std::to_string(k) + "-subsets", to_string(total) + " subsets", options.budget);
        return total.convert_to<uint64_t>();
    }

    auto check_colouring(const Graph & g, const Colouring & f, unsigned k) -> void
    {
        require_k(k);
        if (f.colour_count() != k)
            throw std::invalid_argument("colouring declares " + std::to_string(f.colour_count()) + " colours but k is " + std::to_string(k));
        if (f.size() != g.size())
            throw std::invalid_argument("colouring covers " + std::to_string(f.size()) + " vertices but the graph has " + std::to_string(g.size()));
    }

    /**
     * Depth-first over colour classes 1..k, one vertex per class, carrying the
     * edge count and colour-pair pattern of the partial choice. visit(edges,
     * pattern) sees every colourful set exactly once. Parallel runs split the
     * first class between workers.
     */
    template <typename Visit_>
    auto walk_colourful(const Graph & g, const Colouring & f, unsigned k, const EnumerationOptions & options,
            Visit_ && make_visitor) -> void
    {
        auto total = colourful_subset_count(f);
        if (total > options.budget)
            throw BudgetExceeded("enumerating colourful sets", to_string(total) + " sets", options.budget);
        if (total == 0)
            return;

        auto classes = f.classes();

        // pair_bit[c][j]: pattern bit for colours j+1 < c+1
        vector<vector<uint64_t> > pair_bit(k, vector<uint64_t>(k, 0));
        for (unsigned a = 1 ; a <= k ; ++a)
            for (unsigned b = a + 1 ; b <= k ; ++b)
                pair_bit[b - 1][a - 1] = pair_bit[a - 1][b - 1] = uint64_t(1) << colour_pair_index(a, b);

        detail::run_partitioned(classes[0].size(), options.workers, [&] (unsigned worker, uint64_t lo, uint64_t hi) {
                auto visit = make_visitor(worker);
                vector<Vertex> chosen(k);
                auto recurse = [&] (auto & self, unsigned depth, unsigned edges, uint64_t pattern) -> void {
                    if (depth == k) {
                        visit(edges, pattern);
                        return;
                    }
                    for (auto v : classes[depth]) {
                        unsigned e = edges;
                        uint64_t p = pattern;
                        for (unsigned j = 0 ; j < depth ; ++j)
                            if (g.adjacent(v, chosen[j])) {
                                ++e;
                                p |= pair_bit[depth][j];
                            }
                        chosen[depth] = v;
                        self(self, depth + 1, e, p);
                    }
                };

                for (uint64_t i = lo ; i < hi ; ++i) {
                    chosen[0] = classes[0][i];
                    recurse(recurse, 1, 0, 0);
                }
                });
    }
}

auto parsub::count_parity_subsets(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & options) -> BigCount
{
    require_k(k);
    if (k > g.size())
        return 0;

    auto total = subset_total(g, k, options);
    vector<uint64_t> partial(std::max(1u, options.workers), 0);
    detail::run_partitioned(total, options.workers, [&] (unsigned worker, uint64_t lo, uint64_t hi) {
            uint64_t hits = 0;
            bool want_odd = t == ParityTarget::Odd;
            detail::enumerate_with_edges(g, k, lo, hi, [&] (unsigned edges, auto) {
                    hits += ((edges & 1) == unsigned(want_odd));
                    return true;
                    });
            partial[worker] = hits;
            });

    BigCount result = 0;
    for (auto p : partial)
        result += p;
    return result;
}

auto parsub::count_parity_tuples(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & options) -> BigCount
{
    return count_parity_subsets(g, k, t, options) * factorial(k);
}

auto parsub::edge_count_histogram(const Graph & g, unsigned k, const EnumerationOptions & options) -> vector<BigCount>
{
    require_k(k);
    unsigned buckets = colour_pair_width(k) + 1;
    vector<BigCount> result(buckets, 0);
    if (k > g.size())
        return result;

    auto total = subset_total(g, k, options);
    vector<vector<uint64_t> > partial(std::max(1u, options.workers), vector<uint64_t>(buckets, 0));
    detail::run_partitioned(total, options.workers, [&] (unsigned worker, uint64_t lo, uint64_t hi) {
            auto & mine = partial[worker];
            detail::enumerate_with_edges(g, k, lo, hi, [&] (unsigned edges, auto) {
                    ++mine[edges];
                    return true;
                    });
            });

    for (auto & p : partial)
        for (unsigned e = 0 ; e < buckets ; ++e)
            result[e] += p[e];
    return result;
}

auto parsub::find_parity_subset(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & options) -> std::optional<VertexSet>
{
    require_k(k);
    if (k > g.size())
        return std::nullopt;

    auto total_big = binomial(g.size(), k);
    uint64_t total = total_big > options.budget ? options.budget : total_big.convert_to<uint64_t>();

    std::atomic<bool> found{ false };
    std::mutex witness_mutex;
    std::optional<std::pair<uint64_t, VertexSet> > best;

    // chunks so that one worker's early exit quickly stops the others
    constexpr uint64_t chunk = 1 << 14;
    uint64_t chunks = (total + chunk - 1) / chunk;
    std::atomic<uint64_t> next_chunk{ 0 };

    detail::run_partitioned(std::max(1u, options.workers), options.workers, [&] (unsigned, uint64_t, uint64_t) {
            while (! found.load(std::memory_order_relaxed)) {
                auto c = next_chunk.fetch_add(1);
                if (c >= chunks)
                    break;
                auto lo = c * chunk, hi = std::min(total, lo + chunk);
                uint64_t index = lo;
                std::optional<VertexSet> hit;
                detail::enumerate_with_edges(g, k, lo, hi, [&] (unsigned edges, auto comb) {
                        if (matches(t, edges)) {
                            hit = VertexSet::from_members(g.size(), comb);
                            return false;
                        }
                        ++index;
                        return true;
                        });
                if (hit) {
                    std::lock_guard<std::mutex> guard(witness_mutex);
                    if (! best || index < best->first)
                        best.emplace(index, std::move(*hit));
                    found = true;
                }
            }
            });

    if (best)
        return best->second;
    if (total_big > options.budget)
        throw BudgetExceeded("exhaustive search for a " + to_string(t) + " " + std::to_string(k) + "-subset",
                to_string(total_big) + " subsets", options.budget);
    return std::nullopt;
}

auto parsub::colourful_subset_count(const Colouring & f) -> BigCount
{
    BigCount result = 1;
    for (auto & c : f.classes())
        result *= c.size();
    return result;
}

auto parsub::count_colourful_parity_subsets(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
        const EnumerationOptions & options) -> BigCount
{
    check_colouring(g, f, k);
    vector<uint64_t> partial(std::max(1u, options.workers), 0);
    walk_colourful(g, f, k, options, [&] (unsigned worker) {
            return [&, worker] (unsigned edges, uint64_t) {
                partial[worker] += matches(t, edges);
            };
            });

    BigCount result = 0;
    for (auto p : partial)
        result += p;
    return result;
}

auto parsub::count_colourful_parity_embeddings(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
        const EnumerationOptions & options) -> BigCount
{
    return count_colourful_parity_subsets(g, f, k, t, options) * factorial(k);
}

auto parsub::count_multicolour_cliques(const Graph & g, const Colouring & f, unsigned k, const EnumerationOptions & options) -> BigCount
{
    check_colouring(g, f, k);
    unsigned full = colour_pair_width(k);
    vector<uint64_t> partial(std::max(1u, options.workers), 0);
    walk_colourful(g, f, k, options, [&] (unsigned worker) {
            return [&, worker] (unsigned edges, uint64_t) {
                partial[worker] += (edges == full);
            };
            });

    BigCount result = 0;
    for (auto p : partial)
        result += p;
    return result;
}

auto PatternCensus::total() const -> BigCount
{
    BigCount result = 0;
    for (auto & c : counts)
        result += c;
    return result;
}

auto parsub::colour_pattern_census(const Graph & g, const Colouring & f, unsigned k, const EnumerationOptions & options) -> PatternCensus
{
    check_colouring(g, f, k);
    unsigned width = colour_pair_width(k);
    if (width > 20)
        throw std::length_error("pattern census for k = " + std::to_string(k) + " needs 2^" + std::to_string(width) + " cells");

    std::size_t cells = std::size_t(1) << width;
    vector<vector<uint64_t> > partial(std::max(1u, options.workers), vector<uint64_t>(cells, 0));
    walk_colourful(g, f, k, options, [&] (unsigned worker) {
            return [&, worker] (unsigned, uint64_t pattern) {
                ++partial[worker][pattern];
            };
            });

    PatternCensus result{ k, vector<BigCount>(cells, 0) };
    for (auto & p : partial)
        for (std::size_t i = 0 ; i < cells ; ++i)
            result.counts[i] += p[i];
    return result;
}
