#ifndef PARSUB_COUNT_HH
#define PARSUB_COUNT_HH 1

#include <parsub/big.hh>
#include <parsub/graph.hh>
#include <parsub/pattern.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace parsub
{
    inline constexpr std::uint64_t default_budget = 100'000'000;

    struct EnumerationOptions
    {
        /// Maximum number of subsets scanned before BudgetExceeded.
        std::uint64_t budget = default_budget;

        /// Threads splitting the colex index range. Results do not depend on it.
        unsigned workers = 1;
    };

    /// Number of k-subsets U with e(G[U]) of parity t. Zero when k > n.
    /// Throws std::invalid_argument for k = 0 and BudgetExceeded if C(n, k)
    /// exceeds the budget.
    auto count_parity_subsets(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & = {}) -> BigCount;

    /// Ordered distinct k-tuples with the parity: k! times the subset count.
    auto count_parity_tuples(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & = {}) -> BigCount;

    /// Entry e is the number of k-subsets inducing exactly e edges,
    /// for e = 0..C(k,2).
    auto edge_count_histogram(const Graph & g, unsigned k, const EnumerationOptions & = {}) -> std::vector<BigCount>;

    /// First k-subset in colex order with the parity, stopping as soon as one
    /// is seen. With several workers the witness found may differ between
    /// runs; it always has the requested parity.
    auto find_parity_subset(const Graph & g, unsigned k, ParityTarget t, const EnumerationOptions & = {}) -> std::optional<VertexSet>;

    /// Colourful k-subsets (one vertex per colour) with the parity. Requires
    /// f to declare exactly k colours and to cover every vertex of g.
    auto count_colourful_parity_subsets(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
            const EnumerationOptions & = {}) -> BigCount;

    /// Labelled version: injective maps [k] -> V with colourful image and the
    /// parity, i.e. k! times count_colourful_parity_subsets.
    auto count_colourful_parity_embeddings(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
            const EnumerationOptions & = {}) -> BigCount;

    auto count_multicolour_cliques(const Graph & g, const Colouring & f, unsigned k, const EnumerationOptions & = {}) -> BigCount;

    /// Number of colourful subsets realising each colour-pair pattern.
    struct PatternCensus
    {
        unsigned k = 0;
        std::vector<BigCount> counts;

        auto operator[] (const EdgePattern & p) const -> const BigCount &
        {
            return counts.at(p.bits);
        }

        auto total() const -> BigCount;
    };

    auto colour_pattern_census(const Graph & g, const Colouring & f, unsigned k, const EnumerationOptions & = {}) -> PatternCensus;

    /// Product of colour-class sizes: the number of colourful k-subsets.
    auto colourful_subset_count(const Colouring & f) -> BigCount;
}

#endif
