#ifndef PARSUB_SUBSETS_HH
#define PARSUB_SUBSETS_HH 1

#include <parsub/graph.hh>

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace parsub
{
    /// Position of a sorted k-combination in colexicographic order:
    /// sum over i of C(c_i, i + 1).
    auto colex_rank(std::span<const Vertex> combination) -> std::uint64_t;

    /// Inverse of colex_rank. Requires index < C(n, k).
    auto colex_unrank(unsigned n, unsigned k, std::uint64_t index) -> std::vector<Vertex>;

    /**
     * Walks sorted k-combinations of [0, n) in colex order. Positions are
     * numbered from the smallest element, so a step that returns p rewrote
     * positions 0..p and left p+1..k-1 alone; this is what the incremental
     * edge counters rely on.
     */
    class SubsetCursor
    {
        private:
            unsigned _n, _k;
            std::uint64_t _index;
            std::vector<Vertex> _combination;
            bool _done = false;

        public:
            SubsetCursor(unsigned n, unsigned k, std::uint64_t index = 0);

            auto done() const -> bool
            {
                return _done;
            }

            auto index() const -> std::uint64_t
            {
                return _index;
            }

            auto combination() const -> std::span<const Vertex>
            {
                return _combination;
            }

            /// Moves to the next combination. Returns the highest position that
            /// changed, or k if the stream is exhausted.
            auto advance() -> unsigned;

            auto to_set() const -> VertexSet;
    };

    /**
     * The k-subsets of [0, n) with colex index in [begin, end). An empty
     * stream when k > n. Throws std::overflow_error if C(n, k) does not fit
     * in 64 bits.
     */
    class KSubsets
    {
        private:
            unsigned _n, _k;
            std::uint64_t _begin, _end;

        public:
            KSubsets(unsigned n, unsigned k);

            KSubsets(unsigned n, unsigned k, std::uint64_t begin, std::uint64_t end);

            auto size() const -> std::uint64_t
            {
                return _end - _begin;
            }

            auto begin_index() const -> std::uint64_t
            {
                return _begin;
            }

            auto end_index() const -> std::uint64_t
            {
                return _end;
            }

            /// Contiguous near-equal index ranges, in order; each owns its own
            /// cursor when iterated.
            auto split(unsigned parts) const -> std::vector<KSubsets>;

            class Iterator
            {
                private:
                    SubsetCursor _cursor;
                    std::uint64_t _remaining;

                public:
                    using iterator_category = std::input_iterator_tag;
                    using value_type = VertexSet;
                    using difference_type = std::ptrdiff_t;

                    Iterator(unsigned n, unsigned k, std::uint64_t index, std::uint64_t remaining);

                    auto operator* () const -> VertexSet
                    {
                        return _cursor.to_set();
                    }

                    auto combination() const -> std::span<const Vertex>
                    {
                        return _cursor.combination();
                    }

                    auto operator++ () -> Iterator &;

                    auto operator== (std::default_sentinel_t) const -> bool
                    {
                        return 0 == _remaining;
                    }
            };

            auto begin() const -> Iterator;

            auto end() const -> std::default_sentinel_t
            {
                return {};
            }
    };
}

#endif
