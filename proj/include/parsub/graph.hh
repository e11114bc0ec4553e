#ifndef PARSUB_GRAPH_HH
#define PARSUB_GRAPH_HH 1

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace parsub
{
    using Vertex = unsigned;

    inline auto words_for(unsigned n) -> unsigned
    {
        return (n + 63) / 64;
    }

    /**
     * A subset of [0, n), stored as a fixed-width bit vector with the same word
     * layout as a Graph adjacency row, so masking a row by a set is a plain
     * word-wise AND.
     */
    class VertexSet
    {
        private:
            unsigned _universe = 0;
            unsigned _size = 0;
            std::vector<std::uint64_t> _words;

        public:
            VertexSet() = default;

            explicit VertexSet(unsigned universe);

            VertexSet(unsigned universe, std::initializer_list<Vertex> members);

            static auto from_members(unsigned universe, std::span<const Vertex> members) -> VertexSet;

            auto universe() const -> unsigned
            {
                return _universe;
            }

            auto size() const -> unsigned
            {
                return _size;
            }

            auto empty() const -> bool
            {
                return 0 == _size;
            }

            auto contains(Vertex v) const -> bool
            {
                return v < _universe && (_words[v / 64] >> (v % 64)) & 1;
            }

            auto insert(Vertex v) -> void;

            auto erase(Vertex v) -> void;

            auto words() const -> std::span<const std::uint64_t>
            {
                return _words;
            }

            auto members() const -> std::vector<Vertex>;

            /// Smallest member, or universe() if empty.
            auto first() const -> Vertex;

            auto intersection_size(const VertexSet & other) const -> unsigned;

            auto complement() const -> VertexSet;

            friend auto operator== (const VertexSet &, const VertexSet &) -> bool = default;
    };

    auto to_string(const VertexSet &) -> std::string;

    /**
     * Simple undirected graph on vertices 0..n-1 with bit-vector adjacency
     * rows. Row i has bit j set iff ij is an edge; rows are symmetric and the
     * diagonal is zero.
     */
    class Graph
    {
        private:
            unsigned _size = 0;
            unsigned _words_per_row = 0;
            std::uint64_t _edges = 0;
            std::vector<std::uint64_t> _adjacency;

            auto flip(Vertex u, Vertex v) -> void;

        public:
            Graph() = default;

            explicit Graph(unsigned size);

            auto size() const -> unsigned
            {
                return _size;
            }

            auto words_per_row() const -> unsigned
            {
                return _words_per_row;
            }

            auto edge_count() const -> std::uint64_t
            {
                return _edges;
            }

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return (_adjacency[u * _words_per_row + v / 64] >> (v % 64)) & 1;
            }

            auto row(Vertex v) const -> std::span<const std::uint64_t>
            {
                return { _adjacency.data() + std::size_t(v) * _words_per_row, _words_per_row };
            }

            auto degree(Vertex v) const -> unsigned;

            auto neighbourhood(Vertex v) const -> VertexSet;

            /// Throws std::invalid_argument on a loop or an out-of-range vertex.
            /// Adding an existing edge is a no-op.
            auto add_edge(Vertex u, Vertex v) -> void;

            auto remove_edge(Vertex u, Vertex v) -> void;

            auto toggle_edge(Vertex u, Vertex v) -> void;

            /// Sorted (u < v) edge list.
            auto edges() const -> std::vector<std::pair<Vertex, Vertex> >;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };

    auto complement(const Graph & g) -> Graph;

    /// Number of edges of g with both endpoints in u.
    auto induced_edge_count(const Graph & g, const VertexSet & u) -> unsigned;

    /// Induced subgraph on the listed vertices, relabelled 0..|u|-1 in order.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> u) -> Graph;

    /**
     * Vertex colouring into colours 1..k. Not required to be surjective or
     * proper.
     */
    class Colouring
    {
        private:
            unsigned _colours;
            std::vector<unsigned> _colour_of;

        public:
            /// Throws std::invalid_argument if k == 0 or an entry is outside [1, k].
            Colouring(unsigned k, std::vector<unsigned> colour_of);

            auto colour_count() const -> unsigned
            {
                return _colours;
            }

            auto size() const -> unsigned
            {
                return _colour_of.size();
            }

            auto operator[] (Vertex v) const -> unsigned
            {
                return _colour_of[v];
            }

            auto colours() const -> const std::vector<unsigned> &
            {
                return _colour_of;
            }

            /// Vertices of each colour; index 0 is colour 1.
            auto classes() const -> std::vector<std::vector<Vertex> >;

            friend auto operator== (const Colouring &, const Colouring &) -> bool = default;
    };

    enum class ParityTarget
    {
        Even,
        Odd
    };

    inline auto matches(ParityTarget t, std::uint64_t edges) -> bool
    {
        return (edges % 2 == 0) == (t == ParityTarget::Even);
    }

    inline auto opposite(ParityTarget t) -> ParityTarget
    {
        return t == ParityTarget::Even ? ParityTarget::Odd : ParityTarget::Even;
    }

    auto to_string(ParityTarget) -> std::string;

    /// Accepts "even" or "odd"; throws std::invalid_argument otherwise.
    auto parse_parity(std::string_view) -> ParityTarget;

    /// Edge-list format: "n m" then m lines "u v", 0-indexed. Throws InputError
    /// with the offending line number.
    auto parse_graph(std::string_view text) -> Graph;

    auto read_graph_file(const std::string & filename) -> Graph;

    auto write_graph(std::ostream &, const Graph &) -> void;

    /// n lines, one colour in [1, k] each.
    auto parse_colouring(std::string_view text, unsigned k, unsigned n) -> Colouring;

    auto read_colouring_file(const std::string & filename, unsigned k, unsigned n) -> Colouring;

    namespace generators
    {
        struct Clique { unsigned n; };
        struct Independent { unsigned n; };
        struct TwoCliques { unsigned a, b; };
        struct CompleteBipartite { unsigned a, b; };
        struct Gnp { unsigned n; double p; std::uint64_t seed; };
        struct Cycle { unsigned n; };
        struct Path { unsigned n; };
    }

    using GraphSpec = std::variant<generators::Clique, generators::Independent, generators::TwoCliques,
          generators::CompleteBipartite, generators::Gnp, generators::Cycle, generators::Path>;

    /// Deterministic for a fixed GraphSpec. In the two-part classes vertices 0..a-1
    /// form the first side.
    auto generate(const GraphSpec &) -> Graph;
}

#endif
