#ifndef PARSUB_DECIDE_HH
#define PARSUB_DECIDE_HH 1

#include <parsub/count.hh>
#include <parsub/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace parsub
{
    namespace structure
    {
        struct Clique {};
        struct IndependentSet {};

        /// part is the clique containing vertex 0; the other is its complement.
        struct TwoCliqueUnion { VertexSet part; };

        /// part is the side containing vertex 0.
        struct CompleteBipartite { VertexSet part; };

        /**
         * Neither structure holds. Each pair is a certificate against the
         * partition forced by vertex 0 (its closed neighbourhood for two
         * cliques, its non-neighbourhood plus itself for bipartite): the two
         * vertices have the wrong adjacency for that partition.
         */
        struct Other
        {
            std::pair<Vertex, Vertex> not_two_cliques;
            std::pair<Vertex, Vertex> not_bipartite;
        };
    }

    using StructureClass = std::variant<structure::Clique, structure::IndependentSet, structure::TwoCliqueUnion,
          structure::CompleteBipartite, structure::Other>;

    /// Most specific class, with precedence Clique > IndependentSet >
    /// TwoCliqueUnion > CompleteBipartite > Other. O(n^2 / 64) word
    /// operations. Requires n >= 1.
    auto classify(const Graph & g) -> StructureClass;

    auto class_name(const StructureClass &) -> std::string;

    auto is_clique(const Graph & g) -> bool;
    auto is_independent(const Graph & g) -> bool;
    auto is_two_clique_union(const Graph & g) -> bool;
    auto is_complete_bipartite(const Graph & g) -> bool;

    class FlipPreconditionError : public std::invalid_argument
    {
        public:
            enum class Reason
            {
                NotAClique,
                CliqueTooSmall,
                VertexInClique,
                VertexFullyAdjacent,
                VertexIsolatedWithOddK
            };

            FlipPreconditionError(Reason, const std::string &);

            auto reason() const -> Reason
            {
                return _reason;
            }

        private:
            Reason _reason;
    };

    /**
     * Given a k-clique h (k >= 3) and an outside vertex v that is not adjacent
     * to all of h, swaps v in for one vertex of h so that the result has edge
     * count of the opposite parity to C(k, 2). Removing a non-neighbour u of v
     * gives C(k,2) - (r-1) edges and removing a neighbour gives C(k,2) - r,
     * where r counts non-neighbours; for even k and v with no neighbours in h
     * any removal gives C(k,2) - (k-1).
     */
    auto find_parity_flip(const Graph & g, const VertexSet & h, Vertex v) -> VertexSet;

    /// A k-clique or k-independent set, found by the greedy Erdos-Szekeres
    /// walk. Always succeeds when n >= C(2k-2, k-1), in particular when
    /// n >= 4^k. The flag is true for a clique.
    auto find_homogeneous_set(const Graph & g, unsigned k) -> std::optional<std::pair<VertexSet, bool> >;

    /// Greedily grows a clique to a maximal one.
    auto extend_to_maximal_clique(const Graph & g, const VertexSet & clique) -> VertexSet;

    /// Given a clique of size >= k, a k-subset whose edge count differs in
    /// parity from C(k, 2), built as in the case analysis for cliques; none
    /// exists (and nullopt is returned) exactly when g is a clique or k is
    /// odd and g is a disjoint union of two cliques.
    auto opposite_parity_near_clique(const Graph & g, const VertexSet & clique, unsigned k) -> std::optional<VertexSet>;

    /// 4^k, the vertex count from which the structural characterisation is
    /// used instead of exhaustive search; nullopt when it does not fit.
    auto exhaustive_threshold(unsigned k) -> std::optional<std::uint64_t>;

    enum class DecisionRule
    {
        KExceedsN,
        KIsOne,
        StructuralFastPath,
        Exhaustive,
        RamseyParity,
        CliqueNo,
        KTwoModFour,
        TwoCliquesNo,
        IndependentNo,
        BipartiteNo,
        Remaining
    };

    auto to_string(DecisionRule) -> std::string;

    struct Decision
    {
        bool exists = false;
        std::optional<VertexSet> witness;
        DecisionRule rule = DecisionRule::Remaining;
    };

    struct DecideOptions
    {
        EnumerationOptions enumeration = {};
        bool want_witness = true;
    };

    /// Does g have a k-subset inducing an even number of edges? Throws
    /// std::invalid_argument for k = 0 and BudgetExceeded if the exhaustive
    /// step runs past its budget.
    auto decide_even(const Graph & g, unsigned k, const DecideOptions & = {}) -> Decision;

    /// Does g have a k-subset inducing an odd number of edges?
    auto decide_odd(const Graph & g, unsigned k, const DecideOptions & = {}) -> Decision;

    auto decide(const Graph & g, unsigned k, ParityTarget t, const DecideOptions & = {}) -> Decision;
}

#endif
