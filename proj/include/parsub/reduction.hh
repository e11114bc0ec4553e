#ifndef PARSUB_REDUCTION_HH
#define PARSUB_REDUCTION_HH 1

#include <parsub/big.hh>
#include <parsub/count.hh>
#include <parsub/graph.hh>
#include <parsub/lattice.hh>
#include <parsub/matrix.hh>
#include <parsub/pattern.hh>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace parsub
{
    /// Largest k accepted without allow_large.
    inline constexpr unsigned reduction_k_limit = 5;

    /**
     * The index family: every pattern I having a sub-pattern I' whose edge
     * count has the target parity. For Even that is every pattern, for Odd
     * every non-empty one. Ordered by cardinality, so the full pattern is
     * last.
     */
    auto enumerate_index_family(unsigned k, ParityTarget t, bool allow_large = false) -> std::vector<EdgePattern>;

    /// Keeps the edges uv of g with {f(u), f(v)} in i. Monochromatic edges
    /// are always dropped.
    auto filter_graph(const Graph & g, const Colouring & f, const EdgePattern & i) -> Graph;

    /// g(J) = [|J| has parity t] over all patterns of width C(k, 2).
    auto parity_indicator(unsigned k, ParityTarget t) -> LatticeFn;

    /// a_ij = k! [|I_i & I_j| has parity t]. Throws ConsistencyError if the
    /// determinant of the normalised 0/1 matrix vanishes.
    auto build_reduction_matrix(unsigned k, ParityTarget t, const std::vector<EdgePattern> & family) -> BigMatrix;

    /// Labelled colourful parity embeddings ColStrEmb(G_i, f).
    using ColourfulOracle = std::function<BigCount (const Graph &, const Colouring &)>;

    /// k! times count_colourful_parity_subsets.
    auto exact_oracle(unsigned k, ParityTarget t, const EnumerationOptions & = {}) -> ColourfulOracle;

    enum class ReductionSolver
    {
        Automatic,
        Elimination,
        Factorised
    };

    struct ReductionOptions
    {
        bool allow_large = false;
        ReductionSolver solver = ReductionSolver::Automatic;
    };

    struct ReductionResult
    {
        unsigned k = 0;
        ParityTarget target = ParityTarget::Even;
        std::vector<EdgePattern> family;
        BigMatrix matrix;
        std::vector<BigCount> z;
        std::vector<BigCount> solution;
        BigCount cliques;
        std::size_t oracle_calls = 0;
        ReductionSolver solver_used = ReductionSolver::Elimination;
    };

    /**
     * Recovers the number of multicolour k-cliques of (g, f) from oracle
     * answers on the filtered graphs G_i by solving A N = z exactly. Throws
     * ConsistencyError if some z_i is not a multiple of k! or N is not a
     * vector of non-negative integers.
     */
    auto run_reduction(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
            const ColourfulOracle & oracle, const ReductionOptions & = {}) -> ReductionResult;

    /// Adds universal vertices w_{k+1}..w_{k'}, vertex w_i getting colour i.
    auto pad_instance(const Graph & g, const Colouring & f, unsigned k, unsigned k_prime) -> std::pair<Graph, Colouring>;

    auto to_string(ReductionSolver) -> std::string;
}

#endif
