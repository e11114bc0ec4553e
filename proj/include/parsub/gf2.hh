#ifndef PARSUB_GF2_HH
#define PARSUB_GF2_HH 1

#include <parsub/big.hh>
#include <parsub/graph.hh>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parsub
{
    /**
     * q(x) = sum over pairs {i,j} of x_i x_j + sum over lin of x_i + constant,
     * over GF(2) in n variables. Pairs are kept sorted with i < j.
     */
    class QuadraticFormF2
    {
        private:
            unsigned _variables = 0;
            std::vector<std::pair<unsigned, unsigned> > _quadratic;
            std::vector<bool> _linear;
            bool _constant = false;

        public:
            QuadraticFormF2() = default;

            explicit QuadraticFormF2(unsigned variables);

            /// Duplicate pairs cancel (coefficients are mod 2); i == j is
            /// folded into the linear part since x^2 = x on GF(2).
            QuadraticFormF2(unsigned variables, std::vector<std::pair<unsigned, unsigned> > quadratic,
                    std::vector<bool> linear = {}, bool constant = false);

            auto variables() const -> unsigned
            {
                return _variables;
            }

            auto quadratic() const -> const std::vector<std::pair<unsigned, unsigned> > &
            {
                return _quadratic;
            }

            auto linear() const -> const std::vector<bool> &
            {
                return _linear;
            }

            auto constant() const -> bool
            {
                return _constant;
            }

            /// x holds bit i for variable i.
            auto evaluate(std::span<const bool> x) const -> bool;

            friend auto operator== (const QuadraticFormF2 &, const QuadraticFormF2 &) -> bool = default;
    };

    auto to_string(const QuadraticFormF2 &) -> std::string;

    /// One edge, one monomial X_i X_j; no linear or constant part.
    auto encode_polynomial(const Graph & g) -> QuadraticFormF2;

    /**
     * Result of pulling out one hyperbolic pair. With a, b the chosen
     * variables, and alpha, beta the affine forms multiplying x_a and x_b,
     * q = (x_a + beta)(x_b + alpha) + rest, where rest = alpha beta + (terms
     * without a or b). The change of variables is a bijection, so
     * zeros(q) = 3 zeros(rest) + ones(rest), rest counted over the other
     * n - 2 variables.
     */
    struct PairElimination
    {
        unsigned a, b;

        /// Same variable numbering as the input; a and b no longer occur.
        QuadraticFormF2 rest;
    };

    /// Requires at least one quadratic monomial; eliminates the first one.
    auto eliminate_pair(const QuadraticFormF2 &) -> PairElimination;

    /// |{x in GF(2)^n : q(x) = 0}|, in O(n^3 / 64) word operations.
    auto count_zeros(const QuadraticFormF2 &) -> BigCount;

    /// Number of vertex subsets of any size, the empty set included, that
    /// induce an even number of edges.
    auto total_even_subgraphs(const Graph & g) -> BigCount;
}

#endif
