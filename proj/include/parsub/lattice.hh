#ifndef PARSUB_LATTICE_HH
#define PARSUB_LATTICE_HH 1

#include <parsub/big.hh>
#include <parsub/matrix.hh>
#include <parsub/pattern.hh>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace parsub
{
    /**
     * An integer-valued function on the subsets of a ground set of size
     * width. Values may be left undefined; operations that need a value
     * which is missing throw std::invalid_argument.
     */
    class LatticeFn
    {
        private:
            unsigned _width;
            std::vector<std::optional<BigInt> > _table;

        public:
            explicit LatticeFn(unsigned width);

            /// Total function from a table indexed by bitmask.
            LatticeFn(unsigned width, std::vector<BigInt> values);

            auto width() const -> unsigned
            {
                return _width;
            }

            auto defined(const EdgePattern & x) const -> bool;

            auto is_total() const -> bool;

            auto set(const EdgePattern & x, BigInt value) -> void;

            auto at(const EdgePattern & x) const -> const BigInt &;

            auto operator() (const EdgePattern & x) const -> const BigInt &
            {
                return at(x);
            }
    };

    /// Closed form on the subset lattice: (-1)^(|y|-|x|) if x <= y, else 0.
    auto mobius(const EdgePattern & x, const EdgePattern & y) -> int;

    /// The recursive definition, mu(x,x) = 1 and mu(x,y) = -sum_{x<=z<y} mu(x,z).
    auto mobius_by_recursion(const EdgePattern & x, const EdgePattern & y) -> int;

    /// Psi_f(x) = f(x) - sum_{z < x} Psi_f(z).
    auto totient_inductive(const LatticeFn & f, const EdgePattern & x) -> BigInt;

    /// Psi_f(x) = sum_{z <= x} f(z) mu(z, x).
    auto totient_mobius(const LatticeFn & f, const EdgePattern & x) -> BigInt;

    /// Both routes; throws ConsistencyError if they disagree.
    auto totient(const LatticeFn & f, const EdgePattern & x) -> BigInt;

    /// a_ij = f(x_i & x_j). Throws std::invalid_argument on duplicates in s.
    auto meet_matrix(const std::vector<EdgePattern> & s, const LatticeFn & f) -> BigMatrix;

    /// {x : f(y) != 0 for some y <= x}, by cardinality then bitmask.
    auto upward_closure_of_support(const LatticeFn & f) -> std::vector<EdgePattern>;

    /// Throws std::invalid_argument unless x_i < x_j implies i < j.
    auto check_linear_extension(const std::vector<EdgePattern> & s) -> void;

    /**
     * det(A) for A = meet_matrix(s, f), as the product over i of
     * sum_{x_j <= x_i} f(x_j) mu(x_j, x_i). Requires s to be the upward
     * closure of the support of f, in an order extending inclusion.
     */
    auto det_via_formula(const std::vector<EdgePattern> & s, const LatticeFn & f) -> BigInt;

    struct BhatFactors
    {
        BigMatrix e;
        BigMatrix lambda;
    };

    /// E with e_ij = [p_j <= s_i] and Lambda = diag(Psi_f(p_r)).
    auto bhat_factors(const std::vector<EdgePattern> & s, const LatticeFn & f, const std::vector<EdgePattern> & p) -> BhatFactors;

    struct DecompositionCheck
    {
        bool holds = false;
        std::optional<std::pair<std::size_t, std::size_t> > mismatch;
    };

    /// Compares meet_matrix(s, f) against E Lambda E^T entry by entry.
    auto verify_decomposition(const std::vector<EdgePattern> & s, const LatticeFn & f, const BhatFactors &) -> DecompositionCheck;

    auto decomposition_check(const std::vector<EdgePattern> & s, const LatticeFn & f, const std::vector<EdgePattern> & p) -> DecompositionCheck;
}

#endif
