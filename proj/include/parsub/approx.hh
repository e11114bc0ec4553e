#ifndef PARSUB_APPROX_HH
#define PARSUB_APPROX_HH 1

#include <parsub/big.hh>
#include <parsub/count.hh>
#include <parsub/errors.hh>
#include <parsub/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parsub
{
    /**
     * Lower bound on a nonzero parity count for n >= 4^k:
     * C(n,k) / (2^(2k^2+1) k^2 n^2). Exact; `applicable` says whether n is
     * large enough for the bound to be a theorem rather than a formula.
     */
    struct DensityBound
    {
        unsigned k;
        std::uint64_t n;
        BigRational bound;
        bool applicable;
    };

    /// Requires k >= 3 and n >= k (std::invalid_argument otherwise).
    auto density_lower_bound(unsigned k, std::uint64_t n) -> DensityBound;

    /**
     * Counter-based generator: draw number i of a run with seed s is produced
     * by a splitmix64 stream keyed on (s, i), so every draw is reproducible on
     * its own and parallel workers can take any subset of draw indices.
     */
    class DrawRng
    {
        private:
            std::uint64_t _state;

        public:
            using result_type = std::uint64_t;

            DrawRng(std::uint64_t seed, std::uint64_t draw);

            static constexpr auto min() -> result_type { return 0; }
            static constexpr auto max() -> result_type { return ~result_type(0); }

            auto operator() () -> result_type;

            /// Uniform on [0, bound), bound > 0, by rejection.
            auto below(std::uint64_t bound) -> std::uint64_t;
    };

    /// Uniform k-subset of [0, n) (Floyd's algorithm), determined by seed and
    /// draw index. std::invalid_argument if k > n.
    auto sample_k_subset(unsigned n, unsigned k, std::uint64_t seed, std::uint64_t draw) -> VertexSet;

    enum class EstimateMode
    {
        Guaranteed,
        Adaptive
    };

    auto to_string(EstimateMode) -> std::string;
    auto parse_estimate_mode(const std::string &) -> EstimateMode;

    struct EstimateOptions
    {
        double epsilon = 0.1;
        double delta = 0.05;
        EstimateMode mode = EstimateMode::Adaptive;
        std::uint64_t seed = 0;

        /// Adaptive: give up after this many draws. Guaranteed: refuse to run
        /// if the required sample count is larger, unless forced.
        std::uint64_t sample_cap = 100'000'000;
        bool force = false;

        unsigned workers = 1;

        /// Budget for the zero-count decision that runs first.
        EnumerationOptions decision = {};
    };

    struct Estimate
    {
        BigRational value = 0;
        std::uint64_t samples_used = 0;
        std::uint64_t successes = 0;
        double epsilon = 0;
        double delta = 0;
        EstimateMode mode = EstimateMode::Adaptive;

        /// The decision procedure said the count is zero; no sampling done.
        bool decided_zero = false;

        /// m for Guaranteed, the success target for Adaptive.
        BigInt planned = 0;

        /// Present for k >= 3.
        std::optional<DensityBound> density;
    };

    /// Successes to wait for in Adaptive mode: ceil(3 (1+eps) ln(2/delta) / eps^2).
    auto adaptive_success_target(double epsilon, double delta) -> std::uint64_t;

    /// Smallest detectable density used by Guaranteed mode: the density bound
    /// divided by C(n,k) for k >= 3, and 1/C(n,k) for k <= 2.
    auto minimum_density(unsigned k, std::uint64_t n) -> BigRational;

    /// Hoeffding sample size ceil(ln(2/delta) / (2 (eps mu)^2)) for
    /// mu = minimum_density(k, n).
    auto guaranteed_sample_count(unsigned k, std::uint64_t n, double epsilon, double delta) -> BigInt;

    /// Guaranteed mode asked for more samples than the cap allows.
    class GuaranteedModeRefused : public BudgetExceeded
    {
        private:
            BigInt _required;

        public:
            GuaranteedModeRefused(const BigInt & required, std::uint64_t cap);

            auto required_samples() const -> const BigInt &
            {
                return _required;
            }
    };

    /// Adaptive mode ran out of draws before reaching its success target.
    class SampleCapExceeded : public BudgetExceeded
    {
        public:
            SampleCapExceeded(std::uint64_t successes, std::uint64_t target, std::uint64_t cap);
    };

    /**
     * Estimate of the number of k-subsets with parity t. If the decision
     * procedure answers NO the estimate is exactly 0. Otherwise:
     *  - Guaranteed draws m = guaranteed_sample_count samples and returns
     *    C(n,k) successes / m;
     *  - Adaptive draws until the success target s* is reached and returns
     *    C(n,k) s* / draws.
     * Results depend only on the inputs and seed, not on the worker count.
     */
    auto estimate_parity_count(const Graph & g, unsigned k, ParityTarget t, const EstimateOptions & = {}) -> Estimate;
}

#endif
