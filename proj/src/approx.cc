#include <parsub/approx.hh>
#include <parsub/decide.hh>

#include "enumerate.hh"

#include <cmath>
#include <stdexcept>

using namespace parsub;

using std::uint64_t;
using std::vector;

auto parsub::density_lower_bound(unsigned k, uint64_t n) -> DensityBound
{
    if (k < 3)
        throw std::invalid_argument("the density bound needs k >= 3");
    if (n < k)
        throw std::invalid_argument("the density bound needs n >= k");

    BigInt denominator = BigInt(1) << (2 * k * k + 1);
    denominator *= BigInt(k) * k;
    denominator *= BigInt(n) * n;

    auto threshold = exhaustive_threshold(k);
    return DensityBound{ k, n, BigRational(binomial(n, k), denominator), threshold && n >= *threshold };
}

namespace
{
    auto splitmix(uint64_t & state) -> uint64_t
    {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
}

DrawRng::DrawRng(uint64_t seed, uint64_t draw) :
    _state(seed)
{
    uint64_t key = draw;
    _state ^= splitmix(key);
}

auto DrawRng::operator() () -> result_type
{
    return splitmix(_state);
}

auto DrawRng::below(uint64_t bound) -> uint64_t
{
    uint64_t threshold = (0 - bound) % bound;
    while (true) {
        auto x = (*this)();
        if (x >= threshold)
            return x % bound;
    }
}

namespace
{
    /// Floyd: for j = n-k..n-1 pick x in [0, j]; take x unless already
    /// taken, in which case take j.
    auto floyd(unsigned n, unsigned k, DrawRng & rng, vector<Vertex> & out) -> void
    {
        out.clear();
        for (unsigned j = n - k ; j < n ; ++j) {
            auto x = Vertex(rng.below(uint64_t(j) + 1));
            bool taken = false;
            for (auto y : out)
                if (y == x) {
                    taken = true;
                    break;
                }
            out.push_back(taken ? j : x);
        }
    }

    auto induced_edges(const Graph & g, const vector<Vertex> & s) -> unsigned
    {
        unsigned edges = 0;
        for (unsigned i = 0 ; i < s.size() ; ++i)
            for (unsigned j = i + 1 ; j < s.size() ; ++j)
                edges += g.adjacent(s[i], s[j]);
        return edges;
    }

    auto check_accuracy(double epsilon, double delta) -> void
    {
        if (! (epsilon > 0) || ! std::isfinite(epsilon))
            throw std::invalid_argument("epsilon must be positive");
        if (! (delta > 0 && delta < 1))
            throw std::invalid_argument("delta must lie in (0, 1)");
    }

    /// Outcome of draws [first, first + count) in parallel; bit i is draw first + i.
    auto draw_outcomes(const Graph & g, unsigned k, ParityTarget t, uint64_t seed, uint64_t first, uint64_t count, unsigned workers)
        -> vector<char>
    {
        vector<char> hit(count, 0);
        detail::run_partitioned(count, workers, [&] (unsigned, uint64_t lo, uint64_t hi) {
                vector<Vertex> s;
                s.reserve(k);
                for (uint64_t i = lo ; i < hi ; ++i) {
                    DrawRng rng(seed, first + i);
                    floyd(g.size(), k, rng, s);
                    hit[i] = matches(t, induced_edges(g, s));
                }
                });
        return hit;
    }
}

auto parsub::sample_k_subset(unsigned n, unsigned k, uint64_t seed, uint64_t draw) -> VertexSet
{
    if (k > n)
        throw std::invalid_argument("cannot sample " + std::to_string(k) + " of " + std::to_string(n) + " vertices");
    DrawRng rng(seed, draw);
    vector<Vertex> s;
    floyd(n, k, rng, s);
    return VertexSet::from_members(n, s);
}

auto parsub::to_string(EstimateMode m) -> std::string
{
    return m == EstimateMode::Guaranteed ? "guaranteed" : "adaptive";
}

auto parsub::parse_estimate_mode(const std::string & s) -> EstimateMode
{
    if (s == "guaranteed")
        return EstimateMode::Guaranteed;
    if (s == "adaptive")
        return EstimateMode::Adaptive;
    throw std::invalid_argument("mode must be 'guaranteed' or 'adaptive', not '" + s + "'");
}

auto parsub::adaptive_success_target(double epsilon, double delta) -> uint64_t
{
    check_accuracy(epsilon, delta);
    return uint64_t(std::ceil(3.0 * (1.0 + epsilon) * std::log(2.0 / delta) / (epsilon * epsilon)));
}

auto parsub::minimum_density(unsigned k, uint64_t n) -> BigRational
{
    if (k == 0 || k > n)
        throw std::invalid_argument("minimum density needs 1 <= k <= n");
    if (k <= 2)
        return BigRational(1, binomial(n, k));
    return density_lower_bound(k, n).bound / BigRational(binomial(n, k));
}

auto parsub::guaranteed_sample_count(unsigned k, uint64_t n, double epsilon, double delta) -> BigInt
{
    check_accuracy(epsilon, delta);
    auto mu = minimum_density(k, n);
    BigRational factor(std::log(2.0 / delta) / (2.0 * epsilon * epsilon));
    BigRational m = factor / (mu * mu);
    BigInt q = numerator(m) / denominator(m);
    if (q * denominator(m) != numerator(m))
        ++q;
    return q;
}

GuaranteedModeRefused::GuaranteedModeRefused(const BigInt & required, uint64_t cap) :
    BudgetExceeded("guaranteed mode", to_string(required) + " samples", cap),
    _required(required)
{
}

SampleCapExceeded::SampleCapExceeded(uint64_t successes, uint64_t target, uint64_t cap) :
    BudgetExceeded("adaptive sampling reached only " + std::to_string(successes) + " of " + std::to_string(target) + " successes",
            "more than " + std::to_string(cap) + " samples", cap)
{
}

auto parsub::estimate_parity_count(const Graph & g, unsigned k, ParityTarget t, const EstimateOptions & options) -> Estimate
{
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
    check_accuracy(options.epsilon, options.delta);

    Estimate result;
    result.epsilon = options.epsilon;
    result.delta = options.delta;
    result.mode = options.mode;
    if (k >= 3 && g.size() >= k)
        result.density = density_lower_bound(k, g.size());

    if (! decide(g, k, t, DecideOptions{ options.decision, false }).exists) {
        result.decided_zero = true;
        return result;
    }

    auto subsets = BigRational(binomial(g.size(), k));
    constexpr uint64_t batch_per_worker = 1 << 14;
    uint64_t batch = batch_per_worker * std::max(1u, options.workers);

    if (options.mode == EstimateMode::Guaranteed) {
        result.planned = guaranteed_sample_count(k, g.size(), options.epsilon, options.delta);
        if (result.planned > options.sample_cap && ! options.force)
            throw GuaranteedModeRefused(result.planned, options.sample_cap);
        if (result.planned > std::numeric_limits<uint64_t>::max())
            throw GuaranteedModeRefused(result.planned, std::numeric_limits<uint64_t>::max());

        auto m = result.planned.convert_to<uint64_t>();
        for (uint64_t first = 0 ; first < m ; first += batch) {
            auto outcomes = draw_outcomes(g, k, t, options.seed, first, std::min(batch, m - first), options.workers);
            for (auto o : outcomes)
                result.successes += o;
        }
        result.samples_used = m;
        result.value = subsets * BigRational(result.successes, m);
        return result;
    }

    auto target = adaptive_success_target(options.epsilon, options.delta);
    result.planned = target;
    for (uint64_t first = 0 ; first < options.sample_cap ; first += batch) {
        auto outcomes = draw_outcomes(g, k, t, options.seed, first, std::min(batch, options.sample_cap - first), options.workers);
        for (uint64_t i = 0 ; i < outcomes.size() ; ++i) {
            result.successes += outcomes[i];
            if (result.successes == target) {
                result.samples_used = first + i + 1;
                result.value = subsets * BigRational(target, result.samples_used);
                return result;
            }
        }
    }

    throw SampleCapExceeded(result.successes, target, options.sample_cap);
}
