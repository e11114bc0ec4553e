#include <doctest.h>

#include "oracles.hh"

#include <parsub/approx.hh>
#include <parsub/count.hh>

#include <cmath>

using namespace parsub;

namespace
{
    const auto even = ParityTarget::Even;
    const auto odd = ParityTarget::Odd;

    auto pow2(unsigned e) -> BigInt
    {
        return BigInt(1) << e;
    }
}

TEST_SUITE("approx")
{
    TEST_CASE("density bound")
    {
        auto b = density_lower_bound(3, 64);
        CHECK(b.bound == BigRational(41664, BigInt("19327352832")));
        CHECK(b.applicable);
        CHECK(to_double(b.bound) == doctest::Approx(2.156e-6).epsilon(0.001));

        CHECK(! density_lower_bound(3, 8).applicable);

        auto b4 = density_lower_bound(4, 256);
        CHECK(b4.applicable);
        CHECK(b4.bound == BigRational(binomial(256, 4), pow2(33) * 16 * 256 * 256));

        CHECK_THROWS_AS(density_lower_bound(2, 64), std::invalid_argument);
        CHECK_THROWS_AS(density_lower_bound(5, 4), std::invalid_argument);
    }

    TEST_CASE("density bound follows the formula in n")
    {
        for (unsigned k = 3 ; k <= 5 ; ++k)
            for (std::uint64_t n = k ; n < 300 ; n += 13) {
                auto b = density_lower_bound(k, n);
                CHECK(b.bound == BigRational(binomial(n, k), pow2(2 * k * k + 1) * k * k * n * n));
                CHECK(b.applicable == (n >= (std::uint64_t(1) << (2 * k))));
                auto next = density_lower_bound(k, n + 1);
                CHECK((next.bound > b.bound) == (BigRational(binomial(n + 1, k) * n * n) > BigRational(binomial(n, k) * (n + 1) * (n + 1))));
            }
    }

    TEST_CASE("sampler")
    {
        for (std::uint64_t d = 0 ; d < 5 ; ++d)
            CHECK(sample_k_subset(5, 5, 9, d) == VertexSet(5, { 0, 1, 2, 3, 4 }));
        CHECK(sample_k_subset(6, 3, 42, 0) == sample_k_subset(6, 3, 42, 0));
        CHECK(sample_k_subset(6, 3, 42, 0) == VertexSet(6, { 3, 4, 5 }));
        CHECK_THROWS_AS(sample_k_subset(3, 4, 1, 0), std::invalid_argument);

        for (std::uint64_t d = 0 ; d < 1000 ; ++d)
            CHECK(sample_k_subset(20, 7, 3, d).size() == 7);
    }

    TEST_CASE("singletons are uniform")
    {
        const unsigned n = 10, draws = 100000;
        std::vector<unsigned> hits(n, 0);
        for (unsigned d = 0 ; d < draws ; ++d) {
            auto s = sample_k_subset(n, 1, 12345, d);
            REQUIRE(s.size() == 1);
            ++hits[s.first()];
        }
        double expected = double(draws) / n, chi2 = 0;
        for (auto h : hits)
            chi2 += (h - expected) * (h - expected) / expected;
        // 9 degrees of freedom; 27.88 is the 0.999 quantile
        CHECK(chi2 < 27.88);
    }

    TEST_CASE("all 3-subsets of 6 are hit evenly")
    {
        std::map<std::vector<Vertex>, unsigned> hits;
        const unsigned draws = 40000;
        for (unsigned d = 0 ; d < draws ; ++d)
            ++hits[sample_k_subset(6, 3, 77, d).members()];
        CHECK(hits.size() == 20);
        double expected = draws / 20.0, chi2 = 0;
        for (auto & [_, h] : hits)
            chi2 += (h - expected) * (h - expected) / expected;
        // 19 degrees of freedom; 43.82 is the 0.999 quantile
        CHECK(chi2 < 43.82);
    }

    TEST_CASE("simple sampling is unbiased")
    {
        auto g = generate(generators::Gnp{ 20, 0.5, 5 });
        auto exact = count_parity_subsets(g, 3, odd).convert_to<double>();
        double total = binomial(20, 3).convert_to<double>();
        const unsigned m = 10000;
        unsigned successes = 0;
        for (unsigned d = 0 ; d < m ; ++d)
            if (induced_edge_count(g, sample_k_subset(20, 3, 99, d)) % 2 == 1)
                ++successes;
        double p = exact / total;
        double estimate = total * successes / m;
        double se = total * std::sqrt(p * (1 - p) / m);
        CHECK(std::abs(estimate - exact) < 3 * se);
    }

    TEST_CASE("adaptive target and guaranteed sample count")
    {
        CHECK(adaptive_success_target(0.1, 0.05) == 1218);
        CHECK(guaranteed_sample_count(2, 5, 0.1, 0.05) == BigInt(static_cast<long long>(std::ceil(std::log(40.0) / (2 * 0.01 / 100)))));
        auto m = guaranteed_sample_count(4, 30, 0.1, 0.05);
        CHECK(m > pow2(33) * 16 * 900);
        CHECK(minimum_density(3, 64) == BigRational(1, pow2(19) * 9 * 64 * 64));
        CHECK_THROWS_AS(guaranteed_sample_count(3, 10, 0.0, 0.05), std::invalid_argument);
        CHECK_THROWS_AS(guaranteed_sample_count(3, 10, 0.1, 1.0), std::invalid_argument);
    }

    TEST_CASE("decided zero short-circuits")
    {
        auto k10 = generate(generators::Clique{ 10 });
        for (auto mode : { EstimateMode::Adaptive, EstimateMode::Guaranteed }) {
            EstimateOptions o;
            o.mode = mode;
            auto e = estimate_parity_count(k10, 3, even, o);
            CHECK(e.decided_zero);
            CHECK(e.value == 0);
            CHECK(e.samples_used == 0);
        }
        auto e = estimate_parity_count(generate(generators::CompleteBipartite{ 20, 20 }), 5, odd);
        CHECK(e.decided_zero);
        CHECK(e.value == 0);
    }

    TEST_CASE("guaranteed mode refuses above its cap")
    {
        auto g = generate(generators::Gnp{ 30, 0.5, 1 });
        EstimateOptions o;
        o.mode = EstimateMode::Guaranteed;
        try {
            estimate_parity_count(g, 4, even, o);
            FAIL("expected a refusal");
        }
        catch (const GuaranteedModeRefused & e) {
            CHECK(e.required_samples() == guaranteed_sample_count(4, 30, 0.1, 0.05));
            CHECK(e.limit() == o.sample_cap);
        }
    }

    TEST_CASE("guaranteed mode runs when affordable")
    {
        auto g = generate(generators::Gnp{ 6, 0.5, 3 });
        auto exact = count_parity_subsets(g, 2, odd);
        EstimateOptions o;
        o.mode = EstimateMode::Guaranteed;
        o.seed = 4;
        auto e = estimate_parity_count(g, 2, odd, o);
        CHECK(BigInt(e.samples_used) == e.planned);
        CHECK(e.value == BigRational(binomial(6, 2) * e.successes, e.samples_used));
        CHECK(std::abs(to_double(e.value) / exact.convert_to<double>() - 1) < 0.1);
    }

    TEST_CASE("adaptive mode")
    {
        auto g = generate(generators::Gnp{ 20, 0.5, 8 });
        auto exact = count_parity_subsets(g, 3, even).convert_to<double>();
        unsigned within = 0;
        for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
            EstimateOptions o;
            o.seed = seed;
            auto e = estimate_parity_count(g, 3, even, o);
            CHECK(e.successes == 1218);
            CHECK(e.samples_used >= e.successes);
            CHECK(e.value == BigRational(binomial(20, 3) * 1218, e.samples_used));
            if (std::abs(to_double(e.value) / exact - 1) <= 0.1)
                ++within;
        }
        CHECK(within >= 17);
    }

    TEST_CASE("results do not depend on the worker count")
    {
        auto g = generate(generators::Gnp{ 25, 0.3, 2 });
        EstimateOptions o;
        o.seed = 11;
        auto one = estimate_parity_count(g, 4, odd, o);
        for (unsigned w : { 2u, 4u }) {
            o.workers = w;
            auto many = estimate_parity_count(g, 4, odd, o);
            CHECK(many.value == one.value);
            CHECK(many.samples_used == one.samples_used);
        }
    }

    TEST_CASE("adaptive cap is reported")
    {
        // 38 odd triples among C(40,3) = 9880
        Graph g(40);
        g.add_edge(0, 1);
        EstimateOptions o;
        o.sample_cap = 5000;
        CHECK_THROWS_AS(estimate_parity_count(g, 3, odd, o), SampleCapExceeded);
    }

    TEST_CASE("mode names")
    {
        CHECK(parse_estimate_mode("guaranteed") == EstimateMode::Guaranteed);
        CHECK(to_string(EstimateMode::Adaptive) == "adaptive");
        CHECK_THROWS(parse_estimate_mode("fast"));
    }
}
