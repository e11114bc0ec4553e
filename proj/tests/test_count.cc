#include <doctest.h>

#include "oracles.hh"

#include <parsub/count.hh>
#include <parsub/errors.hh>

using namespace parsub;

namespace
{
    const auto even = ParityTarget::Even;
    const auto odd = ParityTarget::Odd;

    auto mod3_colouring(unsigned n) -> Colouring
    {
        std::vector<unsigned> c(n);
        for (unsigned v = 0 ; v < n ; ++v)
            c[v] = v % 3 + 1;
        return Colouring(3, c);
    }
}

TEST_SUITE("count")
{
    TEST_CASE("parity subsets on small graphs")
    {
        auto k3 = generate(generators::Clique{ 3 });
        CHECK(count_parity_subsets(k3, 3, even) == 0);
        CHECK(count_parity_subsets(k3, 3, odd) == 1);
        CHECK(count_parity_subsets(generate(generators::Independent{ 5 }), 3, even) == 10);
        auto c5 = generate(generators::Cycle{ 5 });
        CHECK(count_parity_subsets(c5, 3, even) == 5);
        CHECK(count_parity_subsets(c5, 3, odd) == 5);
        CHECK(count_parity_subsets(c5, 6, odd) == 0);
        CHECK_THROWS_AS(count_parity_subsets(c5, 0, odd), std::invalid_argument);
    }

    TEST_CASE("tuples")
    {
        CHECK(count_parity_tuples(generate(generators::Clique{ 3 }), 3, odd) == 6);
        CHECK(count_parity_tuples(generate(generators::Independent{ 5 }), 3, even) == 60);
        CHECK(count_parity_tuples(generate(generators::Cycle{ 5 }), 3, even) == 30);
    }

    TEST_CASE("budget is enforced rather than truncating")
    {
        auto g = generate(generators::Gnp{ 30, 0.5, 1 });
        CHECK_THROWS_AS(count_parity_subsets(g, 4, even, { .budget = 1000 }), BudgetExceeded);
        CHECK_NOTHROW(count_parity_subsets(g, 4, even, { .budget = 27405 }));
    }

    TEST_CASE("agrees with the naive counter, sums to C(n,k), tuple identity")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0 ; trial < 120 ; ++trial) {
            unsigned n = 1 + rng() % 16;
            auto g = oracle::random_graph(n, (rng() % 10) / 9.0, rng);
            for (unsigned k = 1 ; k <= std::min(n, 7u) ; ++k) {
                auto e = count_parity_subsets(g, k, even);
                auto o = count_parity_subsets(g, k, odd);
                REQUIRE(e == oracle::parity_count(g, k, true));
                REQUIRE(o == oracle::parity_count(g, k, false));
                CHECK(e + o == binomial(n, k));
                CHECK(count_parity_tuples(g, k, even) == factorial(k) * e);
            }
        }
    }

    TEST_CASE("large n takes the multi-word path")
    {
        std::mt19937_64 rng(23);
        for (unsigned n : { 65u, 70u, 90u }) {
            auto g = oracle::random_graph(n, 0.5, rng);
            CHECK(count_parity_subsets(g, 2, even) == oracle::parity_count(g, 2, true));
            CHECK(count_parity_subsets(g, 3, odd) == oracle::parity_count(g, 3, false));
        }
    }

    TEST_CASE("worker count does not change results")
    {
        auto g = generate(generators::Gnp{ 26, 0.4, 9 });
        auto one = count_parity_subsets(g, 5, odd, { .workers = 1 });
        for (unsigned w : { 2u, 3u, 7u })
            CHECK(count_parity_subsets(g, 5, odd, { .workers = w }) == one);
        CHECK(edge_count_histogram(g, 4, { .workers = 3 }) == edge_count_histogram(g, 4));
    }

    TEST_CASE("complement duality")
    {
        std::mt19937_64 rng(29);
        for (int trial = 0 ; trial < 30 ; ++trial) {
            unsigned n = 4 + rng() % 12;
            auto g = oracle::random_graph(n, 0.5, rng);
            auto h = complement(g);
            for (unsigned k = 2 ; k <= std::min(n, 6u) ; ++k) {
                if ((k * (k - 1) / 2) % 2 == 1)
                    CHECK(count_parity_subsets(g, k, even) == count_parity_subsets(h, k, odd));
                else
                    CHECK(count_parity_subsets(g, k, even) == count_parity_subsets(h, k, even));
            }
        }
    }

    TEST_CASE("histogram")
    {
        auto h = edge_count_histogram(generate(generators::Cycle{ 5 }), 3);
        CHECK(h == std::vector<BigCount>{ 0, 5, 5, 0 });
        auto k4 = edge_count_histogram(generate(generators::Clique{ 4 }), 3);
        CHECK(k4 == std::vector<BigCount>{ 0, 0, 0, 4 });
    }

    TEST_CASE("first witness agrees with counting on existence")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0 ; trial < 100 ; ++trial) {
            unsigned n = 1 + rng() % 12;
            auto g = oracle::random_graph(n, (rng() % 5) / 4.0, rng);
            unsigned k = 1 + rng() % n;
            for (auto t : { even, odd }) {
                auto w = find_parity_subset(g, k, t);
                CHECK(w.has_value() == (count_parity_subsets(g, k, t) > 0));
                if (w) {
                    CHECK(w->size() == k);
                    CHECK(matches(t, induced_edge_count(g, *w)));
                }
            }
        }
    }

    TEST_CASE("colourful counts")
    {
        Colouring rainbow(3, { 1, 2, 3 });
        auto k3 = generate(generators::Clique{ 3 });
        CHECK(count_colourful_parity_subsets(k3, rainbow, 3, even) == 0);
        CHECK(count_colourful_parity_subsets(k3, rainbow, 3, odd) == 1);
        CHECK(count_colourful_parity_embeddings(k3, rainbow, 3, odd) == 6);

        // each side coloured 1,2,3: the 8 colourful sets are the two
        // triangles (3 edges) and six sets with exactly one edge
        auto tc = generate(generators::TwoCliques{ 3, 3 });
        Colouring sides(3, { 1, 2, 3, 1, 2, 3 });
        CHECK(count_colourful_parity_subsets(tc, sides, 3, even) == 0);
        CHECK(count_colourful_parity_subsets(tc, sides, 3, odd) == 8);
        CHECK(count_multicolour_cliques(tc, sides, 3) == 2);

        CHECK_THROWS_AS(count_colourful_parity_subsets(k3, rainbow, 0, odd), std::invalid_argument);
        CHECK_THROWS_AS(count_colourful_parity_subsets(k3, rainbow, 2, odd), std::invalid_argument);
    }

    TEST_CASE("multicolour cliques")
    {
        CHECK(count_multicolour_cliques(generate(generators::Clique{ 4 }), Colouring(4, { 1, 2, 3, 4 }), 4) == 1);
        CHECK(count_multicolour_cliques(generate(generators::Independent{ 6 }), Colouring(2, { 1, 2, 1, 2, 1, 2 }), 2) == 0);
        CHECK(count_multicolour_cliques(generate(generators::Clique{ 4 }), Colouring(3, { 1, 1, 2, 2 }), 3) == 0);

        auto g = generate(generators::Gnp{ 12, 0.5, 7 });
        auto f = mod3_colouring(12);
        auto value = count_multicolour_cliques(g, f, 3);
        CHECK(value == oracle::multicolour_cliques(g, f.colours(), 3));
        CHECK(value == 4);
    }

    TEST_CASE("colourful counts agree with the naive counter")
    {
        std::mt19937_64 rng(37);
        for (int trial = 0 ; trial < 80 ; ++trial) {
            unsigned n = 2 + rng() % 12, k = 2 + rng() % 3;
            auto g = oracle::random_graph(n, 0.5, rng);
            auto c = oracle::random_colouring(n, k, rng);
            Colouring f(k, c);
            CHECK(count_colourful_parity_subsets(g, f, k, even) == oracle::colourful_parity(g, c, k, true));
            CHECK(count_colourful_parity_subsets(g, f, k, odd) == oracle::colourful_parity(g, c, k, false));
            CHECK(count_multicolour_cliques(g, f, k) == oracle::multicolour_cliques(g, c, k));
        }
    }

    TEST_CASE("pattern census")
    {
        Colouring rainbow(3, { 1, 2, 3 });
        auto full = full_pattern(3);
        auto c = colour_pattern_census(generate(generators::Clique{ 3 }), rainbow, 3);
        CHECK(c[full] == 1);
        CHECK(c.total() == 1);
        auto e = colour_pattern_census(generate(generators::Independent{ 3 }), rainbow, 3);
        CHECK(e[EdgePattern{ 0, 3 }] == 1);
        CHECK(e.total() == 1);

        auto tc = colour_pattern_census(generate(generators::TwoCliques{ 3, 3 }), Colouring(3, { 1, 2, 3, 1, 2, 3 }), 3);
        CHECK(tc[full] == 2);
        for (unsigned b = 0 ; b < 3 ; ++b)
            CHECK(tc[EdgePattern{ 1u << b, 3 }] == 2);
        CHECK(tc.total() == 8);
    }

    TEST_CASE("census consistency")
    {
        std::mt19937_64 rng(41);
        for (int trial = 0 ; trial < 60 ; ++trial) {
            unsigned n = 2 + rng() % 12, k = 2 + rng() % 3;
            auto g = oracle::random_graph(n, 0.5, rng);
            auto colours = oracle::random_colouring(n, k, rng);
            Colouring f(k, colours);
            auto census = colour_pattern_census(g, f, k);
            auto expected = oracle::pattern_census(g, colours, k);
            for (std::uint64_t bits = 0 ; bits < census.counts.size() ; ++bits)
                CHECK(census.counts[bits] == (expected.contains(bits) ? expected[bits] : 0));
            CHECK(census.total() == colourful_subset_count(f));
            BigCount even_mass = 0;
            for (std::uint64_t bits = 0 ; bits < census.counts.size() ; ++bits)
                if (std::popcount(bits) % 2 == 0)
                    even_mass += census.counts[bits];
            CHECK(even_mass == count_colourful_parity_subsets(g, f, k, even));
        }
    }
}
