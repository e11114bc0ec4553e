#include <doctest.h>

#include "oracles.hh"

#include <parsub/errors.hh>
#include <parsub/lattice.hh>

using namespace parsub;

namespace
{
    auto constant_fn(unsigned width, BigInt c) -> LatticeFn
    {
        return LatticeFn(width, std::vector<BigInt>(std::size_t(1) << width, c));
    }

    auto indicator(unsigned width, std::uint64_t at) -> LatticeFn
    {
        std::vector<BigInt> v(std::size_t(1) << width, 0);
        v[at] = 1;
        return LatticeFn(width, v);
    }

    /// Mostly zero, so that upward closures of the support vary.
    auto random_fn(unsigned width, std::mt19937_64 & rng) -> LatticeFn
    {
        std::vector<BigInt> v(std::size_t(1) << width);
        std::uniform_int_distribution<int> value(-9, 9);
        unsigned sparsity = 1 + rng() % 4;
        for (auto & x : v)
            x = (rng() % sparsity == 0) ? value(rng) : 0;
        return LatticeFn(width, v);
    }

    auto rows(const BigMatrix & m) -> std::vector<std::vector<int> >
    {
        std::vector<std::vector<int> > r(m.rows(), std::vector<int>(m.cols()));
        for (std::size_t i = 0 ; i < m.rows() ; ++i)
            for (std::size_t j = 0 ; j < m.cols() ; ++j)
                r[i][j] = m(i, j).convert_to<int>();
        return r;
    }
}

TEST_SUITE("lattice")
{
    TEST_CASE("mobius")
    {
        // pairs {1,2} and {1,3} are bits 0 and 1
        EdgePattern none{ 0, 3 }, ab{ 1, 3 }, ac{ 2, 3 }, both{ 3, 3 };
        CHECK(mobius(none, both) == 1);
        CHECK(mobius(ab, ab) == 1);
        CHECK(mobius(ab, ac) == 0);
        CHECK(mobius(none, ab) == -1);
        CHECK_THROWS_AS(mobius(EdgePattern{ 0, 1 }, EdgePattern{ 0, 3 }), std::invalid_argument);
    }

    TEST_CASE("mobius closed form equals the recursion")
    {
        for (unsigned width = 0 ; width <= 6 ; ++width) {
            auto all = all_patterns(width);
            for (auto & x : all)
                for (auto & y : all)
                    REQUIRE(mobius(x, y) == mobius_by_recursion(x, y));
        }
    }

    TEST_CASE("totient examples")
    {
        const unsigned w = 3;
        auto ones = constant_fn(w, 1);
        for (auto & x : all_patterns(w))
            CHECK(totient(ones, x) == (x.bits == 0 ? 1 : 0));

        auto top = indicator(w, 7);
        for (auto & x : all_patterns(w))
            CHECK(totient(top, x) == (x.bits == 7 ? 1 : 0));

        std::vector<BigInt> powers;
        for (std::uint64_t x = 0 ; x < 8 ; ++x)
            powers.push_back(BigInt(1) << std::popcount(x));
        LatticeFn pow2(w, powers);
        for (auto & x : all_patterns(w))
            CHECK(totient(pow2, x) == 1);
    }

    TEST_CASE("totient needs f on the down-set")
    {
        LatticeFn partial(2);
        partial.set({ 3, 2 }, 5);
        partial.set({ 1, 2 }, 1);
        partial.set({ 0, 2 }, 1);
        CHECK_THROWS_AS(totient(partial, { 3, 2 }), std::invalid_argument);
        CHECK(totient(partial, { 1, 2 }) == 0);
        CHECK(! partial.is_total());
    }

    TEST_CASE("totient routes agree")
    {
        std::mt19937_64 rng(79);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            unsigned w = 1 + rng() % 4;
            auto f = random_fn(w, rng);
            for (auto & x : all_patterns(w))
                REQUIRE(totient_inductive(f, x) == totient_mobius(f, x));
        }
    }

    TEST_CASE("meet matrices")
    {
        auto f = constant_fn(2, 7);
        auto one = meet_matrix({ EdgePattern{ 0, 2 } }, f);
        CHECK(one.rows() == 1);
        CHECK(one(0, 0) == 7);

        auto s = all_patterns(2);
        auto a = meet_matrix(s, indicator(2, 0));
        CHECK(rows(a) == std::vector<std::vector<int> >{ { 1, 1, 1, 1 }, { 1, 0, 1, 0 }, { 1, 1, 0, 0 }, { 1, 0, 0, 0 } });
        CHECK(a.is_symmetric());
        CHECK(det_exact(a) == 1);
        CHECK(oracle::cofactor_det(a) == 1);

        auto c = meet_matrix(s, f);
        for (std::size_t i = 0 ; i < 4 ; ++i)
            for (std::size_t j = 0 ; j < 4 ; ++j)
                CHECK(c(i, j) == 7);

        CHECK_THROWS_AS(meet_matrix({ EdgePattern{ 1, 2 }, EdgePattern{ 1, 2 } }, f), std::invalid_argument);
    }

    TEST_CASE("upward closure of the support")
    {
        CHECK(upward_closure_of_support(indicator(3, 0)) == all_patterns(3));
        CHECK(upward_closure_of_support(indicator(3, 7)) == std::vector<EdgePattern>{ { 7, 3 } });
        CHECK(upward_closure_of_support(constant_fn(3, 0)).empty());
        auto up = upward_closure_of_support(indicator(3, 1));
        CHECK(up == std::vector<EdgePattern>{ { 1, 3 }, { 3, 3 }, { 5, 3 }, { 7, 3 } });
    }

    TEST_CASE("determinant formula")
    {
        CHECK(det_via_formula({ EdgePattern{ 7, 3 } }, indicator(3, 7)) == 1);
        CHECK(det_via_formula(all_patterns(2), indicator(2, 0)) == 1);

        for (unsigned w = 1 ; w <= 3 ; ++w) {
            auto ones = constant_fn(w, 1);
            auto s = all_patterns(w);
            CHECK(det_via_formula(s, ones) == 0);
            CHECK(det_exact(meet_matrix(s, ones)) == 0);
        }

        // preconditions
        auto s = all_patterns(2);
        std::swap(s[0], s[3]);
        CHECK_THROWS_AS(det_via_formula(s, indicator(2, 0)), std::invalid_argument);
        CHECK_THROWS_AS(det_via_formula({ EdgePattern{ 3, 2 } }, indicator(2, 0)), std::invalid_argument);
        CHECK_THROWS_AS(check_linear_extension({ EdgePattern{ 3, 2 }, EdgePattern{ 1, 2 } }), std::invalid_argument);
        CHECK_NOTHROW(check_linear_extension({ EdgePattern{ 2, 2 }, EdgePattern{ 1, 2 } }));
    }

    TEST_CASE("determinant formula equals exact determinant")
    {
        std::mt19937_64 rng(83);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            unsigned w = 1 + rng() % 4;
            auto f = random_fn(w, rng);
            auto s = upward_closure_of_support(f);
            auto a = meet_matrix(s, f);
            auto det = det_exact(a);
            REQUIRE(det_via_formula(s, f) == det);
            if (s.size() <= 7)
                CHECK(oracle::cofactor_det(a) == det);
        }
    }

    TEST_CASE("Bhat decomposition")
    {
        std::mt19937_64 rng(89);
        for (int trial = 0 ; trial < 100 ; ++trial) {
            unsigned w = rng() % 4;
            auto f = random_fn(w, rng);
            auto p = all_patterns(w);
            std::vector<EdgePattern> s;
            for (auto & x : p)
                if (rng() % 2)
                    s.push_back(x);
            CHECK(decomposition_check(s, f, p).holds);
            CHECK(decomposition_check(p, f, p).holds);
        }
        auto p = all_patterns(3);
        CHECK(decomposition_check(p, constant_fn(3, 0), p).holds);

        auto f = constant_fn(3, 2);
        auto factors = bhat_factors(p, f, p);
        factors.lambda(5, 5) += 1;
        auto broken = verify_decomposition(p, f, factors);
        CHECK(! broken.holds);
        REQUIRE(broken.mismatch);
        // row 5 is the first whose pattern contains p[5]
        CHECK(broken.mismatch->first == 5);
        CHECK(broken.mismatch->second == 5);
    }

    TEST_CASE("exact determinant and solve")
    {
        CHECK(det_exact(BigMatrix::identity(3)) == 1);
        BigMatrix ones(2, 2);
        for (auto [i, j] : { std::pair{ 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } })
            ones(i, j) = 1;
        CHECK(det_exact(ones) == 0);
        CHECK(! solve_exact(ones, { 1, 2 }));

        std::mt19937_64 rng(97);
        std::uniform_int_distribution<int> v(-20, 20);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            std::size_t n = 1 + rng() % 5;
            BigMatrix a(n, n);
            std::vector<BigInt> x(n);
            for (std::size_t i = 0 ; i < n ; ++i) {
                x[i] = v(rng);
                for (std::size_t j = 0 ; j < n ; ++j)
                    a(i, j) = (trial % 3 == 0 && j == 0) ? 0 : v(rng);
            }
            auto det = det_exact(a);
            REQUIRE(det == oracle::cofactor_det(a));
            auto b = a * x;
            auto solved = solve_exact(a, b);
            CHECK(solved.has_value() == (det != 0));
            if (solved)
                for (std::size_t i = 0 ; i < n ; ++i)
                    CHECK((*solved)[i] == BigRational(x[i]));
        }
    }
}
