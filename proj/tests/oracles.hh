#ifndef PARSUB_TESTS_ORACLES_HH
#define PARSUB_TESTS_ORACLES_HH 1

// Slow, obviously-correct reference implementations. None of these use the
// library's enumeration, elimination or sampling code.

#include <parsub/big.hh>
#include <parsub/graph.hh>
#include <parsub/matrix.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle
{
    using parsub::BigInt;
    using parsub::Graph;
    using parsub::Vertex;

    /// Calls fn on every k-subset of {0..n-1}, by plain recursion.
    inline auto for_each_combination(unsigned n, unsigned k, const std::function<void (const std::vector<Vertex> &)> & fn) -> void
    {
        std::vector<Vertex> current;
        std::function<void (unsigned)> go = [&] (unsigned next) {
            if (current.size() == k) {
                fn(current);
                return;
            }
            for (unsigned v = next ; v + (k - current.size()) <= n ; ++v) {
                current.push_back(v);
                go(v + 1);
                current.pop_back();
            }
        };
        if (k <= n)
            go(0);
    }

    inline auto edges_within(const Graph & g, const std::vector<Vertex> & u) -> unsigned
    {
        unsigned e = 0;
        for (unsigned i = 0 ; i < u.size() ; ++i)
            for (unsigned j = i + 1 ; j < u.size() ; ++j)
                if (g.adjacent(u[i], u[j]))
                    ++e;
        return e;
    }

    inline auto parity_count(const Graph & g, unsigned k, bool even) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_combination(g.size(), k, [&] (const std::vector<Vertex> & u) {
            if ((edges_within(g, u) % 2 == 0) == even)
                ++count;
        });
        return count;
    }

    /// Even-edge subsets of every size, the empty set included, by 2^n sweep.
    inline auto total_even(const Graph & g) -> std::uint64_t
    {
        std::uint64_t count = 0;
        unsigned n = g.size();
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t(1) << n) ; ++mask) {
            unsigned e = 0;
            for (unsigned i = 0 ; i < n ; ++i)
                for (unsigned j = i + 1 ; j < n ; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j))
                        ++e;
            if (e % 2 == 0)
                ++count;
        }
        return count;
    }

    /// Zeros of const + sum lin_i x_i + sum_{(i,j)} x_i x_j by 2^n sweep.
    inline auto quadratic_zeros(unsigned n, const std::vector<std::pair<unsigned, unsigned> > & quad,
            const std::vector<bool> & lin, bool constant) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (std::uint64_t x = 0 ; x < (std::uint64_t(1) << n) ; ++x) {
            bool v = constant;
            for (unsigned i = 0 ; i < lin.size() ; ++i)
                if (lin[i] && (x >> i & 1))
                    v = ! v;
            for (auto [i, j] : quad)
                if ((x >> i & 1) && (x >> j & 1))
                    v = ! v;
            if (! v)
                ++count;
        }
        return count;
    }

    inline auto is_colourful(const std::vector<Vertex> & u, const std::vector<unsigned> & colour, unsigned k) -> bool
    {
        std::vector<bool> seen(k + 1, false);
        for (auto v : u) {
            if (seen[colour[v]])
                return false;
            seen[colour[v]] = true;
        }
        return u.size() == k;
    }

    inline auto multicolour_cliques(const Graph & g, const std::vector<unsigned> & colour, unsigned k) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_combination(g.size(), k, [&] (const std::vector<Vertex> & u) {
            if (is_colourful(u, colour, k) && edges_within(g, u) == k * (k - 1) / 2)
                ++count;
        });
        return count;
    }

    inline auto colourful_parity(const Graph & g, const std::vector<unsigned> & colour, unsigned k, bool even) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_combination(g.size(), k, [&] (const std::vector<Vertex> & u) {
            if (is_colourful(u, colour, k) && (edges_within(g, u) % 2 == 0) == even)
                ++count;
        });
        return count;
    }

    /// Colour-pair pattern of each colourful k-set, keyed by a bitmask where
    /// pair {a, b} (1-based, a < b) has index (b-1)(b-2)/2 + a-1.
    inline auto pattern_census(const Graph & g, const std::vector<unsigned> & colour, unsigned k) -> std::map<std::uint64_t, std::uint64_t>
    {
        std::map<std::uint64_t, std::uint64_t> census;
        for_each_combination(g.size(), k, [&] (const std::vector<Vertex> & u) {
            if (! is_colourful(u, colour, k))
                return;
            std::uint64_t bits = 0;
            for (unsigned i = 0 ; i < u.size() ; ++i)
                for (unsigned j = i + 1 ; j < u.size() ; ++j)
                    if (g.adjacent(u[i], u[j])) {
                        unsigned a = std::min(colour[u[i]], colour[u[j]]), b = std::max(colour[u[i]], colour[u[j]]);
                        bits |= std::uint64_t(1) << ((b - 1) * (b - 2) / 2 + a - 1);
                    }
            ++census[bits];
        });
        return census;
    }

    /// Laplace expansion along the first row.
    inline auto cofactor_det(const std::vector<std::vector<BigInt> > & m) -> BigInt
    {
        auto n = m.size();
        if (n == 0)
            return 1;
        if (n == 1)
            return m[0][0];
        BigInt det = 0;
        for (std::size_t c = 0 ; c < n ; ++c) {
            if (m[0][c] == 0)
                continue;
            std::vector<std::vector<BigInt> > minor;
            for (std::size_t r = 1 ; r < n ; ++r) {
                std::vector<BigInt> row;
                for (std::size_t cc = 0 ; cc < n ; ++cc)
                    if (cc != c)
                        row.push_back(m[r][cc]);
                minor.push_back(row);
            }
            BigInt term = m[0][c] * cofactor_det(minor);
            det += (c % 2 == 0) ? term : BigInt(-term);
        }
        return det;
    }

    inline auto cofactor_det(const parsub::BigMatrix & a) -> BigInt
    {
        std::vector<std::vector<BigInt> > m(a.rows(), std::vector<BigInt>(a.cols()));
        for (std::size_t r = 0 ; r < a.rows() ; ++r)
            for (std::size_t c = 0 ; c < a.cols() ; ++c)
                m[r][c] = a(r, c);
        return cofactor_det(m);
    }

    /// Independent random graph: each pair kept with probability p.
    inline auto random_graph(unsigned n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (unsigned u = 0 ; u < n ; ++u)
            for (unsigned v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    inline auto random_colouring(unsigned n, unsigned k, std::mt19937_64 & rng) -> std::vector<unsigned>
    {
        std::uniform_int_distribution<unsigned> pick(1, k);
        std::vector<unsigned> colour(n);
        for (auto & c : colour)
            c = pick(rng);
        return colour;
    }
}

#endif
