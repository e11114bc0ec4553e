#include <parsub/reduction.hh>
#include <parsub/errors.hh>

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <stdexcept>

using namespace parsub;

using std::size_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto check_k(unsigned k, bool allow_large) -> void
    {
        if (k < 2)
            throw std::invalid_argument("the reduction needs k >= 2");
        if (k > reduction_k_limit && ! allow_large)
            throw std::invalid_argument("k = " + std::to_string(k) + " is above the reduction limit of "
                    + std::to_string(reduction_k_limit));
        if (colour_pair_width(k) > 20)
            throw std::invalid_argument("k = " + std::to_string(k) + " is too large for the reduction");
    }

    auto solve_by_elimination(const BigMatrix & a, const vector<BigInt> & z) -> vector<BigRational>
    {
        auto x = solve_exact(a, z);
        if (! x)
            throw ConsistencyError("reduction matrix is singular");
        return *x;
    }

    /**
     * With s upward closed over the support of g and ordered by inclusion,
     * the normalised matrix is E Lambda E^T where E (restricted to s) is
     * unitriangular, so A N = z is two triangular solves and a diagonal one.
     */
    auto solve_factorised(const vector<EdgePattern> & s, const LatticeFn & g, const vector<BigInt> & z) -> vector<BigRational>
    {
        std::unordered_map<uint64_t, size_t> index;
        for (size_t i = 0 ; i < s.size() ; ++i)
            index.emplace(s[i].bits, i);

        // E u = z: u_i = z_i - sum of u_j over x_j strictly below x_i.
        vector<BigRational> u(s.size());
        for (size_t i = 0 ; i < s.size() ; ++i) {
            BigRational acc = z[i];
            uint64_t x = s[i].bits;
            for (uint64_t w = (x - 1) & x ; ; w = (w - 1) & x) {
                if (w != x)
                    if (auto j = index.find(w) ; j != index.end())
                        acc -= u[j->second];
                if (w == 0)
                    break;
            }
            u[i] = acc;
        }

        for (size_t i = 0 ; i < s.size() ; ++i) {
            auto psi = totient(g, s[i]);
            if (psi == 0)
                throw ConsistencyError("zero totient on the index family");
            u[i] /= BigRational(psi);
        }

        // E^T n = u: n_j = u_j - sum of n_i over x_i strictly above x_j.
        unsigned width = s.empty() ? 0 : s.front().width;
        uint64_t full = full_pattern(width).bits;
        vector<BigRational> n(s.size());
        for (size_t j = s.size() ; j-- > 0 ; ) {
            BigRational acc = u[j];
            uint64_t x = s[j].bits, free = full & ~x;
            for (uint64_t extra = free ; extra != 0 ; extra = (extra - 1) & free)
                if (auto i = index.find(x | extra) ; i != index.end())
                    acc -= n[i->second];
            n[j] = acc;
        }
        return n;
    }
}

auto parsub::to_string(ReductionSolver s) -> std::string
{
    switch (s) {
        case ReductionSolver::Automatic:   return "automatic";
        case ReductionSolver::Elimination: return "elimination";
        case ReductionSolver::Factorised:  return "factorised";
    }
    throw std::logic_error("bad ReductionSolver");
}

auto parsub::enumerate_index_family(unsigned k, ParityTarget t, bool allow_large) -> vector<EdgePattern>
{
    check_k(k, allow_large);
    auto family = all_patterns(colour_pair_width(k));
    if (t == ParityTarget::Odd)
        std::erase_if(family, [] (const EdgePattern & p) { return p.bits == 0; });
    return family;
}

auto parsub::filter_graph(const Graph & g, const Colouring & f, const EdgePattern & i) -> Graph
{
    if (f.size() != g.size())
        throw std::invalid_argument("colouring does not cover the graph");
    if (colour_pair_width(f.colour_count()) != i.width)
        throw std::invalid_argument("pattern width does not match the number of colours");

    Graph result(g.size());
    for (auto [u, v] : g.edges()) {
        auto a = f[u], b = f[v];
        if (a != b && (i.bits >> colour_pair_index(a, b)) & 1)
            result.add_edge(u, v);
    }
    return result;
}

auto parsub::parity_indicator(unsigned k, ParityTarget t) -> LatticeFn
{
    auto width = colour_pair_width(k);
    vector<BigInt> values(size_t(1) << width);
    for (uint64_t x = 0 ; x < values.size() ; ++x)
        values[x] = matches(t, std::popcount(x)) ? 1 : 0;
    return LatticeFn(width, std::move(values));
}

auto parsub::build_reduction_matrix(unsigned k, ParityTarget t, const vector<EdgePattern> & family) -> BigMatrix
{
    auto g = parity_indicator(k, t);
    if (det_via_formula(family, g) == 0)
        throw ConsistencyError("reduction matrix is singular");

    auto a = meet_matrix(family, g);
    auto scale = factorial(k);
    for (size_t i = 0 ; i < a.rows() ; ++i)
        for (size_t j = 0 ; j < a.cols() ; ++j)
            a(i, j) *= scale;
    return a;
}

auto parsub::exact_oracle(unsigned k, ParityTarget t, const EnumerationOptions & options) -> ColourfulOracle
{
    return [k, t, options] (const Graph & g, const Colouring & f) {
        return count_colourful_parity_embeddings(g, f, k, t, options);
    };
}

auto parsub::run_reduction(const Graph & g, const Colouring & f, unsigned k, ParityTarget t,
        const ColourfulOracle & oracle, const ReductionOptions & options) -> ReductionResult
{
    if (f.colour_count() != k)
        throw std::invalid_argument("colouring must use exactly k colours");
    if (f.size() != g.size())
        throw std::invalid_argument("colouring does not cover the graph");

    ReductionResult result;
    result.k = k;
    result.target = t;
    result.family = enumerate_index_family(k, t, options.allow_large);
    result.matrix = build_reduction_matrix(k, t, result.family);

    auto scale = factorial(k);
    vector<BigInt> normalised;
    for (auto & pattern : result.family) {
        auto answer = oracle(filter_graph(g, f, pattern), f);
        ++result.oracle_calls;
        if (answer % scale != 0)
            throw ConsistencyError("oracle answer " + to_string(answer) + " for pattern " + to_colour_pair_string(pattern)
                    + " is not a multiple of " + to_string(scale));
        normalised.push_back(answer / scale);
        result.z.push_back(std::move(answer));
    }

    auto solver = options.solver;
    if (solver == ReductionSolver::Automatic)
        solver = result.family.size() <= 128 ? ReductionSolver::Elimination : ReductionSolver::Factorised;
    result.solver_used = solver;

    BigMatrix a01(result.matrix.rows(), result.matrix.cols());
    for (size_t i = 0 ; i < a01.rows() ; ++i)
        for (size_t j = 0 ; j < a01.cols() ; ++j)
            a01(i, j) = result.matrix(i, j) / scale;

    auto solution = solver == ReductionSolver::Elimination
        ? solve_by_elimination(a01, normalised)
        : solve_factorised(result.family, parity_indicator(k, t), normalised);

    for (size_t i = 0 ; i < solution.size() ; ++i) {
        auto & x = solution[i];
        if (denominator(x) != 1)
            throw ConsistencyError("non-integral solution " + to_string(x) + " at pattern " + to_colour_pair_string(result.family[i]));
        if (x < 0)
            throw ConsistencyError("negative solution " + to_string(x) + " at pattern " + to_colour_pair_string(result.family[i]));
        result.solution.push_back(numerator(x));
    }

    if (a01 * result.solution != normalised)
        throw ConsistencyError("solution does not satisfy A N = z");

    result.cliques = result.solution.back();
    return result;
}

auto parsub::pad_instance(const Graph & g, const Colouring & f, unsigned k, unsigned k_prime) -> std::pair<Graph, Colouring>
{
    if (k_prime <= k)
        throw std::invalid_argument("padding needs k' > k");
    if (f.colour_count() != k)
        throw std::invalid_argument("colouring must use exactly k colours");
    if (f.size() != g.size())
        throw std::invalid_argument("colouring does not cover the graph");

    unsigned n = g.size(), extra = k_prime - k;
    Graph padded(n + extra);
    for (auto [u, v] : g.edges())
        padded.add_edge(u, v);
    for (unsigned w = n ; w < n + extra ; ++w)
        for (unsigned v = 0 ; v < w ; ++v)
            padded.add_edge(v, w);

    auto colours = f.colours();
    for (unsigned i = 0 ; i < extra ; ++i)
        colours.push_back(k + 1 + i);
    return { std::move(padded), Colouring(k_prime, std::move(colours)) };
}
