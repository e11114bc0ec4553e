#include <parsub/gf2.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace parsub;

using std::pair;
using std::uint64_t;
using std::vector;

QuadraticFormF2::QuadraticFormF2(unsigned variables) :
    _variables(variables),
    _linear(variables, false)
{
}

QuadraticFormF2::QuadraticFormF2(unsigned variables, vector<pair<unsigned, unsigned> > quadratic,
        vector<bool> linear, bool constant) :
    _variables(variables),
    _linear(std::move(linear)),
    _constant(constant)
{
    if (_linear.empty())
        _linear.assign(variables, false);
    if (_linear.size() != variables)
        throw std::invalid_argument("linear part has the wrong length");

    for (auto & [i, j] : quadratic) {
        if (i >= variables || j >= variables)
            throw std::invalid_argument("monomial variable out of range");
        if (i == j)
            _linear[i] = ! _linear[i];
        else
            _quadratic.emplace_back(std::min(i, j), std::max(i, j));
    }

    std::sort(_quadratic.begin(), _quadratic.end());
    // x_i x_j + x_i x_j = 0
    vector<pair<unsigned, unsigned> > reduced;
    for (std::size_t p = 0 ; p < _quadratic.size() ; ) {
        std::size_t q = p;
        while (q < _quadratic.size() && _quadratic[q] == _quadratic[p])
            ++q;
        if ((q - p) % 2 == 1)
            reduced.push_back(_quadratic[p]);
        p = q;
    }
    _quadratic = std::move(reduced);
}

auto QuadraticFormF2::evaluate(std::span<const bool> x) const -> bool
{
    if (x.size() != _variables)
        throw std::invalid_argument("assignment has the wrong length");
    bool value = _constant;
    for (auto & [i, j] : _quadratic)
        value ^= x[i] && x[j];
    for (unsigned i = 0 ; i < _variables ; ++i)
        value ^= _linear[i] && x[i];
    return value;
}

auto parsub::to_string(const QuadraticFormF2 & q) -> std::string
{
    std::string result;
    auto term = [&] (const std::string & t) {
        if (! result.empty())
            result += " + ";
        result += t;
    };
    for (auto & [i, j] : q.quadratic())
        term("X" + std::to_string(i + 1) + "X" + std::to_string(j + 1));
    for (unsigned i = 0 ; i < q.variables() ; ++i)
        if (q.linear()[i])
            term("X" + std::to_string(i + 1));
    if (q.constant())
        term("1");
    return result.empty() ? "0" : result;
}

auto parsub::encode_polynomial(const Graph & g) -> QuadraticFormF2
{
    return QuadraticFormF2(g.size(), g.edges());
}

namespace
{
    /// Dense working form: symmetric bit matrix of quadratic coefficients
    /// with zero diagonal, linear bits, constant, and the live variables.
    struct DenseForm
    {
        unsigned n;
        unsigned words;
        vector<uint64_t> quad;
        vector<uint64_t> lin;
        vector<uint64_t> live;
        bool constant;

        explicit DenseForm(const QuadraticFormF2 & q) :
            n(q.variables()),
            words((n + 63) / 64),
            quad(std::size_t(n) * words, 0),
            lin(words, 0),
            live(words, 0),
            constant(q.constant())
        {
            for (auto & [i, j] : q.quadratic()) {
                flip_quad(i, j);
            }
            for (unsigned i = 0 ; i < n ; ++i) {
                if (q.linear()[i])
                    lin[i / 64] ^= uint64_t(1) << (i % 64);
                live[i / 64] |= uint64_t(1) << (i % 64);
            }
        }

        auto row(unsigned i) -> uint64_t *
        {
            return quad.data() + std::size_t(i) * words;
        }

        auto bit(const uint64_t * v, unsigned i) const -> bool
        {
            return (v[i / 64] >> (i % 64)) & 1;
        }

        auto flip_quad(unsigned i, unsigned j) -> void
        {
            row(i)[j / 64] ^= uint64_t(1) << (j % 64);
            row(j)[i / 64] ^= uint64_t(1) << (i % 64);
        }

        auto live_count() const -> unsigned
        {
            unsigned c = 0;
            for (auto w : live)
                c += std::popcount(w);
            return c;
        }

        auto find_pair() -> std::optional<pair<unsigned, unsigned> >
        {
            for (unsigned i = 0 ; i < n ; ++i) {
                auto r = row(i);
                for (unsigned w = 0 ; w < words ; ++w)
                    if (r[w])
                        return pair{ i, w * 64 + unsigned(std::countr_zero(r[w])) };
            }
            return std::nullopt;
        }

        /**
         * With alpha = sum_{j} Q[a][j] x_j + l_a and beta = sum_j Q[b][j] x_j
         * + l_b over j outside {a, b}, replaces the a/b terms by alpha beta.
         * Expanding alpha beta: x_i x_j gets alpha_i beta_j + alpha_j beta_i,
         * x_i gets alpha_i beta_i + l_a beta_i + l_b alpha_i, constant l_a l_b.
         */
        auto eliminate(unsigned a, unsigned b) -> void
        {
            vector<uint64_t> alpha(row(a), row(a) + words), beta(row(b), row(b) + words);
            auto clear = [&] (vector<uint64_t> & v, unsigned i) { v[i / 64] &= ~(uint64_t(1) << (i % 64)); };
            clear(alpha, a); clear(alpha, b); clear(beta, a); clear(beta, b);
            bool la = bit(lin.data(), a), lb = bit(lin.data(), b);

            // drop every monomial touching a or b
            for (unsigned w = 0 ; w < words ; ++w) {
                auto ra = row(a)[w], rb = row(b)[w];
                while (ra) {
                    unsigned j = w * 64 + std::countr_zero(ra);
                    ra &= ra - 1;
                    row(j)[a / 64] &= ~(uint64_t(1) << (a % 64));
                }
                while (rb) {
                    unsigned j = w * 64 + std::countr_zero(rb);
                    rb &= rb - 1;
                    row(j)[b / 64] &= ~(uint64_t(1) << (b % 64));
                }
            }
            std::fill(row(a), row(a) + words, 0);
            std::fill(row(b), row(b) + words, 0);
            lin[a / 64] &= ~(uint64_t(1) << (a % 64));
            lin[b / 64] &= ~(uint64_t(1) << (b % 64));
            live[a / 64] &= ~(uint64_t(1) << (a % 64));
            live[b / 64] &= ~(uint64_t(1) << (b % 64));

            // quadratic part of alpha beta: row i gains beta if alpha_i, alpha if beta_i
            for (unsigned i = 0 ; i < n ; ++i) {
                bool ai = bit(alpha.data(), i), bi = bit(beta.data(), i);
                if (! ai && ! bi)
                    continue;
                auto r = row(i);
                for (unsigned w = 0 ; w < words ; ++w) {
                    uint64_t add = (ai ? beta[w] : 0) ^ (bi ? alpha[w] : 0);
                    r[w] ^= add;
                }
                // the diagonal contribution alpha_i beta_i belongs to the linear part
                r[i / 64] &= ~(uint64_t(1) << (i % 64));
            }

            for (unsigned w = 0 ; w < words ; ++w)
                lin[w] ^= (alpha[w] & beta[w]) ^ (la ? beta[w] : 0) ^ (lb ? alpha[w] : 0);
            constant ^= la && lb;
        }

        auto to_form() const -> QuadraticFormF2
        {
            vector<pair<unsigned, unsigned> > quadratic;
            for (unsigned i = 0 ; i < n ; ++i)
                for (unsigned j = i + 1 ; j < n ; ++j)
                    if (bit(quad.data() + std::size_t(i) * words, j))
                        quadratic.emplace_back(i, j);
            vector<bool> linear(n);
            for (unsigned i = 0 ; i < n ; ++i)
                linear[i] = bit(lin.data(), i);
            return QuadraticFormF2(n, std::move(quadratic), std::move(linear), constant);
        }
    };
}

auto parsub::eliminate_pair(const QuadraticFormF2 & q) -> PairElimination
{
    if (q.quadratic().empty())
        throw std::invalid_argument("no quadratic monomial to eliminate");
    DenseForm form(q);
    auto [a, b] = q.quadratic().front();
    form.eliminate(a, b);
    return PairElimination{ a, b, form.to_form() };
}

auto parsub::count_zeros(const QuadraticFormF2 & q) -> BigCount
{
    DenseForm form(q);

    // zeros(q) = 3 zeros(rest) + (2^(live-2) - zeros(rest)) = 2 zeros(rest) + 2^(live-2),
    // unwound from the innermost form outward
    unsigned eliminated_pairs = 0;
    while (auto p = form.find_pair()) {
        form.eliminate(p->first, p->second);
        ++eliminated_pairs;
    }

    unsigned live = form.live_count();
    bool has_linear = false;
    for (unsigned w = 0 ; w < form.words ; ++w)
        has_linear |= (form.lin[w] & form.live[w]) != 0;

    BigCount zeros;
    if (has_linear)
        zeros = BigCount(1) << (live - 1);
    else
        zeros = form.constant ? BigCount(0) : (BigCount(1) << live);

    for (unsigned step = 0 ; step < eliminated_pairs ; ++step) {
        // this step's rest lived on `live` variables, the form before it on live + 2
        zeros = 2 * zeros + (BigCount(1) << live);
        live += 2;
    }
    return zeros;
}

auto parsub::total_even_subgraphs(const Graph & g) -> BigCount
{
    return count_zeros(encode_polynomial(g));
}
