#include <parsub/lattice.hh>
#include <parsub/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace parsub;

using std::uint64_t;
using std::vector;

namespace
{
    auto check_width(unsigned width) -> void
    {
        if (width >= 32)
            throw std::invalid_argument("lattice ground set too large");
    }

    auto same_width(const EdgePattern & x, const EdgePattern & y) -> void
    {
        if (x.width != y.width)
            throw std::invalid_argument("patterns over different ground sets");
    }

    /// Calls fn on every submask of x, including 0 and x itself.
    template <typename Fn_>
    auto for_each_submask(uint64_t x, Fn_ && fn) -> void
    {
        uint64_t z = x;
        while (true) {
            fn(z);
            if (z == 0)
                break;
            z = (z - 1) & x;
        }
    }
}

LatticeFn::LatticeFn(unsigned width) :
    _width(width)
{
    check_width(width);
    _table.resize(std::size_t(1) << width);
}

LatticeFn::LatticeFn(unsigned width, vector<BigInt> values) :
    LatticeFn(width)
{
    if (values.size() != _table.size())
        throw std::invalid_argument("lattice function table has the wrong size");
    for (std::size_t i = 0 ; i < values.size() ; ++i)
        _table[i] = std::move(values[i]);
}

auto LatticeFn::defined(const EdgePattern & x) const -> bool
{
    return x.width == _width && _table.at(x.bits).has_value();
}

auto LatticeFn::is_total() const -> bool
{
    return std::all_of(_table.begin(), _table.end(), [] (const auto & v) { return v.has_value(); });
}

auto LatticeFn::set(const EdgePattern & x, BigInt value) -> void
{
    if (x.width != _width)
        throw std::invalid_argument("pattern width does not match lattice function");
    _table.at(x.bits) = std::move(value);
}

auto LatticeFn::at(const EdgePattern & x) const -> const BigInt &
{
    if (x.width != _width)
        throw std::invalid_argument("pattern width does not match lattice function");
    auto & v = _table.at(x.bits);
    if (! v)
        throw std::invalid_argument("lattice function undefined at " + to_string(x));
    return *v;
}

auto parsub::mobius(const EdgePattern & x, const EdgePattern & y) -> int
{
    same_width(x, y);
    if (! x.subset_of(y))
        return 0;
    return ((y.cardinality() - x.cardinality()) % 2 == 0) ? 1 : -1;
}

auto parsub::mobius_by_recursion(const EdgePattern & x, const EdgePattern & y) -> int
{
    same_width(x, y);
    if (! x.subset_of(y))
        return 0;

    std::map<uint64_t, int> memo;
    auto mu = [&] (auto & self, uint64_t z) -> int {
        if (z == x.bits)
            return 1;
        if (auto i = memo.find(z) ; i != memo.end())
            return i->second;
        int sum = 0;
        // every w with x <= w < z
        for_each_submask(z & ~x.bits, [&] (uint64_t extra) {
            uint64_t w = x.bits | extra;
            if (w != z)
                sum += self(self, w);
        });
        memo.emplace(z, -sum);
        return -sum;
    };
    return mu(mu, y.bits);
}

auto parsub::totient_inductive(const LatticeFn & f, const EdgePattern & x) -> BigInt
{
    std::map<uint64_t, BigInt> memo;
    auto psi = [&] (auto & self, uint64_t z) -> BigInt {
        if (auto i = memo.find(z) ; i != memo.end())
            return i->second;
        BigInt result = f.at({ z, x.width });
        for_each_submask(z, [&] (uint64_t w) {
            if (w != z)
                result -= self(self, w);
        });
        memo.emplace(z, result);
        return result;
    };
    return psi(psi, x.bits);
}

auto parsub::totient_mobius(const LatticeFn & f, const EdgePattern & x) -> BigInt
{
    BigInt result = 0;
    for_each_submask(x.bits, [&] (uint64_t z) {
        EdgePattern p{ z, x.width };
        result += f.at(p) * mobius(p, x);
    });
    return result;
}

auto parsub::totient(const LatticeFn & f, const EdgePattern & x) -> BigInt
{
    auto a = totient_inductive(f, x), b = totient_mobius(f, x);
    if (a != b)
        throw ConsistencyError("totient routes disagree at " + to_string(x) + ": " + to_string(a) + " vs " + to_string(b));
    return a;
}

auto parsub::meet_matrix(const vector<EdgePattern> & s, const LatticeFn & f) -> BigMatrix
{
    std::set<uint64_t> seen;
    for (auto & x : s)
        if (! seen.insert(x.bits).second)
            throw std::invalid_argument("duplicate pattern " + to_string(x) + " in meet-matrix index set");

    BigMatrix a(s.size(), s.size());
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = i ; j < s.size() ; ++j) {
            a(i, j) = f.at(s[i].meet(s[j]));
            a(j, i) = a(i, j);
        }
    return a;
}

auto parsub::upward_closure_of_support(const LatticeFn & f) -> vector<EdgePattern>
{
    if (! f.is_total())
        throw std::invalid_argument("upward closure needs a total function");

    auto all = all_patterns(f.width());
    vector<EdgePattern> result;
    for (auto & x : all) {
        bool in = false;
        for_each_submask(x.bits, [&] (uint64_t z) {
            if (! in && f.at({ z, x.width }) != 0)
                in = true;
        });
        if (in)
            result.push_back(x);
    }
    return result;
}

auto parsub::check_linear_extension(const vector<EdgePattern> & s) -> void
{
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = 0 ; j < i ; ++j)
            if (s[i].subset_of(s[j]) && s[i] != s[j])
                throw std::invalid_argument("ordering violation: " + to_string(s[i]) + " is below " + to_string(s[j]) + " but comes after it");
}

auto parsub::det_via_formula(const vector<EdgePattern> & s, const LatticeFn & f) -> BigInt
{
    auto closure = upward_closure_of_support(f);
    std::set<EdgePattern> expected(closure.begin(), closure.end()), given(s.begin(), s.end());
    if (given.size() != s.size())
        throw std::invalid_argument("duplicate pattern in index set");
    if (expected != given)
        throw std::invalid_argument("index set is not the upward closure of the support");
    check_linear_extension(s);

    // Below-support submasks have f = 0, so summing over all submasks is the
    // same as summing over those in s.
    BigInt det = 1;
    for (auto & x : s) {
        det *= totient_mobius(f, x);
        if (det == 0)
            break;
    }
    return det;
}

auto parsub::bhat_factors(const vector<EdgePattern> & s, const LatticeFn & f, const vector<EdgePattern> & p) -> BhatFactors
{
    BhatFactors result{ BigMatrix(s.size(), p.size()), BigMatrix(p.size(), p.size()) };
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = 0 ; j < p.size() ; ++j)
            result.e(i, j) = p[j].subset_of(s[i]) ? 1 : 0;
    for (std::size_t r = 0 ; r < p.size() ; ++r)
        result.lambda(r, r) = totient(f, p[r]);
    return result;
}

auto parsub::verify_decomposition(const vector<EdgePattern> & s, const LatticeFn & f, const BhatFactors & factors) -> DecompositionCheck
{
    auto a = meet_matrix(s, f);
    auto product = factors.e * factors.lambda * factors.e.transpose();
    if (product.rows() != a.rows() || product.cols() != a.cols())
        return { false, std::pair<std::size_t, std::size_t>{ 0, 0 } };
    auto diff = a.first_difference(product);
    return { ! diff.has_value(), diff };
}

auto parsub::decomposition_check(const vector<EdgePattern> & s, const LatticeFn & f, const vector<EdgePattern> & p) -> DecompositionCheck
{
    return verify_decomposition(s, f, bhat_factors(s, f, p));
}
