#include <parsub/subsets.hh>
#include <parsub/big.hh>

#include <stdexcept>

using namespace parsub;

namespace
{
    auto checked_binomial(unsigned n, unsigned k) -> std::uint64_t
    {
        auto b = binomial_u64(n, k);
        if (! b)
            throw std::overflow_error("C(" + std::to_string(n) + ", " + std::to_string(k) + ") does not fit in 64 bits");
        return *b;
    }
}

auto parsub::colex_rank(std::span<const Vertex> combination) -> std::uint64_t
{
    std::uint64_t result = 0;
    for (unsigned i = 0 ; i < combination.size() ; ++i)
        result += checked_binomial(combination[i], i + 1);
    return result;
}

auto parsub::colex_unrank(unsigned n, unsigned k, std::uint64_t index) -> std::vector<Vertex>
{
    if (k > n || index >= checked_binomial(n, k))
        throw std::out_of_range("colex index out of range");

    std::vector<Vertex> result(k);
    Vertex upper = n;
    for (unsigned i = k ; i > 0 ; --i) {
        // largest c < upper with C(c, i) <= index
        Vertex c = upper - 1;
        while (checked_binomial(c, i) > index)
            --c;
        result[i - 1] = c;
        index -= checked_binomial(c, i);
        upper = c;
    }
    return result;
}

SubsetCursor::SubsetCursor(unsigned n, unsigned k, std::uint64_t index) :
    _n(n),
    _k(k),
    _index(index)
{
    if (k > n)
        _done = true;
    else if (index >= checked_binomial(n, k))
        _done = true;
    else
        _combination = colex_unrank(n, k, index);
}

auto SubsetCursor::advance() -> unsigned
{
    if (_done)
        return _k;

    for (unsigned i = 0 ; i < _k ; ++i) {
        Vertex limit = (i + 1 < _k) ? _combination[i + 1] : _n;
        if (_combination[i] + 1 < limit) {
            ++_combination[i];
            for (unsigned j = 0 ; j < i ; ++j)
                _combination[j] = j;
            ++_index;
            return i;
        }
    }

    _done = true;
    ++_index;
    return _k;
}

auto SubsetCursor::to_set() const -> VertexSet
{
    return VertexSet::from_members(_n, _combination);
}

KSubsets::KSubsets(unsigned n, unsigned k) :
    _n(n),
    _k(k),
    _begin(0),
    _end(k > n ? 0 : checked_binomial(n, k))
{
}

KSubsets::KSubsets(unsigned n, unsigned k, std::uint64_t begin, std::uint64_t end) :
    _n(n),
    _k(k),
    _begin(begin),
    _end(end)
{
    auto total = k > n ? 0 : checked_binomial(n, k);
    if (begin > end || end > total)
        throw std::out_of_range("subset index range out of bounds");
}

auto KSubsets::split(unsigned parts) const -> std::vector<KSubsets>
{
    if (0 == parts)
        parts = 1;
    std::vector<KSubsets> result;
    auto total = size();
    for (unsigned p = 0 ; p < parts ; ++p) {
        auto lo = _begin + total / parts * p + std::min<std::uint64_t>(p, total % parts);
        auto hi = lo + total / parts + (p < total % parts ? 1 : 0);
        result.emplace_back(_n, _k, lo, hi);
    }
    return result;
}

KSubsets::Iterator::Iterator(unsigned n, unsigned k, std::uint64_t index, std::uint64_t remaining) :
    _cursor(n, k, remaining ? index : 0),
    _remaining(remaining)
{
}

auto KSubsets::Iterator::operator++ () -> Iterator &
{
    --_remaining;
    if (_remaining)
        _cursor.advance();
    return *this;
}

auto KSubsets::begin() const -> Iterator
{
    return Iterator(_n, _k, _begin, size());
}
