#include <parsub/pattern.hh>

#include <algorithm>
#include <stdexcept>

using namespace parsub;

auto parsub::colour_pair_at(unsigned index) -> std::pair<unsigned, unsigned>
{
    unsigned b = 2;
    while ((b - 1) * b / 2 <= index)
        ++b;
    return { index - (b - 1) * (b - 2) / 2 + 1, b };
}

auto parsub::all_patterns(unsigned width) -> std::vector<EdgePattern>
{
    if (width > 24)
        throw std::length_error("refusing to list 2^" + std::to_string(width) + " patterns");
    std::vector<EdgePattern> result;
    result.reserve(std::size_t(1) << width);
    for (std::uint64_t b = 0 ; b < (std::uint64_t(1) << width) ; ++b)
        result.push_back({ b, width });
    sort_by_cardinality(result);
    return result;
}

auto parsub::sort_by_cardinality(std::vector<EdgePattern> & patterns) -> void
{
    std::sort(patterns.begin(), patterns.end(), [] (const EdgePattern & a, const EdgePattern & b) {
            return std::make_pair(a.cardinality(), a.bits) < std::make_pair(b.cardinality(), b.bits);
            });
}

auto parsub::to_string(const EdgePattern & p) -> std::string
{
    std::string result = "{";
    bool first = true;
    for (unsigned i = 0 ; i < p.width ; ++i)
        if ((p.bits >> i) & 1) {
            if (! first)
                result += ",";
            first = false;
            result += std::to_string(i);
        }
    return result + "}";
}

auto parsub::to_colour_pair_string(const EdgePattern & p) -> std::string
{
    std::string result = "{";
    bool first = true;
    for (unsigned i = 0 ; i < p.width ; ++i)
        if ((p.bits >> i) & 1) {
            if (! first)
                result += ",";
            first = false;
            auto [a, b] = colour_pair_at(i);
            result += std::to_string(a) + "-" + std::to_string(b);
        }
    return result + "}";
}
