#ifndef PARSUB_PATTERN_HH
#define PARSUB_PATTERN_HH 1

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace parsub
{
    /**
     * A subset of a small ground set {0, ..., width-1}, as a bitmask. With
     * width = C(k, 2) the ground elements are the colour pairs {a, b}, a < b,
     * in colex order (see colour_pair_index), and a pattern is a graph on the
     * colour set [k].
     */
    struct EdgePattern
    {
        std::uint64_t bits = 0;
        unsigned width = 0;

        auto cardinality() const -> unsigned
        {
            return std::popcount(bits);
        }

        auto subset_of(const EdgePattern & other) const -> bool
        {
            return (bits & ~other.bits) == 0;
        }

        auto meet(const EdgePattern & other) const -> EdgePattern
        {
            return { bits & other.bits, width };
        }

        friend auto operator<=> (const EdgePattern &, const EdgePattern &) = default;
    };

    /// Bits per pattern for k colours: C(k, 2).
    inline auto colour_pair_width(unsigned k) -> unsigned
    {
        return k * (k - (k > 0 ? 1 : 0)) / 2;
    }

    /// Colex index of the colour pair {a, b} (colours are 1-based, a != b).
    inline auto colour_pair_index(unsigned a, unsigned b) -> unsigned
    {
        if (a > b)
            std::swap(a, b);
        return (b - 1) * (b - 2) / 2 + (a - 1);
    }

    /// The colour pair at a given colex index.
    auto colour_pair_at(unsigned index) -> std::pair<unsigned, unsigned>;

    inline auto full_pattern(unsigned width) -> EdgePattern
    {
        return { width >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width) - 1, width };
    }

    /// All 2^width patterns, ordered by cardinality then bitmask.
    auto all_patterns(unsigned width) -> std::vector<EdgePattern>;

    /// Sort by non-decreasing cardinality, ties by bitmask. Any x strictly
    /// below y then comes first.
    auto sort_by_cardinality(std::vector<EdgePattern> &) -> void;

    auto to_string(const EdgePattern &) -> std::string;

    /// Renders colour-pair patterns as e.g. "{12,13}".
    auto to_colour_pair_string(const EdgePattern &) -> std::string;
}

#endif
