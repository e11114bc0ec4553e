#ifndef PARSUB_BIG_HH
#define PARSUB_BIG_HH 1

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace parsub
{
    using BigInt = boost::multiprecision::cpp_int;
    using BigRational = boost::multiprecision::cpp_rational;

    /// Exact subset / tuple counts.
    using BigCount = BigInt;

    auto binomial(std::uint64_t n, std::uint64_t k) -> BigInt;

    auto factorial(std::uint64_t n) -> BigInt;

    /// C(n, k) when it fits in 64 bits.
    auto binomial_u64(std::uint64_t n, std::uint64_t k) -> std::optional<std::uint64_t>;

    auto to_string(const BigInt &) -> std::string;

    auto to_string(const BigRational &) -> std::string;

    auto to_double(const BigRational &) -> double;
}

#endif
