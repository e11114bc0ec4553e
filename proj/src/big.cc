#include <parsub/big.hh>

using namespace parsub;

auto parsub::binomial(std::uint64_t n, std::uint64_t k) -> BigInt
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;

    BigInt result = 1;
    for (std::uint64_t i = 1 ; i <= k ; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

auto parsub::factorial(std::uint64_t n) -> BigInt
{
    BigInt result = 1;
    for (std::uint64_t i = 2 ; i <= n ; ++i)
        result *= i;
    return result;
}

auto parsub::binomial_u64(std::uint64_t n, std::uint64_t k) -> std::optional<std::uint64_t>
{
    auto b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return b.convert_to<std::uint64_t>();
}

auto parsub::to_string(const BigInt & v) -> std::string
{
    return v.str();
}

auto parsub::to_string(const BigRational & v) -> std::string
{
    return v.str();
}

auto parsub::to_double(const BigRational & v) -> double
{
    return v.convert_to<double>();
}
