#ifndef PARSUB_ERRORS_HH
#define PARSUB_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parsub
{
    /// Malformed input document (edge list, colouring). Carries the 1-based
    /// line number where the problem was found, or 0 when not line-specific.
    class InputError : public std::runtime_error
    {
        private:
            unsigned _line;

        public:
            InputError(const std::string & message, unsigned line = 0);

            auto line() const -> unsigned
            {
                return _line;
            }
    };

    /// An enumeration or sampling run would exceed its configured budget.
    /// Never returned as a partial result.
    class BudgetExceeded : public std::runtime_error
    {
        private:
            std::string _required;
            std::uint64_t _limit;

        public:
            BudgetExceeded(const std::string & what, const std::string & required, std::uint64_t limit);

            /// Decimal rendering of the amount of work that was asked for.
            auto required() const -> const std::string &
            {
                return _required;
            }

            auto limit() const -> std::uint64_t
            {
                return _limit;
            }
    };

    /// An internal identity that must hold exactly did not (e.g. a non-integral
    /// solution in the clique reduction, two totient routes disagreeing).
    class ConsistencyError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif
