#include <parsub/errors.hh>

using namespace parsub;

InputError::InputError(const std::string & message, unsigned line) :
    std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    _line(line)
{
}

BudgetExceeded::BudgetExceeded(const std::string & what, const std::string & required, std::uint64_t limit) :
    std::runtime_error(what + ": requires " + required + ", budget is " + std::to_string(limit)),
    _required(required),
    _limit(limit)
{
}
