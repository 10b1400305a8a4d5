#ifndef FRESCO_ERRORS_HPP
#define FRESCO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fresco
{

enum class ErrorKind {
    GuardExhausted,
    RankUnstable,
    NotHomogeneous,
    NotMonic,
    NonUnitSeries,
    NotNormal,
    IndexOutOfRange,
    SearchFailed,
    EmptyKernel,
    NoRoot,
    SearchExhausted,
    WitnessNotFound,
    NoAlphaPart,
    RegistryMismatch,
    InvalidInput,
};

const char *error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI)
// can map it to a retry, a report entry or an exit code.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept
    {
        return kind_;
    }

private:
    ErrorKind kind_;
};

} // namespace fresco

#endif
