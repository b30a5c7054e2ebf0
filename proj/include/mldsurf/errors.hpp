#ifndef MLDSURF_ERRORS_HPP
#define MLDSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mldsurf {

// Error kinds that surface through the CLI as distinct exit codes.
enum class ErrorKind {
    ZeroPolynomial,
    NotHomogeneous,
    NotDivisible,
    NotMinimal,
    PointOutsideChart,
    IrrationalCenter,
    MaxStepsExceeded,
    NotResolved,
    SyntaxError,
    ZeroGenerator,
    NonpositiveExponent,
    UnsupportedMode,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected, const std::string& what)
        : Error(ErrorKind::SyntaxError, what), position_(position), expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

inline Error internal_error(const std::string& what) { return Error(ErrorKind::Internal, what); }

} // namespace mldsurf

#endif
