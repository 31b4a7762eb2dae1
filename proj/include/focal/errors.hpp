#ifndef FOCAL_ERRORS_HPP
#define FOCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace focal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroVectorError : Error {
    using Error::Error;
};

struct NotSymmetricError : Error {
    using Error::Error;
};

struct NotPositiveDefiniteError : Error {
    // 1-based index of the first non-positive leading principal minor.
    int minor_index;
    explicit NotPositiveDefiniteError(int idx)
        : Error("matrix is not positive definite (leading principal minor " +
                std::to_string(idx) + " is not positive)"),
          minor_index(idx) {}
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct RankMismatchError : Error {
    using Error::Error;
};

struct RankTooLargeError : Error {
    using Error::Error;
};

// Work limit exceeded. Never used for silent truncation: callers either get a
// complete result or this error.
struct ResourceError : Error {
    std::string phase;
    ResourceError(std::string ph, const std::string& what)
        : Error("resource budget exceeded in " + ph + ": " + what), phase(std::move(ph)) {}
};

struct ParseError : Error {
    int line;  // 1-based line number in the input, 0 if not line-specific
    ParseError(int ln, const std::string& what)
        : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

struct UnknownNameError : Error {
    using Error::Error;
};

struct CutoffMismatchError : Error {
    using Error::Error;
};

}  // namespace focal

#endif
